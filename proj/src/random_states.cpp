// Copyright 2026 The jcd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "jcd/random_states.hpp"

namespace jcd::random {

CMatrix ginibre(int rows, int cols, Engine &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix g(rows, cols);
    for (Eigen::Index j = 0; j < g.cols(); ++j)
        for (Eigen::Index i = 0; i < g.rows(); ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = {re, im};
        }
    return g;
}

CMatrix density_matrix(int dim, Engine &rng) {
    const CMatrix g = ginibre(dim, dim, rng);
    CMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return 0.5 * (rho + rho.adjoint());
}

CVector pure_state(int dim, Engine &rng) {
    CVector psi = ginibre(dim, 1, rng).col(0);
    return psi / psi.norm();
}

CMatrix haar_unitary(int dim, Engine &rng) {
    const CMatrix g = ginibre(dim, dim, rng);
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < dim; ++i) {
        const cplx d = r(i, i);
        q.col(i) *= d / std::abs(d);
    }
    return q;
}

} // namespace jcd::random
