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

#include "doctest.h"
#include "jcd/error.hpp"
#include "jcd/random_states.hpp"
#include "jcd/su_bloch.hpp"

using namespace jcd;

namespace {

double gram_error(const GeneratorBasis &b, double *trace_error) {
    double worst = 0.0;
    *trace_error = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        *trace_error = std::max(*trace_error, std::abs(b[i].trace()));
        for (std::size_t j = i; j < b.size(); ++j) {
            const cplx g = (b[i] * b[j]).trace();
            worst = std::max(worst, std::abs(g - (i == j ? 2.0 : 0.0)));
        }
    }
    return worst;
}

CMatrix embed_bell(int n) {
    CVector psi = CVector::Zero(2 * n);
    psi(0) = 1.0 / std::sqrt(2.0);     // |e,0>
    psi(n + 1) = 1.0 / std::sqrt(2.0); // |g,1>
    return psi * psi.adjoint();
}

} // namespace

TEST_CASE("dimension below two is rejected") {
    CHECK_THROWS_AS(GeneratorBasis(1), InvalidDimension);
    CHECK_THROWS_AS(GeneratorBasis(0), InvalidDimension);
}

TEST_CASE("N = 2 gives the Pauli matrices") {
    const GeneratorBasis b(2);
    REQUIRE(b.size() == 3);
    for (int i = 0; i < 3; ++i)
        CHECK((b[i] - CMatrix(pauli()[i])).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("generators are traceless and orthonormal") {
    for (int n : {3, 4, 7}) {
        const GeneratorBasis b(n);
        CHECK(b.size() == static_cast<std::size_t>(n * n - 1));
        double tr = 0.0;
        CHECK(gram_error(b, &tr) <= 1e-12);
        CHECK(tr <= 1e-14);
        for (const auto &g : b.generators())
            CHECK((g - g.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("N = 30 basis") {
    const GeneratorBasis &b = *cached_basis(30);
    REQUIRE(b.size() == 899);
    double tr = 0.0;
    const double gram = gram_error(b, &tr);
    CHECK(tr <= 1e-14);
    CHECK(gram <= 1e-12);
}

TEST_CASE("cached basis is shared") {
    CHECK(cached_basis(5) == cached_basis(5));
    CHECK(cached_basis(5)->dim() == 5);
}

TEST_CASE("maximally mixed state has an empty decomposition") {
    const int n = 3;
    const CMatrix rho = CMatrix::Identity(2 * n, 2 * n) / (2.0 * n);
    const auto d = bloch_decompose(rho, *cached_basis(n));
    CHECK(d.x.norm() <= 1e-15);
    CHECK(d.y.norm() <= 1e-15);
    CHECK(d.T.norm() <= 1e-15);
}

TEST_CASE("excited atom with mixed field") {
    const int n = 3;
    CMatrix rho = CMatrix::Zero(2 * n, 2 * n);
    rho.topLeftCorner(n, n) = CMatrix::Identity(n, n) / double(n);
    const auto d = bloch_decompose(rho, *cached_basis(n));
    CHECK((d.x - Eigen::Vector3d(0, 0, 1)).norm() <= 1e-15);
    CHECK(d.y.norm() <= 1e-15);
    CHECK(d.T.norm() <= 1e-15);

    BlochDecomposition z{Eigen::Vector3d(0, 0, 1), RVector::Zero(8), Eigen::Matrix<double, 3, Eigen::Dynamic>::Zero(3, 8)};
    CHECK((bloch_reconstruct(z, *cached_basis(n)) - rho).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("embedded Bell state correlation matrix") {
    const int n = 3;
    const auto d = bloch_decompose(embed_bell(n), *cached_basis(n));
    CHECK(d.x.norm() <= 1e-15);
    const Eigen::Matrix3d k = d.x * d.x.transpose() + (2.0 / n) * d.T * d.T.transpose();
    CHECK((k - 1.5 * Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("zero decomposition reconstructs the maximally mixed state") {
    const int n = 4;
    BlochDecomposition z{Eigen::Vector3d::Zero(), RVector::Zero(15), Eigen::Matrix<double, 3, Eigen::Dynamic>::Zero(3, 15)};
    CHECK((bloch_reconstruct(z, *cached_basis(n)) - CMatrix::Identity(8, 8) / 8.0).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("round trips on random states") {
    random::Engine rng(11);
    for (int i = 0; i < 100; ++i) {
        const int n = 2 + i % 5;
        const auto &basis = *cached_basis(n);
        const CMatrix rho = random::density_matrix(2 * n, rng);
        const auto d = bloch_decompose(rho, basis);
        const CMatrix back = bloch_reconstruct(d, basis);
        CHECK((back - rho).cwiseAbs().maxCoeff() <= 1e-12);
        CHECK((back - back.adjoint()).cwiseAbs().maxCoeff() == 0.0);

        const auto d2 = bloch_decompose(back, basis);
        CHECK((d2.x - d.x).cwiseAbs().maxCoeff() <= 1e-12);
        CHECK((d2.y - d.y).cwiseAbs().maxCoeff() <= 1e-12);
        CHECK((d2.T - d.T).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("product states factorize the correlation matrix") {
    random::Engine rng(12);
    const int n = 4;
    for (int i = 0; i < 10; ++i) {
        const CMatrix ra = random::density_matrix(2, rng);
        const CMatrix rf = random::density_matrix(n, rng);
        CMatrix rho(2 * n, 2 * n);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                rho.block(a * n, b * n, n, n) = ra(a, b) * rf;
        const auto d = bloch_decompose(rho, *cached_basis(n));
        CHECK((d.T - d.x * d.y.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("decompose rejects malformed input") {
    CHECK_THROWS_AS(bloch_decompose(CMatrix::Identity(5, 5), *cached_basis(2)), DimensionMismatch);
    CMatrix rho = CMatrix::Identity(4, 4) / 4.0;
    rho(0, 1) = cplx(0.1, 0.0);
    CHECK_THROWS_AS(bloch_decompose(rho, *cached_basis(2)), ValidationError);
}
