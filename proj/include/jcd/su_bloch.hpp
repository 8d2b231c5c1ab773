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
#pragma once

#include <array>
#include <memory>
#include <vector>

#include "jcd/types.hpp"

namespace jcd {

/// Traceless Hermitian generators of SU(N) normalised to Tr(G_i G_j) = 2 delta_ij.
///
/// Ordering is fixed: symmetric off-diagonal generators for all pairs j < k
/// (row-major), then the antisymmetric ones in the same pair order, then the
/// N - 1 diagonal generators diag(1, ..., 1, -l, 0, ...) * sqrt(2 / (l (l + 1))).
/// For N = 2 this yields sigma_x, sigma_y, sigma_z.
class GeneratorBasis {
  public:
    /// Throws InvalidDimension for N < 2.
    explicit GeneratorBasis(int dim);

    [[nodiscard]] int dim() const noexcept { return dim_; }
    [[nodiscard]] std::size_t size() const noexcept { return generators_.size(); }
    [[nodiscard]] const CMatrix &operator[](std::size_t i) const { return generators_[i]; }
    [[nodiscard]] const std::vector<CMatrix> &generators() const noexcept { return generators_; }

  private:
    int dim_;
    std::vector<CMatrix> generators_;
};

/// Process-wide cache; bases are immutable and may be shared across threads.
std::shared_ptr<const GeneratorBasis> cached_basis(int dim);

/// Pauli matrices in the {|e>, |g>} basis, sigma_z = |e><e| - |g><g|.
const std::array<Eigen::Matrix2cd, 3> &pauli();

/// Bloch form of a 2 x N state:
///   rho = (1/2N) (I + sum x_i s_i (x) I + I (x) sum y_j G_j + sum t_ij s_i (x) G_j).
struct BlochDecomposition {
    Eigen::Vector3d x;
    RVector y;
    Eigen::Matrix<double, 3, Eigen::Dynamic> T;
};

/// Field operators obtained by tracing out the atom against (I, s_x, s_y, s_z):
/// for a blocked state [[A, C], [C^dag, B]] these are A + B, C + C^dag,
/// i(C - C^dag) and A - B.
struct AtomMoments {
    CMatrix identity;
    std::array<CMatrix, 3> pauli;
};

AtomMoments atom_moments(const CMatrix &rho, int field_dim);

/// x_i = Tr[(s_i (x) I) rho], y_j = (N/2) Tr[(I (x) G_j) rho],
/// t_ij = (N/2) Tr[(s_i (x) G_j) rho].
///
/// Throws DimensionMismatch when rho is not 2N x 2N and ValidationError when
/// rho deviates from Hermitian by more than 1e-10 entrywise. The trace is not
/// checked here; callers that need a density matrix validate it separately.
BlochDecomposition bloch_decompose(const CMatrix &rho, const GeneratorBasis &basis);

/// Inverse of bloch_decompose. The result is Hermitian by construction.
CMatrix bloch_reconstruct(const BlochDecomposition &decomp, const GeneratorBasis &basis);

} // namespace jcd
