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

// Correlation measures for qubit (x) qudit states. All functions take the
// composite state in the atom-major 2N x 2N layout of jcd/types.hpp.

#include <vector>

#include "jcd/su_bloch.hpp"
#include "jcd/types.hpp"

namespace jcd {

struct StateDiagnostics {
    double trace_error;          ///< |Tr rho - 1|
    double purity;               ///< Tr rho^2
    double min_eigenvalue;
    double hermiticity_residual; ///< max |rho - rho^dag|
};

/// Never throws on well-formed square input.
StateDiagnostics state_diagnostics(const CMatrix &rho);

struct DensityTolerance {
    double trace = 1e-8;
    double hermiticity = 1e-10;
    double min_eigenvalue = -1e-10;
};

/// Throws ValidationError when rho is not a density matrix within tolerance.
void validate_density(const CMatrix &rho, const DensityTolerance &tol = {});

/// Closed-form geometric discord with the measurement on the qubit:
/// (xi_2 + xi_3) / 2N where xi_1 >= xi_2 >= xi_3 are the eigenvalues of
/// x x^t + (2/N) T T^t.
double geometric_discord(const CMatrix &rho, const GeneratorBasis &basis);
double geometric_discord(const CMatrix &rho, int field_dim);

struct OracleGrid {
    int theta_points = 128;
    int phi_points = 256;
};

/// Brute-force discord: min over qubit projective measurements {P, 1 - P}
/// of ||rho - sum_i (P_i (x) I) rho (P_i (x) I)||^2, searched on a uniform
/// (theta, phi) grid followed by golden-section refinement of each angle.
/// Needs at least 64 points per angle.
double geometric_discord_oracle(const CMatrix &rho, int field_dim, const OracleGrid &grid = {});

/// The atom-side partial transpose [[A, C^dag], [C, B]].
CMatrix partial_transpose_atom(const CMatrix &rho, int field_dim);

/// Sum of |mu| over the negative eigenvalues mu of the atom partial transpose.
double negativity(const CMatrix &rho, int field_dim);

/// Squared Schmidt coefficients of a pure bipartite state.
struct SchmidtSpectrum {
    std::vector<double> weights;
};

/// Schmidt weights of a 2N-component state vector (atom-major layout).
SchmidtSpectrum schmidt_spectrum(const CVector &psi, int field_dim);

/// 1 - sum s_i^2. Throws ValidationError for negative or unnormalised weights.
double pure_state_discord(const SchmidtSpectrum &spectrum);

struct CorrelationReport {
    double geometric_discord;
    double negativity;
    double purity;
    double trace_error;
};

/// Validates rho and evaluates every measure in one pass.
CorrelationReport correlation_report(const CMatrix &rho, const GeneratorBasis &basis,
                                     const DensityTolerance &tol = {});

} // namespace jcd
