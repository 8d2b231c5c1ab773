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

// Closed-form evolution under Milburn's intrinsic-decoherence equation
//
//   d rho / dt = -i [H, rho] - (gamma / 2) [H, [H, rho]].
//
// In the dressed basis every coherence |l><m| picks up
// exp(-i w t - (gamma t / 2) w^2) with w = E_l - E_m, and populations are
// frozen. The initial state is rho_A (x) |eta><eta| with
// rho_A = p |e><e| + (1 - p) |g><g| and |eta> = sum b_n |n>.

#include <variant>

#include "jcd/jcm_model.hpp"
#include "jcd/types.hpp"

namespace jcd {

/// Fock state |k>. dim = 0 selects the smallest usable truncation, k + 2.
struct NumberState {
    int k = 0;
    int dim = 0;
};

/// Coherent state |alpha>, alpha = modulus * exp(i phase), truncated to dim
/// Fock states.
struct CoherentState {
    double modulus = 0.0;
    double phase = 0.0;
    int dim = 30;
};

using FieldInitSpec = std::variant<NumberState, CoherentState>;

/// Field truncation dimension for the given initial-state variant.
int field_dim(const FieldInitSpec &spec);

struct InitialState {
    double p = 1.0; ///< excited-state population of the atom
    FieldInitSpec field = NumberState{};

    void validate() const;
};

/// Largest Poisson tail mass sum_{n >= dim} |b_n|^2 accepted for coherent inputs.
inline constexpr double kCoherentTailTolerance = 1e-8;

/// P(n >= dim) for a Poisson distribution with mean modulus^2.
double coherent_tail_mass(double modulus, int dim);

/// Smallest dim whose coherent tail mass is <= tol.
int required_coherent_dim(double modulus, double tol = kCoherentTailTolerance);

/// b_n for n < dim. Throws TruncationError if the coherent tail is too heavy.
CVector field_initial_coefficients(const FieldInitSpec &spec);

/// rho = [[A, C], [C^dag, B]] with A = <e|rho|e>, B = <g|rho|g>, C = <e|rho|g>
/// as operators on the truncated field space.
struct BlockedState {
    CMatrix A;
    CMatrix B;
    CMatrix C;
    double t = 0.0;

    [[nodiscard]] int dim() const noexcept { return static_cast<int>(A.rows()); }
    [[nodiscard]] CMatrix assemble() const;
    [[nodiscard]] double trace() const { return A.trace().real() + B.trace().real(); }

    static BlockedState from_dense(const CMatrix &rho, double t = 0.0);
};

/// rho_A(0) (x) |eta><eta|.
BlockedState initial_blocked_state(const InitialState &init);

/// State at time t from the closed-form element families. Terms referencing
/// Fock indices outside [0, dim) vanish. Throws ConfigError for t < 0 and
/// TruncationError via field_initial_coefficients.
BlockedState evolve_general(const InitialState &init, const ModelParams &params, double t);

/// Dephasing-invariant part M^E of the initial state: every dressed-basis
/// element whose transition frequency exceeds 1e-12 in modulus is dropped.
/// Throws NoSteadyState for gamma == 0.
BlockedState steady_state_general(const InitialState &init, const ModelParams &params);

/// Same evolution, computed for an arbitrary blocked state by rotating into
/// the eigenbasis of the truncated Hamiltonian, filtering and rotating back.
/// The top state |e, dim-1> has no partner inside the truncation and is
/// treated as a bare eigenstate.
BlockedState evolve_dressed_basis(const BlockedState &rho, const ModelParams &params, double t);

/// Projection onto the dephasing-invariant part, for an arbitrary blocked
/// state (idempotent). Throws NoSteadyState for gamma == 0.
BlockedState project_steady(const BlockedState &rho, const ModelParams &params);

/// Closed-form elements of one excitation manifold for an atom starting in
/// |e,k>: A = <e,k|rho|e,k>, B = <g,k+1|rho|g,k+1>, C = <e,k|rho|g,k+1>.
struct ManifoldElements {
    double A;
    cplx C;
    double B;
};

ManifoldElements number_manifold(int k, const ModelParams &params, double t);
ManifoldElements number_manifold_steady(int k, const ModelParams &params);

/// 6 x 6 state on {|e>,|g>} (x) {|k-1>, |k>, |k+1>} for the field in |k>.
/// The |k-1> row and column are structurally zero for k = 0.
CMatrix evolve_number(int k, double p, const ModelParams &params, double t);
CMatrix steady_state_number(int k, double p, const ModelParams &params);

/// Restriction of a blocked state to the field window {k-1, k, k+1}, laid
/// out like evolve_number. Indices outside the truncation read as zero.
CMatrix number_window(const BlockedState &rho, int k);

/// Frobenius norm of the central difference (rho(t+h) - rho(t-h)) / 2h
/// minus the master-equation right-hand side at rho(t). Only number-state
/// inputs are supported; their dynamics closes exactly on the 6-dim window.
double master_equation_residual(const InitialState &init, const ModelParams &params, double t,
                                double h);

namespace detail {
/// Residual with the state evolved under `evolution` and the right-hand side
/// built from `generator`. Used to inject faults into the validation suite.
double master_equation_residual(const InitialState &init, const ModelParams &evolution,
                                const ModelParams &generator, double t, double h);

/// H restricted to the number-state window of evolve_number.
CMatrix window_hamiltonian(int k, const ModelParams &params);
} // namespace detail

} // namespace jcd
