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

// Jaynes-Cummings model in the rotating-wave approximation.
//
// Units: the atomic transition frequency omega_A is the unit of energy, so
// detuning and coupling are given in units of omega_A and time in 1/omega_A.
// H = (omega_A / 2) s_z + omega_F a^dag a + g (s_+ a + s_- a^dag) conserves
// K = a^dag a + s_z / 2; its invariant subspaces are {|g,0>} and the
// manifolds {|e,n>, |g,n+1>}, n >= 0.

#include <array>

#include "jcd/types.hpp"

namespace jcd {

struct ModelParams {
    double omega_a = 1.0;
    double g = 0.1;
    double delta = 0.0; ///< omega_A - omega_F
    double gamma = 0.0; ///< dephasing rate, units of 1/omega_A

    [[nodiscard]] double omega_f() const noexcept { return omega_a - delta; }

    /// Throws ConfigError unless g > 0, gamma >= 0 and all fields are finite.
    void validate() const;

    /// The RWA is questionable beyond g / omega_A = 0.3; advisory only.
    [[nodiscard]] bool rwa_questionable() const noexcept { return g > 0.3 * omega_a; }
};

/// Omega_n = sqrt((Delta/2)^2 + g^2 (n+1)).
double rabi_frequency(int n, const ModelParams &params);

/// theta_n with tan(theta_n) = 2 g sqrt(n+1) / (2 Omega_n - Delta), in (0, pi/2).
/// Throws DegenerateCoupling when g == 0.
double mixing_angle(int n, const ModelParams &params);

/// Ground-manifold energy E_0 = -omega_A / 2 of |g,0>.
inline double ground_energy(const ModelParams &params) noexcept { return -0.5 * params.omega_a; }

struct DressedManifold {
    int n;
    double rabi;  ///< Omega_n
    double theta; ///< mixing angle
    double e_plus;
    double e_minus;
    /// Components in the {|e,n>, |g,n+1>} basis:
    /// |+> = (sin theta, cos theta), |-> = (cos theta, -sin theta).
    Eigen::Vector2d v_plus;
    Eigen::Vector2d v_minus;
};

DressedManifold dressed_eigensystem(int n, const ModelParams &params);

/// Dressed level label. Ground refers to |g,0> and ignores the manifold index.
enum class Branch { Plus, Minus, Ground };

struct Level {
    Branch branch;
    int n = 0;
};

double level_energy(Level level, const ModelParams &params);

/// omega_{ab}^{nm} = E_a^(n) - E_b^(m); with b = Ground this is omega_a^(n).
double transition_frequency(Level from, Level to, const ModelParams &params);

/// Dense H on {|e>,|g>} (x) {|0>, ..., |N_F - 1>}, atom index major.
/// Throws InvalidDimension for field_dim < 2.
CMatrix hamiltonian_matrix(const ModelParams &params, int field_dim);

} // namespace jcd
