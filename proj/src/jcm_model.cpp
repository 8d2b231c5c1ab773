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

#include "jcd/jcm_model.hpp"

#include <cmath>
#include <string>

#include "jcd/error.hpp"

namespace jcd {

void ModelParams::validate() const {
    if (!std::isfinite(omega_a) || !std::isfinite(g) || !std::isfinite(delta) ||
        !std::isfinite(gamma))
        throw ConfigError("model parameters must be finite");
    if (omega_a <= 0.0)
        throw ConfigError("omega_A must be positive");
    if (g <= 0.0)
        throw ConfigError("coupling g must be positive, got " + std::to_string(g));
    if (gamma < 0.0)
        throw ConfigError("dephasing rate gamma must be non-negative, got " + std::to_string(gamma));
}

double rabi_frequency(int n, const ModelParams &params) {
    if (params.delta == 0.0)
        return params.g * std::sqrt(n + 1.0);
    const double half_delta = 0.5 * params.delta;
    return std::sqrt(half_delta * half_delta + params.g * params.g * (n + 1));
}

double mixing_angle(int n, const ModelParams &params) {
    if (params.g == 0.0)
        throw DegenerateCoupling("mixing angle undefined for g = 0");
    // denominator 2 Omega_n - Delta > 0 whenever g != 0
    return std::atan2(2.0 * params.g * std::sqrt(n + 1.0),
                      2.0 * rabi_frequency(n, params) - params.delta);
}

DressedManifold dressed_eigensystem(int n, const ModelParams &params) {
    DressedManifold m;
    m.n = n;
    m.rabi = rabi_frequency(n, params);
    m.theta = mixing_angle(n, params);
    const double centre = params.omega_f() * (n + 0.5);
    m.e_plus = centre + m.rabi;
    m.e_minus = centre - m.rabi;
    const double s = std::sin(m.theta), c = std::cos(m.theta);
    m.v_plus = {s, c};
    m.v_minus = {c, -s};
    return m;
}

double level_energy(Level level, const ModelParams &params) {
    switch (level.branch) {
    case Branch::Ground:
        return ground_energy(params);
    case Branch::Plus:
        return params.omega_f() * (level.n + 0.5) + rabi_frequency(level.n, params);
    case Branch::Minus:
        return params.omega_f() * (level.n + 0.5) - rabi_frequency(level.n, params);
    }
    return 0.0;
}

double transition_frequency(Level from, Level to, const ModelParams &params) {
    return level_energy(from, params) - level_energy(to, params);
}

CMatrix hamiltonian_matrix(const ModelParams &params, int field_dim) {
    if (field_dim < 2)
        throw InvalidDimension("field truncation must be >= 2, got " + std::to_string(field_dim));
    const int N = field_dim;
    CMatrix H = CMatrix::Zero(2 * N, 2 * N);
    for (int n = 0; n < N; ++n) {
        const int e = composite_index(AtomLevel::Excited, n, N);
        const int gr = composite_index(AtomLevel::Ground, n, N);
        H(e, e) = 0.5 * params.omega_a + params.omega_f() * n;
        H(gr, gr) = -0.5 * params.omega_a + params.omega_f() * n;
    }
    for (int n = 0; n + 1 < N; ++n) {
        const int e = composite_index(AtomLevel::Excited, n, N);
        const int gr = composite_index(AtomLevel::Ground, n + 1, N);
        const double coupling = params.g * std::sqrt(n + 1.0);
        H(e, gr) = coupling;
        H(gr, e) = coupling;
    }
    return H;
}

} // namespace jcd
