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

#include "jcd/dephasing.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "jcd/error.hpp"

namespace jcd {

namespace {

constexpr double kDegeneracyTol = 1e-12;

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };

void check_time(double t) {
    if (!(t >= 0.0) || !std::isfinite(t))
        throw ConfigError("time must be finite and non-negative, got " + std::to_string(t));
}

void check_steady(const ModelParams &params) {
    if (!(params.gamma > 0.0))
        throw NoSteadyState("steady state requires gamma > 0");
}

// Dressed levels of the (untruncated) model, enough manifolds for a field
// truncation of `manifolds` Fock states. Index 0 is |g,0>, 1 + 2n is
// |Phi_+^(n)>, 2 + 2n is |Phi_-^(n)>.
struct DressedLevels {
    std::vector<double> energy;
    std::vector<double> sin2; // sin^2 theta_n
    std::vector<double> cos2; // cos^2 theta_n
    std::vector<double> sin_2theta;

    DressedLevels(const ModelParams &params, int manifolds) {
        energy.reserve(static_cast<std::size_t>(1 + 2 * manifolds));
        energy.push_back(ground_energy(params));
        for (int n = 0; n < manifolds; ++n) {
            const DressedManifold m = dressed_eigensystem(n, params);
            energy.push_back(m.e_plus);
            energy.push_back(m.e_minus);
            const double s = std::sin(m.theta), c = std::cos(m.theta);
            sin2.push_back(s * s);
            cos2.push_back(c * c);
            sin_2theta.push_back(std::sin(2.0 * m.theta));
        }
    }

    [[nodiscard]] std::size_t count() const { return energy.size(); }
};

constexpr int kGround = 0;
constexpr int plus(int n) { return 1 + 2 * n; }
constexpr int minus(int n) { return 2 + 2 * n; }

// F(l, m) = exp(-i w t - (gamma t / 2) w^2), w = E_l - E_m
CMatrix evolution_factors(const std::vector<double> &energy, const ModelParams &params, double t) {
    const auto n = static_cast<Eigen::Index>(energy.size());
    CMatrix f(n, n);
    for (Eigen::Index l = 0; l < n; ++l)
        for (Eigen::Index m = 0; m < n; ++m) {
            const double w = energy[static_cast<std::size_t>(l)] - energy[static_cast<std::size_t>(m)];
            f(l, m) = std::exp(cplx(-0.5 * params.gamma * t * w * w, -w * t));
        }
    return f;
}

// Indicator of degenerate level pairs: the t -> infinity limit for gamma > 0.
CMatrix steady_factors(const std::vector<double> &energy) {
    const auto n = static_cast<Eigen::Index>(energy.size());
    CMatrix f(n, n);
    for (Eigen::Index l = 0; l < n; ++l)
        for (Eigen::Index m = 0; m < n; ++m) {
            const double w = energy[static_cast<std::size_t>(l)] - energy[static_cast<std::size_t>(m)];
            f(l, m) = std::abs(w) <= kDegeneracyTol ? 1.0 : 0.0;
        }
    return f;
}

// Assemble A, B, C from the element families for the atom starting in |e>
// (weight p) and |g> (weight 1 - p).
BlockedState assemble_families(const CVector &b, double p, const DressedLevels &lv, const CMatrix &F) {
    const int N = static_cast<int>(b.size());
    auto coef = [&](int i) -> cplx { return (i >= 0 && i < N) ? b(i) : cplx(0.0); };
    auto sp = [&](int n) { return lv.sin2[static_cast<std::size_t>(n)]; };
    auto cp = [&](int n) { return lv.cos2[static_cast<std::size_t>(n)]; };
    auto s2 = [&](int n) { return lv.sin_2theta[static_cast<std::size_t>(n)]; };
    // the +/- interference combination shared by A^(g) and B^(e)
    auto cross = [&](int n, int m) {
        return F(plus(n), plus(m)) - F(plus(n), minus(m)) - F(minus(n), plus(m)) + F(minus(n), minus(m));
    };

    BlockedState s;
    s.A = CMatrix::Zero(N, N);
    s.B = CMatrix::Zero(N, N);
    s.C = CMatrix::Zero(N, N);

    for (int n = 0; n < N; ++n)
        for (int m = 0; m < N; ++m) {
            // A^(e)
            const cplx ae = coef(n) * std::conj(coef(m)) *
                            (sp(n) * (sp(m) * F(plus(n), plus(m)) + cp(m) * F(plus(n), minus(m))) +
                             cp(n) * (sp(m) * F(minus(n), plus(m)) + cp(m) * F(minus(n), minus(m))));
            // A^(g)
            const cplx ag = 0.25 * coef(n + 1) * std::conj(coef(m + 1)) * s2(n) * s2(m) * cross(n, m);

            // B^(e) and B^(g); |g,0> is the stationary level Phi_0
            cplx be = 0.0, bg = 0.0;
            if (n >= 1 && m >= 1) {
                const int a = n - 1, c = m - 1;
                be = 0.25 * coef(a) * std::conj(coef(c)) * s2(a) * s2(c) * cross(a, c);
                bg = coef(n) * std::conj(coef(m)) *
                     (cp(a) * (cp(c) * F(plus(a), plus(c)) + sp(c) * F(plus(a), minus(c))) +
                      sp(a) * (cp(c) * F(minus(a), plus(c)) + sp(c) * F(minus(a), minus(c))));
            } else if (n == 0 && m == 0) {
                bg = std::norm(coef(0));
            } else if (n == 0) {
                const int c = m - 1;
                bg = coef(0) * std::conj(coef(m)) * (cp(c) * F(kGround, plus(c)) + sp(c) * F(kGround, minus(c)));
            } else {
                const int a = n - 1;
                bg = coef(n) * std::conj(coef(0)) * (cp(a) * F(plus(a), kGround) + sp(a) * F(minus(a), kGround));
            }

            // C^(e) and C^(g)
            cplx ce = 0.0, cg = 0.0;
            if (m >= 1) {
                const int c = m - 1;
                ce = 0.5 * coef(n) * std::conj(coef(c)) * s2(c) *
                     (sp(n) * (F(plus(n), plus(c)) - F(plus(n), minus(c))) +
                      cp(n) * (F(minus(n), plus(c)) - F(minus(n), minus(c))));
                cg = 0.5 * coef(n + 1) * std::conj(coef(m)) * s2(n) *
                     (cp(c) * (F(plus(n), plus(c)) - F(minus(n), plus(c))) +
                      sp(c) * (F(plus(n), minus(c)) - F(minus(n), minus(c))));
            } else {
                cg = 0.5 * coef(n + 1) * std::conj(coef(0)) * s2(n) * (F(plus(n), kGround) - F(minus(n), kGround));
            }

            s.A(n, m) = p * ae + (1.0 - p) * ag;
            s.B(n, m) = p * be + (1.0 - p) * bg;
            s.C(n, m) = p * ce + (1.0 - p) * cg;
        }
    return s;
}

// Eigenbasis of the truncated Hamiltonian: columns of `vectors` with
// matching `energy`. Real orthogonal.
struct TruncatedEigenbasis {
    RMatrix vectors;
    std::vector<double> energy;

    TruncatedEigenbasis(const ModelParams &params, int N) : vectors(RMatrix::Zero(2 * N, 2 * N)) {
        energy.reserve(static_cast<std::size_t>(2 * N));
        int col = 0;
        vectors(composite_index(AtomLevel::Ground, 0, N), col++) = 1.0;
        energy.push_back(ground_energy(params));
        for (int n = 0; n + 1 < N; ++n) {
            const DressedManifold m = dressed_eigensystem(n, params);
            const int e = composite_index(AtomLevel::Excited, n, N);
            const int gr = composite_index(AtomLevel::Ground, n + 1, N);
            vectors(e, col) = m.v_plus(0);
            vectors(gr, col++) = m.v_plus(1);
            energy.push_back(m.e_plus);
            vectors(e, col) = m.v_minus(0);
            vectors(gr, col++) = m.v_minus(1);
            energy.push_back(m.e_minus);
        }
        vectors(composite_index(AtomLevel::Excited, N - 1, N), col++) = 1.0;
        energy.push_back(0.5 * params.omega_a + params.omega_f() * (N - 1));
    }
};

BlockedState filter_in_eigenbasis(const BlockedState &rho, const CMatrix &factors, const TruncatedEigenbasis &basis) {
    const CMatrix V = basis.vectors.cast<cplx>();
    const CMatrix dressed = (V.adjoint() * rho.assemble() * V).cwiseProduct(factors);
    CMatrix out = V * dressed * V.adjoint();
    out = 0.5 * (out + out.adjoint()).eval();
    return BlockedState::from_dense(out, rho.t);
}

CVector number_coefficients(const NumberState &s) {
    const int dim = s.dim == 0 ? s.k + 2 : s.dim;
    CVector b = CVector::Zero(dim);
    b(s.k) = 1.0;
    return b;
}

} // namespace

int field_dim(const FieldInitSpec &spec) {
    return std::visit(overloaded{[](const NumberState &s) { return s.dim == 0 ? s.k + 2 : s.dim; },
                                 [](const CoherentState &s) { return s.dim; }},
                      spec);
}

void InitialState::validate() const {
    if (!(p >= 0.0 && p <= 1.0))
        throw ConfigError("atomic population p must lie in [0, 1], got " + std::to_string(p));
    std::visit(overloaded{[](const NumberState &s) {
                              if (s.k < 0)
                                  throw ConfigError("Fock index must be non-negative");
                              const int dim = s.dim == 0 ? s.k + 2 : s.dim;
                              if (s.k + 1 >= dim)
                                  throw ConfigError("number state |" + std::to_string(s.k) +
                                                    "> needs a truncation of at least " +
                                                    std::to_string(s.k + 2));
                          },
                          [](const CoherentState &s) {
                              if (!(s.modulus >= 0.0) || !std::isfinite(s.modulus) || !std::isfinite(s.phase))
                                  throw ConfigError("coherent amplitude must be finite with modulus >= 0");
                              if (s.dim < 2)
                                  throw ConfigError("coherent truncation must be >= 2");
                          }},
               field);
}

double coherent_tail_mass(double modulus, int dim) {
    const double mean = modulus * modulus;
    if (dim <= 0)
        return 1.0;
    if (mean == 0.0)
        return 0.0;
    // sum_{n >= dim} exp(-mean) mean^n / n!, starting from the first term in log space
    double term = std::exp(-mean + dim * std::log(mean) - std::lgamma(dim + 1.0));
    double sum = 0.0;
    for (int n = dim; n < dim + 100000; ++n) {
        sum += term;
        term *= mean / (n + 1.0);
        if (n + 1 > mean && term < 1e-20 * sum)
            break;
    }
    return std::min(1.0, sum);
}

int required_coherent_dim(double modulus, double tol) {
    int dim = 1;
    while (coherent_tail_mass(modulus, dim) > tol)
        ++dim;
    return std::max(dim, 2);
}

CVector field_initial_coefficients(const FieldInitSpec &spec) {
    return std::visit(
        overloaded{[](const NumberState &s) {
                       if (s.k < 0)
                           throw ConfigError("Fock index must be non-negative");
                       const int dim = s.dim == 0 ? s.k + 2 : s.dim;
                       if (s.k >= dim)
                           throw ConfigError("Fock index outside the truncation");
                       return number_coefficients(s);
                   },
                   [](const CoherentState &s) {
                       const double tail = coherent_tail_mass(s.modulus, s.dim);
                       if (tail > kCoherentTailTolerance) {
                           const int need = required_coherent_dim(s.modulus);
                           throw TruncationError("coherent state |alpha| = " + std::to_string(s.modulus) +
                                                     " loses " + std::to_string(tail) +
                                                     " probability at dim " + std::to_string(s.dim) +
                                                     "; needs dim >= " + std::to_string(need),
                                                 need);
                       }
                       CVector b(s.dim);
                       const double mean = s.modulus * s.modulus;
                       const double log_r = s.modulus > 0.0 ? std::log(s.modulus) : 0.0;
                       double log_fact = 0.0; // log n!
                       for (int n = 0; n < s.dim; ++n) {
                           if (n > 0)
                               log_fact += std::log(static_cast<double>(n));
                           double mag;
                           if (s.modulus == 0.0)
                               mag = n == 0 ? 1.0 : 0.0;
                           else
                               mag = std::exp(-0.5 * mean + n * log_r - 0.5 * log_fact);
                           b(n) = std::polar(mag, n * s.phase);
                       }
                       return b;
                   }},
        spec);
}

CMatrix BlockedState::assemble() const {
    const Eigen::Index n = A.rows();
    CMatrix rho(2 * n, 2 * n);
    rho.topLeftCorner(n, n) = A;
    rho.topRightCorner(n, n) = C;
    rho.bottomLeftCorner(n, n) = C.adjoint();
    rho.bottomRightCorner(n, n) = B;
    return rho;
}

BlockedState BlockedState::from_dense(const CMatrix &rho, double t) {
    if (rho.rows() != rho.cols() || rho.rows() % 2 != 0)
        throw DimensionMismatch("blocked state needs a square matrix of even size");
    const Eigen::Index n = rho.rows() / 2;
    return {rho.topLeftCorner(n, n), rho.bottomRightCorner(n, n), rho.topRightCorner(n, n), t};
}

BlockedState initial_blocked_state(const InitialState &init) {
    init.validate();
    const CVector b = field_initial_coefficients(init.field);
    const CMatrix eta = b * b.adjoint();
    return {init.p * eta, (1.0 - init.p) * eta, CMatrix::Zero(b.size(), b.size()), 0.0};
}

BlockedState evolve_general(const InitialState &init, const ModelParams &params, double t) {
    check_time(t);
    init.validate();
    params.validate();
    const CVector b = field_initial_coefficients(init.field);
    const DressedLevels levels(params, static_cast<int>(b.size()));
    BlockedState s = assemble_families(b, init.p, levels, evolution_factors(levels.energy, params, t));
    s.t = t;
    return s;
}

BlockedState steady_state_general(const InitialState &init, const ModelParams &params) {
    init.validate();
    params.validate();
    check_steady(params);
    const CVector b = field_initial_coefficients(init.field);
    const DressedLevels levels(params, static_cast<int>(b.size()));
    BlockedState s = assemble_families(b, init.p, levels, steady_factors(levels.energy));
    s.t = std::numeric_limits<double>::infinity();
    return s;
}

BlockedState evolve_dressed_basis(const BlockedState &rho, const ModelParams &params, double t) {
    check_time(t);
    params.validate();
    const TruncatedEigenbasis basis(params, rho.dim());
    BlockedState out = filter_in_eigenbasis(rho, evolution_factors(basis.energy, params, t), basis);
    out.t = rho.t + t;
    return out;
}

BlockedState project_steady(const BlockedState &rho, const ModelParams &params) {
    params.validate();
    check_steady(params);
    const TruncatedEigenbasis basis(params, rho.dim());
    BlockedState out = filter_in_eigenbasis(rho, steady_factors(basis.energy), basis);
    out.t = std::numeric_limits<double>::infinity();
    return out;
}

ManifoldElements number_manifold(int k, const ModelParams &params, double t) {
    const double omega = rabi_frequency(k, params);
    const double decay = std::exp(-2.0 * params.gamma * t * omega * omega);
    const double c = std::cos(2.0 * omega * t) * decay;
    const double s = std::sin(2.0 * omega * t) * decay;
    const double ratio = params.delta * params.delta / (2.0 * omega * omega);
    const double coupling2 = params.g * params.g * (k + 1);
    ManifoldElements e{};
    e.A = 0.25 * (2.0 + ratio + (2.0 - ratio) * c);
    e.C = params.g * std::sqrt(k + 1.0) / (4.0 * omega) * cplx(params.delta / omega * (1.0 - c), 2.0 * s);
    e.B = coupling2 / (2.0 * omega * omega) * (1.0 - c);
    return e;
}

ManifoldElements number_manifold_steady(int k, const ModelParams &params) {
    const double d2 = params.delta * params.delta;
    const double coupling2 = params.g * params.g * (k + 1);
    ManifoldElements e{};
    e.A = 0.25 * (2.0 + d2 / (0.5 * d2 + 2.0 * coupling2));
    e.C = params.g * params.delta * std::sqrt(k + 1.0) / (d2 + 4.0 * coupling2);
    e.B = coupling2 / (0.5 * d2 + 2.0 * coupling2);
    return e;
}

namespace {

// Layout of the 2 (x) 3 number-state matrix: e,j -> j and g,j -> 3 + j with
// field index k - 1 + j.
CMatrix number_layout(int k, double p, const ManifoldElements &upper, const ManifoldElements *lower) {
    CMatrix rho = CMatrix::Zero(6, 6);
    rho(1, 1) = p * upper.A;
    rho(5, 5) = p * upper.B;
    rho(1, 5) = p * upper.C;
    rho(5, 1) = std::conj(rho(1, 5));
    if (k == 0) {
        rho(4, 4) = 1.0 - p; // |g,0> is stationary
    } else {
        rho(0, 0) = (1.0 - p) * lower->B;
        rho(4, 4) = (1.0 - p) * lower->A;
        rho(0, 4) = -(1.0 - p) * lower->C;
        rho(4, 0) = std::conj(rho(0, 4));
    }
    return rho;
}

void check_number_inputs(int k, double p) {
    if (k < 0)
        throw ConfigError("Fock index must be non-negative, got " + std::to_string(k));
    if (!(p >= 0.0 && p <= 1.0))
        throw ConfigError("atomic population p must lie in [0, 1]");
}

} // namespace

CMatrix evolve_number(int k, double p, const ModelParams &params, double t) {
    check_number_inputs(k, p);
    check_time(t);
    params.validate();
    const ManifoldElements upper = number_manifold(k, params, t);
    if (k == 0)
        return number_layout(k, p, upper, nullptr);
    const ManifoldElements lower = number_manifold(k - 1, params, t);
    return number_layout(k, p, upper, &lower);
}

CMatrix steady_state_number(int k, double p, const ModelParams &params) {
    check_number_inputs(k, p);
    params.validate();
    check_steady(params);
    const ManifoldElements upper = number_manifold_steady(k, params);
    if (k == 0)
        return number_layout(k, p, upper, nullptr);
    const ManifoldElements lower = number_manifold_steady(k - 1, params);
    return number_layout(k, p, upper, &lower);
}

CMatrix number_window(const BlockedState &rho, int k) {
    const int N = rho.dim();
    const CMatrix full = rho.assemble();
    CMatrix w = CMatrix::Zero(6, 6);
    auto index = [&](int atom, int j) -> int {
        const int n = k - 1 + j;
        if (n < 0 || n >= N)
            return -1;
        return atom * N + n;
    };
    for (int a = 0; a < 2; ++a)
        for (int i = 0; i < 3; ++i)
            for (int b = 0; b < 2; ++b)
                for (int j = 0; j < 3; ++j) {
                    const int r = index(a, i), c = index(b, j);
                    if (r >= 0 && c >= 0)
                        w(3 * a + i, 3 * b + j) = full(r, c);
                }
    return w;
}

CMatrix detail::window_hamiltonian(int k, const ModelParams &params) {
    CMatrix H = CMatrix::Zero(6, 6);
    for (int j = 0; j < 3; ++j) {
        const double n = k - 1 + j;
        H(j, j) = 0.5 * params.omega_a + params.omega_f() * n;
        H(3 + j, 3 + j) = -0.5 * params.omega_a + params.omega_f() * n;
    }
    for (int j = 0; j < 2; ++j) {
        const int n = k - 1 + j; // |e,n> <-> |g,n+1>
        if (n < 0)
            continue;
        H(j, 3 + j + 1) = H(3 + j + 1, j) = params.g * std::sqrt(n + 1.0);
    }
    return H;
}

double detail::master_equation_residual(const InitialState &init, const ModelParams &evolution,
                                        const ModelParams &generator, double t, double h) {
    const auto *number = std::get_if<NumberState>(&init.field);
    if (number == nullptr)
        throw Unsupported("master-equation residual is only defined for number-state inputs");
    if (!(h > 0.0 && t > h))
        throw ConfigError("residual needs t > h > 0");
    const int k = number->k;
    const CMatrix plus_h = evolve_number(k, init.p, evolution, t + h);
    const CMatrix minus_h = evolve_number(k, init.p, evolution, t - h);
    const CMatrix rho = evolve_number(k, init.p, evolution, t);
    const CMatrix H = window_hamiltonian(k, generator);

    const CMatrix comm = H * rho - rho * H;
    const CMatrix double_comm = H * comm - comm * H;
    const CMatrix rhs = cplx(0.0, -1.0) * comm - 0.5 * generator.gamma * double_comm;
    return ((plus_h - minus_h) / (2.0 * h) - rhs).norm();
}

double master_equation_residual(const InitialState &init, const ModelParams &params, double t, double h) {
    init.validate();
    params.validate();
    return detail::master_equation_residual(init, params, params, t, h);
}

} // namespace jcd
