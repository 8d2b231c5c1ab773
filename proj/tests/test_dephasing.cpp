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

#include <numbers>

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "jcd/correlations.hpp"
#include "jcd/dephasing.hpp"
#include "jcd/error.hpp"

using namespace jcd;

namespace {

const ModelParams kFig{1.0, 0.1, 0.2, 0.5};

double max_abs(const CMatrix &m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

// Reference solution: diagonalize the truncated Hamiltonian numerically and
// damp every eigenbasis coherence by exp(-i w t - gamma t w^2 / 2).
CMatrix dense_oracle(const CMatrix &rho0, const ModelParams &p, double t, int dim) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hamiltonian_matrix(p, dim));
    const CMatrix &v = es.eigenvectors();
    const auto &e = es.eigenvalues();
    CMatrix m = v.adjoint() * rho0 * v;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const double w = e(i) - e(j);
            m(i, j) *= std::exp(cplx(-0.5 * p.gamma * t * w * w, -w * t));
        }
    return v * m * v.adjoint();
}

// The closed-form families follow the untruncated dynamics: |e, dim-1>
// still couples to |g, dim>. Pad the reference by two Fock levels and read
// back the original window.
CMatrix padded_oracle(const CMatrix &rho0, const ModelParams &p, double t, int dim) {
    const int big = dim + 2;
    CMatrix r = CMatrix::Zero(2 * big, 2 * big);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            r.block(a * big, b * big, dim, dim) = rho0.block(a * dim, b * dim, dim, dim);
    const CMatrix out = dense_oracle(r, p, t, big);
    CMatrix w(2 * dim, 2 * dim);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            w.block(a * dim, b * dim, dim, dim) = out.block(a * big, b * big, dim, dim);
    return w;
}

CMatrix phase_unitary(double phi, int dim) {
    // exp(i phi sigma_z / 2) (x) exp(i phi a^dag a)
    CMatrix u = CMatrix::Zero(2 * dim, 2 * dim);
    for (int n = 0; n < dim; ++n) {
        u(n, n) = std::polar(1.0, phi * (n + 0.5));
        u(dim + n, dim + n) = std::polar(1.0, phi * (n - 0.5));
    }
    return u;
}

} // namespace

TEST_CASE("field coefficients") {
    const CVector b = field_initial_coefficients(NumberState{1, 3});
    CHECK(b.size() == 3);
    CHECK(b(1) == cplx(1.0));
    CHECK(b.norm() == 1.0);

    const CVector vac = field_initial_coefficients(CoherentState{0.0, 0.0, 10});
    CHECK(vac(0) == cplx(1.0));
    CHECK(vac.tail(9).norm() == 0.0);

    const CVector c = field_initial_coefficients(CoherentState{std::sqrt(5.0), 0.0, 30});
    CHECK(c.squaredNorm() >= 1.0 - 1e-8);
    CHECK(std::abs(c(2) - std::exp(-2.5) * 5.0 / std::sqrt(2.0)) <= 1e-15);
    CHECK(std::abs(1.0 - c.squaredNorm() - coherent_tail_mass(std::sqrt(5.0), 30)) <= 1e-14);

    // large amplitudes stay finite
    const CVector big = field_initial_coefficients(CoherentState{20.0, 0.0, required_coherent_dim(20.0)});
    CHECK(std::isfinite(big.squaredNorm()));
    CHECK(std::abs(big.squaredNorm() - 1.0) <= 1e-8);
}

TEST_CASE("insufficient truncation names the required dimension") {
    try {
        (void)field_initial_coefficients(CoherentState{5.0, 0.0, 30});
        FAIL("expected TruncationError");
    } catch (const TruncationError &e) {
        CHECK(e.required_dim() == required_coherent_dim(5.0));
        CHECK(coherent_tail_mass(5.0, e.required_dim()) <= kCoherentTailTolerance);
        CHECK(coherent_tail_mass(5.0, e.required_dim() - 1) > kCoherentTailTolerance);
    }
}

TEST_CASE("initial state validation") {
    CHECK_THROWS_AS((InitialState{1.5, NumberState{0, 0}}.validate()), ConfigError);
    CHECK_THROWS_AS((InitialState{0.5, NumberState{3, 4}}.validate()), ConfigError);
    CHECK_THROWS_AS((InitialState{0.5, NumberState{-1, 0}}.validate()), ConfigError);
    CHECK_NOTHROW((InitialState{0.5, NumberState{3, 5}}.validate()));
    CHECK_THROWS_AS(evolve_general({0.5, NumberState{1, 0}}, kFig, -1.0), ConfigError);
}

TEST_CASE("t = 0 reproduces the product state") {
    for (const FieldInitSpec &f : {FieldInitSpec{NumberState{2, 5}}, FieldInitSpec{CoherentState{std::sqrt(5.0), 0.4, 30}}}) {
        const InitialState init{0.3, f};
        const CVector b = field_initial_coefficients(f);
        const CMatrix eta = b * b.adjoint();
        const BlockedState s = evolve_general(init, kFig, 0.0);
        CHECK(max_abs(s.A - 0.3 * eta) <= 1e-12);
        CHECK(max_abs(s.B - 0.7 * eta) <= 1e-12);
        CHECK(max_abs(s.C) <= 1e-12);
    }
}

TEST_CASE("closed forms agree with dense diagonalization") {
    for (const ModelParams &p : {kFig, ModelParams{1.0, 0.1, 0.0, 0.0}, ModelParams{1.0, 0.15, -0.3, 1.2}})
        for (const FieldInitSpec &f : {FieldInitSpec{NumberState{0, 4}}, FieldInitSpec{NumberState{3, 6}},
                                       FieldInitSpec{CoherentState{std::sqrt(5.0), 0.9, 30}},
                                       FieldInitSpec{CoherentState{1.0, -0.2, 16}}}) {
            const InitialState init{0.35, f};
            const int dim = field_dim(f);
            const CMatrix rho0 = initial_blocked_state(init).assemble();
            for (double t : {0.3, 4.0, 37.5, 210.0}) {
                CAPTURE(t);
                CHECK(max_abs(evolve_general(init, p, t).assemble() - padded_oracle(rho0, p, t, dim)) <= 1e-9);
                CHECK(max_abs(evolve_dressed_basis(initial_blocked_state(init), p, t).assemble() -
                              dense_oracle(rho0, p, t, dim)) <= 1e-9);
            }
        }
}

TEST_CASE("number-state window matches the general evolver") {
    for (int k : {0, 1, 4})
        for (double p : {0.0, 0.5, 1.0})
            for (double t : {0.0, 2.5, 60.0}) {
                const InitialState init{p, NumberState{k, k + 3}};
                const CMatrix w = number_window(evolve_general(init, kFig, t), k);
                CHECK(max_abs(w - evolve_number(k, p, kFig, t)) <= 1e-12);
            }
}

TEST_CASE("number-state closed forms") {
    // t = 0
    const CMatrix r0 = evolve_number(2, 0.3, kFig, 0.0);
    CMatrix expect = CMatrix::Zero(6, 6);
    expect(1, 1) = 0.3;
    expect(4, 4) = 0.7;
    CHECK(max_abs(r0 - expect) <= 1e-15);

    // dark state
    for (double t : {0.0, 1.0, 100.0}) {
        CMatrix dark = CMatrix::Zero(6, 6);
        dark(4, 4) = 1.0;
        CHECK(max_abs(evolve_number(0, 0.0, kFig, t) - dark) == 0.0);
    }

    for (int k = 0; k < 5; ++k)
        for (double t : {0.0, 0.7, 13.0, 400.0}) {
            const auto m = number_manifold(k, kFig, t);
            CHECK(std::abs(m.A + m.B - 1.0) <= 1e-13);
        }
    CHECK_THROWS_AS(evolve_number(-1, 0.5, kFig, 1.0), ConfigError);
}

TEST_CASE("resonant vacuum Rabi state") {
    const ModelParams p{1.0, 0.1, 0.0, 0.0};
    const double t = std::numbers::pi / (4 * p.g);
    const CMatrix rho = evolve_general({1.0, NumberState{0, 0}}, p, t).assemble();
    // |e,0> and |g,1> are degenerate at resonance, so no relative phase accrues
    CVector psi = CVector::Zero(4);
    psi(0) = 1.0 / std::sqrt(2.0);
    psi(2 + 1) = cplx(0.0, -1.0) / std::sqrt(2.0);
    CHECK(max_abs(rho - psi * psi.adjoint()) <= 1e-10);
}

TEST_CASE("steady-state values") {
    const auto m = number_manifold_steady(1, {1.0, 0.1, 0.2, 0.5});
    CHECK(std::abs(m.A - 2.0 / 3.0) <= 1e-15);
    CHECK(std::abs(m.B - 1.0 / 3.0) <= 1e-15);
    CHECK(std::abs(m.C.real() - std::sqrt(2.0) / 6.0) <= 1e-15);
    CHECK(m.A + m.B == 1.0);

    const auto r = number_manifold_steady(3, {1.0, 0.1, 0.0, 0.5});
    CHECK(r.A == doctest::Approx(0.5));
    CHECK(std::abs(r.C) == 0.0);
    const CMatrix ss = steady_state_number(2, 0.4, {1.0, 0.1, 0.0, 0.5});
    CHECK(max_abs(ss - CMatrix(ss.diagonal().asDiagonal())) == 0.0);
    CHECK(geometric_discord(ss, 3) <= 1e-14);

    const auto far = number_manifold_steady(0, {1.0, 0.1, 1e6, 0.5});
    CHECK(far.A > 1.0 - 1e-12);
    CHECK(std::abs(far.C) < 1e-6);

    CHECK_THROWS_AS(steady_state_number(1, 0.5, {1.0, 0.1, 0.2, 0.0}), NoSteadyState);
    CHECK_THROWS_AS(steady_state_general({0.5, NumberState{1, 0}}, {1.0, 0.1, 0.2, 0.0}), NoSteadyState);
}

TEST_CASE("steady projection") {
    for (int k : {0, 1, 3})
        for (double p : {0.0, 0.6, 1.0}) {
            const InitialState init{p, NumberState{k, k + 2}};
            const CMatrix w = number_window(steady_state_general(init, kFig), k);
            CHECK(max_abs(w - steady_state_number(k, p, kFig)) <= 1e-12);
        }

    const InitialState coh{0.5, CoherentState{std::sqrt(5.0), 0.3, 30}};
    const BlockedState m = steady_state_general(coh, kFig);
    const BlockedState proj = project_steady(initial_blocked_state(coh), kFig);
    CHECK(max_abs(m.assemble() - proj.assemble()) <= 1e-12);
    CHECK(max_abs(project_steady(m, kFig).assemble() - m.assemble()) <= 1e-14);

    ModelParams resonant = kFig;
    resonant.delta = 0.0;
    const BlockedState r = steady_state_general(coh, resonant);
    CHECK(geometric_discord(r.assemble(), 30) <= 1e-10);
}

TEST_CASE("long-time convergence") {
    for (int k : {0, 1, 2})
        for (double p : {0.0, 0.5, 1.0}) {
            // slowest decay among the window coherences
            const CMatrix h = detail::window_hamiltonian(k, kFig);
            const auto e = Eigen::SelfAdjointEigenSolver<CMatrix>(h).eigenvalues();
            double w = 1e300;
            for (int i = 0; i < 6; ++i)
                for (int j = i + 1; j < 6; ++j)
                    if (std::abs(e(i) - e(j)) > 1e-12)
                        w = std::min(w, std::abs(e(i) - e(j)));
            const double t = 50.0 / (kFig.gamma * w * w);
            CHECK(max_abs(evolve_number(k, p, kFig, t) - steady_state_number(k, p, kFig)) <= 1e-8);
        }
}

TEST_CASE("dressed coherences decay monotonically") {
    const InitialState coh{0.5, CoherentState{std::sqrt(5.0), 0.0, 30}};
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hamiltonian_matrix(kFig, 30));
    const CMatrix &v = es.eigenvectors();
    for (double t : {0.5, 5.0, 50.0}) {
        const CMatrix a = v.adjoint() * evolve_general(coh, kFig, t).assemble() * v;
        const CMatrix b = v.adjoint() * evolve_general(coh, kFig, 2 * t).assemble() * v;
        double growth = -1.0;
        for (int i = 0; i < 60; ++i)
            for (int j = 0; j < 60; ++j)
                if (std::abs(es.eigenvalues()(i) - es.eigenvalues()(j)) > 1e-9)
                    growth = std::max(growth, std::abs(b(i, j)) - std::abs(a(i, j)));
        CHECK(growth <= 1e-12);
    }
}

TEST_CASE("coherent phase acts as a local unitary") {
    for (double phi : {0.4, 2.1, -1.3})
        for (double t : {0.0, 3.0, 77.0}) {
            const CMatrix a = evolve_general({0.5, CoherentState{std::sqrt(5.0), 0.0, 30}}, kFig, t).assemble();
            const CMatrix b = evolve_general({0.5, CoherentState{std::sqrt(5.0), phi, 30}}, kFig, t).assemble();
            const CMatrix u = phase_unitary(phi, 30);
            CHECK(max_abs(u * a * u.adjoint() - b) <= 1e-12);
            CHECK(std::abs(geometric_discord(a, 30) - geometric_discord(b, 30)) <= 1e-10);
            CHECK(std::abs(negativity(a, 30) - negativity(b, 30)) <= 1e-10);
        }
}

TEST_CASE("states stay physical") {
    const InitialState coh{0.5, CoherentState{std::sqrt(5.0), 0.0, 30}};
    for (double t = 0.0; t <= 300.0; t += 15.0) {
        const CMatrix rho = evolve_general(coh, kFig, t).assemble();
        const auto d = state_diagnostics(rho);
        CHECK(d.trace_error <= 1e-8);
        CHECK(d.min_eigenvalue >= -1e-10);
        CHECK(d.hermiticity_residual <= 1e-14);
        const CMatrix n = evolve_number(1, 0.5, kFig, t);
        CHECK(std::abs(n.trace().real() - 1.0) <= 1e-12);
    }
}

TEST_CASE("master-equation residual") {
    CHECK(master_equation_residual({0.5, NumberState{1, 0}}, kFig, 1.0, 1e-4) <= 1e-6);
    CHECK(master_equation_residual({0.5, NumberState{1, 0}}, {1.0, 0.1, 0.2, 0.0}, 1.0, 1e-4) <= 1e-6);
    CHECK(master_equation_residual({0.0, NumberState{0, 0}}, kFig, 1.0, 1e-4) == 0.0);
    CHECK_THROWS_AS(master_equation_residual({0.5, CoherentState{1.0, 0.0, 20}}, kFig, 1.0, 1e-4), Unsupported);
    CHECK_THROWS_AS(master_equation_residual({0.5, NumberState{1, 0}}, kFig, 1e-5, 1e-4), ConfigError);

    ModelParams flipped = kFig;
    flipped.gamma = -kFig.gamma;
    CHECK(detail::master_equation_residual({0.5, NumberState{1, 0}}, kFig, flipped, 1.0, 1e-4) > 1e-3);
}
