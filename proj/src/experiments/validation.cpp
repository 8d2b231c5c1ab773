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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "jcd/correlations.hpp"
#include "jcd/error.hpp"
#include "jcd/experiments.hpp"
#include "jcd/random_states.hpp"
#include "jcd/simd.hpp"
#include "jcd/su_bloch.hpp"

namespace jcd {

namespace {

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

class Suite {
  public:
    Suite(std::ostream &log) : log_(log) {}

    void check(const std::string &name, bool passed, const std::string &detail) { emit({name, passed, detail, false}); }
    void info(const std::string &name, const std::string &detail) { emit({name, true, detail, true}); }

    /// Runs body; an escaping exception counts as a failed check.
    void guarded(const std::string &name, const std::function<void()> &body) {
        try {
            body();
        } catch (const std::exception &e) {
            check(name, false, std::string("threw: ") + e.what());
        }
    }

    ValidationReport report;

  private:
    void emit(CheckResult r) {
        log_ << (r.informational ? "INFO " : r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
        report.checks.push_back(std::move(r));
    }
    std::ostream &log_;
};

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

CMatrix pad_field(const CMatrix &rho, int extra) {
    const BlockedState s = BlockedState::from_dense(rho);
    const int n = s.dim() + extra;
    BlockedState p{CMatrix::Zero(n, n), CMatrix::Zero(n, n), CMatrix::Zero(n, n), 0.0};
    p.A.topLeftCorner(s.dim(), s.dim()) = s.A;
    p.B.topLeftCorner(s.dim(), s.dim()) = s.B;
    p.C.topLeftCorner(s.dim(), s.dim()) = s.C;
    return p.assemble();
}

double min_eigenvalue(const CMatrix &rho) {
    return Eigen::SelfAdjointEigenSolver<CMatrix>(0.5 * (rho + rho.adjoint()), Eigen::EigenvaluesOnly)
        .eigenvalues()
        .minCoeff();
}

void check_discord_oracle(Suite &s, random::Engine &rng) {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const CMatrix rho = random::density_matrix(6, rng);
        worst = std::max(worst, std::abs(geometric_discord(rho, 3) - geometric_discord_oracle(rho, 3)));
    }
    s.check("discord closed form vs projective oracle (20 random 2x3)", worst <= 1e-4, "max |diff| " + sci(worst));
}

void check_pure_states(Suite &s, random::Engine &rng) {
    double worst = 0.0;
    std::uniform_int_distribution<int> dim(2, 10);
    for (int i = 0; i < 100; ++i) {
        const int n = dim(rng);
        const CVector psi = random::pure_state(2 * n, rng);
        const CMatrix rho = psi * psi.adjoint();
        worst = std::max(worst, std::abs(geometric_discord(rho, n) - pure_state_discord(schmidt_spectrum(psi, n))));
    }
    s.check("pure states: D_G = 1 - sum s_i^2 (100 random, N <= 10)", worst <= 1e-10, "max |diff| " + sci(worst));
}

void check_resonant_vacuum(Suite &s) {
    const ModelParams params{1.0, 0.1, 0.0, 0.0};
    const InitialState init{1.0, NumberState{0, 0}};
    const double t_end = 10.0 * std::numbers::pi / params.g;
    double dev = 0.0;
    double rel = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        const double t = t_end * i / 1000.0;
        const CMatrix rho = evolve_general(init, params, t).assemble();
        const double d = geometric_discord(rho, 2);
        const double neg = negativity(rho, 2);
        const double sin2 = std::sin(2.0 * params.g * t);
        dev = std::max(dev, std::abs(d - 0.5 * sin2 * sin2));
        rel = std::max(rel, std::abs(d - 2.0 * neg * neg));
    }
    s.check("resonant vacuum: D_G(t) = sin^2(2gt)/2", dev <= 1e-9, "max |diff| " + sci(dev));
    s.check("resonant vacuum: D_G = 2 negativity^2", rel <= 1e-9, "max |diff| " + sci(rel));
}

void check_master_equation(Suite &s, const ValidationOptions &opt) {
    double worst = 0.0;
    for (int k : {0, 1, 2})
        for (double p : {0.0, 0.5, 1.0})
            for (double delta : {0.0, 0.2, 0.6})
                for (double gamma : {0.0, 0.5})
                    for (double t : {0.5, 1.0, 5.0}) {
                        const ModelParams evo{1.0, 0.1, delta, gamma};
                        ModelParams gen = evo;
                        if (opt.flip_gamma_sign)
                            gen.gamma = -gamma;
                        const InitialState init{p, NumberState{k, 0}};
                        worst = std::max(worst, detail::master_equation_residual(init, evo, gen, t, 1e-4));
                    }
    s.check("master-equation residual (162 cases, h = 1e-4)", worst <= 1e-6, "max residual " + sci(worst));
}

void check_trace_positivity(Suite &s) {
    const ModelParams params{1.0, 0.1, 0.2, 0.5};
    double number_trace = 0.0;
    double coherent_trace = 0.0;
    double min_eig = 0.0;
    double identity = 0.0;
    for (int i = 0; i <= 40; ++i) {
        const double t = 5.0 * i;
        for (int k : {0, 1, 2})
            for (double p : {0.0, 0.5, 1.0}) {
                const CMatrix rho = evolve_number(k, p, params, t);
                number_trace = std::max(number_trace, std::abs(rho.trace().real() - 1.0));
                min_eig = std::min(min_eig, min_eigenvalue(rho));
            }
        for (int k : {0, 1, 2}) {
            const ManifoldElements m = number_manifold(k, params, t);
            identity = std::max(identity, std::abs(m.A + m.B - 1.0));
        }
        const InitialState coherent{0.5, CoherentState{std::sqrt(5.0), 0.0, 30}};
        const CMatrix rho = evolve_general(coherent, params, t).assemble();
        coherent_trace = std::max(coherent_trace, std::abs(rho.trace().real() - 1.0));
        min_eig = std::min(min_eig, min_eigenvalue(rho));
    }
    s.check("trace: number inputs", number_trace <= 1e-12, "max |Tr - 1| " + sci(number_trace));
    s.check("trace: coherent sqrt5, N_F = 30", coherent_trace <= 1e-8, "max |Tr - 1| " + sci(coherent_trace));
    s.check("positivity", min_eig >= -1e-10, "min eigenvalue " + sci(min_eig));
    s.check("A_k(t) + B_k(t) = 1", identity <= 1e-13, "max |diff| " + sci(identity));
}

/// Smallest nonzero |omega| among the dressed levels the number-state window touches.
double min_window_frequency(int k, const ModelParams &params) {
    const CMatrix h = detail::window_hamiltonian(k, params);
    const RVector e = Eigen::SelfAdjointEigenSolver<CMatrix>(h, Eigen::EigenvaluesOnly).eigenvalues();
    double w = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < e.size(); ++i)
        for (Eigen::Index j = i + 1; j < e.size(); ++j)
            if (std::abs(e(i) - e(j)) > 1e-12)
                w = std::min(w, std::abs(e(i) - e(j)));
    return w;
}

void check_steady_state(Suite &s) {
    const ModelParams params{1.0, 0.1, 0.2, 0.5};
    double general = 0.0;
    double converged = 0.0;
    double at_500 = 0.0;
    for (int k : {0, 1, 2})
        for (double p : {0.0, 0.5, 1.0}) {
            const CMatrix ss = steady_state_number(k, p, params);
            const InitialState init{p, NumberState{k, 0}};
            general = std::max(general, (number_window(steady_state_general(init, params), k) - ss).cwiseAbs().maxCoeff());
            const double w = min_window_frequency(k, params);
            const double t_conv = 50.0 / (params.gamma * w * w);
            converged = std::max(converged, (evolve_number(k, p, params, t_conv) - ss).cwiseAbs().maxCoeff());
            at_500 = std::max(at_500, (evolve_number(k, p, params, 500.0) - ss).cwiseAbs().maxCoeff());
        }
    s.check("steady_state_general = steady_state_number", general <= 1e-12, "max |diff| " + sci(general));
    s.check("convergence at t = 50 / (gamma w_min^2)", converged <= 1e-8, "max |diff| " + sci(converged));
    s.info("distance to steady state at t = 500", "max |diff| " + sci(at_500) +
                                                      " (slowest coherence decays as exp(-gamma t w^2 / 2))");

    const InitialState coherent{0.5, CoherentState{std::sqrt(5.0), 0.7, 30}};
    const BlockedState m = steady_state_general(coherent, params);
    const BlockedState mm = project_steady(m, params);
    const double idem = std::max({(m.A - mm.A).cwiseAbs().maxCoeff(), (m.B - mm.B).cwiseAbs().maxCoeff(),
                                  (m.C - mm.C).cwiseAbs().maxCoeff()});
    s.check("steady projection is idempotent", idem <= 1e-14, "max |diff| " + sci(idem));
}

void check_decay(Suite &s) {
    const ModelParams params{1.0, 0.1, 0.2, 0.5};
    bool ok = true;
    double worst = 0.0;
    for (int k : {0, 1, 2}) {
        Eigen::SelfAdjointEigenSolver<CMatrix> es(detail::window_hamiltonian(k, params));
        const CMatrix &v = es.eigenvectors();
        for (double t : {1.0, 10.0, 100.0}) {
            const CMatrix a = v.adjoint() * evolve_number(k, 0.5, params, t) * v;
            const CMatrix b = v.adjoint() * evolve_number(k, 0.5, params, 2.0 * t) * v;
            for (Eigen::Index i = 0; i < a.rows(); ++i)
                for (Eigen::Index j = 0; j < a.cols(); ++j)
                    if (i != j && std::abs(es.eigenvalues()(i) - es.eigenvalues()(j)) > 1e-12) {
                        const double grow = std::abs(b(i, j)) - std::abs(a(i, j));
                        worst = std::max(worst, grow);
                        ok = ok && grow <= 1e-14;
                    }
        }
    }
    s.check("dressed coherences decay monotonically", ok, "max growth " + sci(worst));
}

void check_resonance_zero(Suite &s) {
    const ModelParams params{1.0, 0.1, 0.0, 0.5};
    double worst = 0.0;
    for (double p = 0.0; p <= 1.0 + 1e-12; p += 0.1) {
        for (int k : {0, 1, 2, 5})
            worst = std::max(worst, steady_discord({p, NumberState{k, 0}}, params));
        worst = std::max(worst, steady_discord({p, CoherentState{std::sqrt(5.0), 0.0, 30}}, params));
    }
    s.check("zero steady discord at resonance", worst <= 1e-10, "max D_G_inf " + sci(worst));
}

void check_optimum(Suite &s) {
    for (double p : {0.0, 0.5, 1.0}) {
        ExperimentConfig c;
        c.command = "optimum";
        c.init = {p, NumberState{1, 0}};
        const auto curve = sweep_detuning_steady(c).column("D_G_inf");
        const auto peak = std::max_element(curve.begin(), curve.end());
        const bool interior = peak != curve.begin() && peak != curve.end() - 1 &&
                              *peak > std::max(curve.front(), curve.back());

        const OptimumResult opt = find_optimal_detuning(c);
        double brute = 0.0;
        for (int i = 0; i <= 10000; ++i) {
            ModelParams q = c.params;
            q.delta = i * 1e-4;
            brute = std::max(brute, steady_discord(c.init, q));
        }
        const std::string tag = "p = " + format_value(p);
        s.check("interior optimum, " + tag, interior && opt.defined && opt.delta_opt > 0.0 && opt.delta_opt < 1.0,
                "delta_opt " + format_value(opt.delta_opt) + ", D_G_inf " + format_value(opt.value) + ", ends " +
                    sci(curve.front()) + " / " + sci(curve.back()));
        s.check("refined optimum >= 1e-4 grid maximum, " + tag, opt.value >= brute - 1e-8,
                "refined - grid " + sci(opt.value - brute));
        s.info("refined optimum vs 1e-4 grid, " + tag, "|diff| " + sci(std::abs(opt.value - brute)));
    }
}

void check_coincidence(Suite &s) {
    const double dev = fig_coincidence_deviation(ModelParams{1.0, 0.1, 0.0, 0.5}, Range{0.0, 1.0, 0.01});
    s.info("number:1 vs coherent sqrt5 steady curves, p = 0.5", "max deviation " + sci(dev));
}

void check_invariance(Suite &s, random::Engine &rng) {
    double local = 0.0;
    double embed = 0.0;
    for (int i = 0; i < 20; ++i) {
        const int n = 2 + i % 4;
        const CMatrix rho = random::density_matrix(2 * n, rng);
        const CMatrix u = kron(random::haar_unitary(2, rng), random::haar_unitary(n, rng));
        const CMatrix r2 = u * rho * u.adjoint();
        const CMatrix padded = pad_field(rho, 2);
        local = std::max({local, std::abs(geometric_discord(rho, n) - geometric_discord(r2, n)),
                          std::abs(negativity(rho, n) - negativity(r2, n))});
        embed = std::max({embed, std::abs(geometric_discord(rho, n) - geometric_discord(padded, n + 2)),
                          std::abs(negativity(rho, n) - negativity(padded, n + 2))});
    }
    s.check("local-unitary invariance (20 random)", local <= 1e-10, "max |diff| " + sci(local));
    s.check("field-embedding invariance N -> N + 2 (20 random)", embed <= 1e-10, "max |diff| " + sci(embed));

    double phase = 0.0;
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const ModelParams params{1.0, 0.1, 0.2, 0.5};
    for (int i = 0; i < 20; ++i) {
        const double t = 100.0 * u01(rng);
        const double phi = 2.0 * std::numbers::pi * u01(rng);
        const CMatrix a = evolve_general({0.5, CoherentState{std::sqrt(5.0), 0.0, 30}}, params, t).assemble();
        const CMatrix b = evolve_general({0.5, CoherentState{std::sqrt(5.0), phi, 30}}, params, t).assemble();
        phase = std::max({phase, std::abs(geometric_discord(a, 30) - geometric_discord(b, 30)),
                          std::abs(negativity(a, 30) - negativity(b, 30))});
    }
    s.check("coherent-phase invariance (20 random)", phase <= 1e-10, "max |diff| " + sci(phase));
}

void check_determinism(Suite &s) {
    ExperimentConfig c;
    c.command = "steady";
    auto csv = [&](int threads) {
        c.threads = threads;
        std::ostringstream os;
        sweep_detuning_steady(c).write_csv(os);
        return os.str();
    };
    const std::string serial = csv(1);
    s.check("sweep CSV identical for 1, 4 and 7 threads", serial == csv(4) && serial == csv(7) && serial == csv(4),
            std::to_string(serial.size()) + " bytes");

    c.command = "surface";
    c.delta_range = {0.0, 1.0, 0.1};
    const SweepTable surface = surface_grid(c);
    bool in_range = true;
    for (double v : surface.column("D_G_inf"))
        in_range = in_range && v >= 0.0 && v <= 0.5;
    s.check("surface values within [0, 0.5]", in_range && surface.rows().size() == 121,
            std::to_string(surface.rows().size()) + " rows");
}

void check_kernels(Suite &s, random::Engine &rng) {
    const CMatrix a = random::ginibre(37, 3, rng);
    const CMatrix b = random::ginibre(37, 3, rng);
    const auto x = simd::flat(a);
    const auto y = simd::flat(b);
    const simd::KernelTable &ref = *simd::table_for(simd::Isa::Scalar);
    const simd::KernelTable &act = simd::active();
    const double d = std::max({std::abs(ref.dotc(x.data(), y.data(), x.size()) - act.dotc(x.data(), y.data(), x.size())),
                               std::abs(ref.sqnorm(x.data(), x.size()) - act.sqnorm(x.data(), x.size())),
                               std::abs(ref.sqdist(x.data(), y.data(), x.size()) - act.sqdist(x.data(), y.data(), x.size()))});
    s.check("SIMD kernels (" + std::string(act.name) + ") match scalar reference", d <= 1e-12, "max |diff| " + sci(d));

    const GeneratorBasis &basis = *cached_basis(4);
    const CMatrix rho = random::density_matrix(8, rng);
    const double rt = (bloch_reconstruct(bloch_decompose(rho, basis), basis) - rho).cwiseAbs().maxCoeff();
    s.check("Bloch decomposition round trip", rt <= 1e-12, "max |diff| " + sci(rt));
}

} // namespace

bool ValidationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.informational || c.passed; });
}

ValidationReport run_validation(const ValidationOptions &options, std::ostream &log) {
    Suite s(log);
    random::Engine rng(options.seed);
    s.guarded("SIMD kernels", [&] { check_kernels(s, rng); });
    s.guarded("discord oracle", [&] { check_discord_oracle(s, rng); });
    s.guarded("pure states", [&] { check_pure_states(s, rng); });
    s.guarded("resonant vacuum", [&] { check_resonant_vacuum(s); });
    s.guarded("master equation", [&] { check_master_equation(s, options); });
    s.guarded("trace and positivity", [&] { check_trace_positivity(s); });
    s.guarded("steady state", [&] { check_steady_state(s); });
    s.guarded("coherence decay", [&] { check_decay(s); });
    s.guarded("resonance", [&] { check_resonance_zero(s); });
    s.guarded("optimum", [&] { check_optimum(s); });
    s.guarded("coincidence", [&] { check_coincidence(s); });
    s.guarded("invariance", [&] { check_invariance(s, rng); });
    s.guarded("determinism", [&] { check_determinism(s); });
    return std::move(s.report);
}

} // namespace jcd
