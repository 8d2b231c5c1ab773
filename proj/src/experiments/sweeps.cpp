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

#include <cmath>

#include "jcd/correlations.hpp"
#include "jcd/error.hpp"
#include "jcd/experiments.hpp"
#include "parallel.hpp"

namespace jcd {

namespace {

void require_dephasing(const ModelParams &params) {
    if (!(params.gamma > 0.0))
        throw ConfigError("steady-state sweeps need --gamma > 0");
}

double steady_at(const ExperimentConfig &c, double delta, double p) {
    ModelParams params = c.params;
    params.delta = delta;
    InitialState init = c.init;
    init.p = p;
    return steady_discord(init, params);
}

} // namespace

double steady_discord(const InitialState &init, const ModelParams &params) {
    if (const auto *n = std::get_if<NumberState>(&init.field)) {
        init.validate();
        return geometric_discord(steady_state_number(n->k, init.p, params), 3);
    }
    const BlockedState s = steady_state_general(init, params);
    return geometric_discord(s.assemble(), s.dim());
}

SweepTable run_timeseries(const ExperimentConfig &config) {
    config.validate();
    SweepTable table({"t", "D_G", "negativity", "purity", "trace_error"}, provenance_lines(config));
    const int dim = field_dim(config.init.field);
    const auto basis = cached_basis(dim);
    // Coherent inputs carry the truncated Poisson tail as a trace deficit.
    DensityTolerance tol;
    tol.trace = kCoherentTailTolerance;

    const auto n = static_cast<std::size_t>(config.steps);
    const auto rows = detail::parallel_map(n, config.threads, [&](std::size_t i) {
        const double t = config.t_max * static_cast<double>(i) / static_cast<double>(n - 1);
        const CMatrix rho = evolve_general(config.init, config.params, t).assemble();
        const CorrelationReport r = correlation_report(rho, *basis, tol);
        return std::vector<double>{t, r.geometric_discord, r.negativity, r.purity, r.trace_error};
    });
    for (const auto &r : rows)
        table.add_row(r);
    return table;
}

SweepTable sweep_detuning_steady(const ExperimentConfig &config) {
    config.validate();
    require_dephasing(config.params);
    SweepTable table({"delta", "D_G_inf"}, provenance_lines(config));
    const auto deltas = config.delta_range.values();
    const auto values = detail::parallel_map(deltas.size(), config.threads,
                                             [&](std::size_t i) { return steady_at(config, deltas[i], config.init.p); });
    for (std::size_t i = 0; i < deltas.size(); ++i)
        table.add_row({deltas[i], values[i]});
    return table;
}

SweepTable surface_grid(const ExperimentConfig &config) {
    config.validate();
    require_dephasing(config.params);
    SweepTable table({"delta", "p", "D_G_inf"}, provenance_lines(config));
    const auto deltas = config.delta_range.values();
    const auto ps = config.p_range.values();
    const auto values = detail::parallel_map(deltas.size() * ps.size(), config.threads, [&](std::size_t i) {
        return steady_at(config, deltas[i / ps.size()], ps[i % ps.size()]);
    });
    for (std::size_t i = 0; i < values.size(); ++i)
        table.add_row({deltas[i / ps.size()], ps[i % ps.size()], values[i]});
    return table;
}

OptimumResult find_optimal_detuning(const ExperimentConfig &config) {
    config.validate();
    require_dephasing(config.params);
    const Range &r = config.delta_range;
    if (!(r.hi > r.lo))
        throw ConfigError("--delta-range must have positive width");

    const auto deltas = r.values();
    const auto values = detail::parallel_map(deltas.size(), config.threads,
                                             [&](std::size_t i) { return steady_at(config, deltas[i], config.init.p); });
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] > values[best]) // strict: ties keep the smaller delta
            best = i;
    if (values[best] <= 1e-12)
        return {};

    auto f = [&](double d) { return steady_at(config, d, config.init.p); };
    double a = deltas[best == 0 ? 0 : best - 1];
    double b = deltas[std::min(best + 1, deltas.size() - 1)];
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > 1e-6) {
        if (f1 >= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    const double mid = 0.5 * (a + b);
    const double f_mid = f(mid);

    OptimumResult out{true, deltas[best], values[best]};
    if (f_mid > out.value)
        out = {true, mid, f_mid};
    return out;
}

SweepTable optimum_table(const ExperimentConfig &config, const OptimumResult &result) {
    SweepTable table({"defined", "delta_opt", "D_G_inf"}, provenance_lines(config));
    table.add_row({result.defined ? 1.0 : 0.0, result.defined ? result.delta_opt : 0.0, result.value});
    return table;
}

double fig_coincidence_deviation(const ModelParams &params, const Range &deltas, int coherent_dim) {
    const InitialState number{0.5, NumberState{1, 0}};
    const InitialState coherent{0.5, CoherentState{std::sqrt(5.0), 0.0, coherent_dim}};
    double worst = 0.0;
    for (const double d : deltas.values()) {
        ModelParams p = params;
        p.delta = d;
        worst = std::max(worst, std::abs(steady_discord(number, p) - steady_discord(coherent, p)));
    }
    return worst;
}

} // namespace jcd
