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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "jcd/dephasing.hpp"
#include "jcd/jcm_model.hpp"

namespace jcd {

/// Closed grid lo, lo + step, ..., up to hi (inclusive within 1e-9 steps).
struct Range {
    double lo = 0.0;
    double hi = 1.0;
    double step = 0.01;

    /// Parses "lo:hi:step". Throws ConfigError.
    static Range parse(const std::string &text, const char *name = "range");
    [[nodiscard]] std::vector<double> values() const;
    [[nodiscard]] std::string str() const;
    void validate(const char *name) const;
};

/// Parses "number:<k>", "coherent:<modulus>[,<phase>]" or "coherent" (|alpha| = sqrt 5).
/// dim = 0 keeps the default truncation of the variant.
FieldInitSpec parse_field(const std::string &text, int dim = 0);

struct ExperimentConfig {
    std::string command;
    ModelParams params{1.0, 0.1, 0.2, 0.5};
    InitialState init{0.5, NumberState{1, 0}};
    std::string field_text = "number:1";
    double t_max = 200.0;
    int steps = 401;
    Range delta_range{0.0, 1.0, 0.01};
    Range p_range{0.0, 1.0, 0.1};
    std::string out;
    bool plot_script = false;
    int threads = 0; ///< 0 = hardware concurrency

    /// Throws ConfigError.
    void validate() const;
};

/// Rectangular table of finite values with a provenance block.
class SweepTable {
  public:
    SweepTable(std::vector<std::string> columns, std::vector<std::string> provenance);

    void add_row(std::vector<double> row);
    [[nodiscard]] const std::vector<std::string> &columns() const noexcept { return columns_; }
    [[nodiscard]] const std::vector<std::vector<double>> &rows() const noexcept { return rows_; }
    [[nodiscard]] const std::vector<std::string> &provenance() const noexcept { return provenance_; }
    [[nodiscard]] std::vector<double> column(const std::string &name) const;

    /// '#'-prefixed provenance lines, header, then rows at 12 significant
    /// digits. Throws Error on non-finite values.
    void write_csv(std::ostream &os) const;

  private:
    std::vector<std::string> columns_;
    std::vector<std::vector<double>> rows_;
    std::vector<std::string> provenance_;
};

std::string format_value(double v);

/// Config echo for the CSV header.
std::vector<std::string> provenance_lines(const ExperimentConfig &config);

/// Asymptotic geometric discord: closed-form steady state for number
/// inputs, dephasing projection M^E for coherent ones.
double steady_discord(const InitialState &init, const ModelParams &params);

/// Columns t, D_G, negativity, purity, trace_error on a uniform grid over [0, t_max].
SweepTable run_timeseries(const ExperimentConfig &config);

/// Columns delta, D_G_inf over the detuning grid.
SweepTable sweep_detuning_steady(const ExperimentConfig &config);

/// Columns delta, p, D_G_inf; delta-major.
SweepTable surface_grid(const ExperimentConfig &config);

struct OptimumResult {
    bool defined = false;
    double delta_opt = 0.0;
    double value = 0.0;
};

/// Coarse scan over delta_range, then golden-section refinement to 1e-6.
/// A curve that never exceeds 1e-12 reports an undefined optimum with value 0.
OptimumResult find_optimal_detuning(const ExperimentConfig &config);

SweepTable optimum_table(const ExperimentConfig &config, const OptimumResult &result);

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
    bool informational = false;
};

struct ValidationOptions {
    std::uint64_t seed = 0x5eedULL;
    /// Mutation canary: build the master-equation generator with -gamma.
    bool flip_gamma_sign = false;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    [[nodiscard]] bool passed() const;
};

/// Invariant suite; prints one line per check to `log` as it goes.
ValidationReport run_validation(const ValidationOptions &options, std::ostream &log);

/// Largest pointwise |D_G_inf(number:1) - D_G_inf(coherent sqrt 5)| at p = 0.5
/// over the given detuning grid.
double fig_coincidence_deviation(const ModelParams &params, const Range &deltas, int coherent_dim = 30);

/// Python/matplotlib script that plots the CSV at `csv_path`.
std::string plot_script(const std::string &command, const std::string &csv_path);

} // namespace jcd
