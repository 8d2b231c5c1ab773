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

// jcd: experiment runner.
//
//   jcd evolve   --field number:0 --p 1 --delta 0 --gamma 0 --tmax 100 --steps 201
//   jcd steady   --field coherent:2.236 --delta-range 0:1:0.01 --out steady.csv --plot-script
//   jcd surface  --delta-range 0:1:0.1 --p-range 0:1:0.1
//   jcd optimum  --p 1
//   jcd validate
//
// Exit codes: 0 success, 1 validation failure, 2 configuration error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "jcd/error.hpp"
#include "jcd/experiments.hpp"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitConfig = 2;

struct Flags {
    std::string field = "number:1";
    int dim = 0;
    double p = 0.5;
    double delta = 0.2;
    double g = 0.1;
    double gamma = 0.5;
    double t_max = 200.0;
    int steps = 401;
    std::string delta_range = "0:1:0.01";
    std::string p_range = "0:1:0.1";
    std::string out;
    bool plot_script = false;
    int threads = 0;
    std::string fault;
    std::uint64_t seed = jcd::ValidationOptions{}.seed;
};

jcd::ExperimentConfig to_config(const std::string &command, const Flags &f) {
    jcd::ExperimentConfig c;
    c.command = command;
    c.params = {1.0, f.g, f.delta, f.gamma};
    c.field_text = f.field;
    c.init = {f.p, jcd::parse_field(f.field, f.dim)};
    c.t_max = f.t_max;
    c.steps = f.steps;
    c.delta_range = jcd::Range::parse(f.delta_range, "--delta-range");
    c.p_range = jcd::Range::parse(f.p_range, "--p-range");
    c.out = f.out;
    c.plot_script = f.plot_script;
    c.threads = f.threads;
    c.validate();
    return c;
}

void emit(const jcd::ExperimentConfig &c, const jcd::SweepTable &table) {
    if (c.out.empty()) {
        table.write_csv(std::cout);
        return;
    }
    std::ofstream os(c.out, std::ios::binary);
    if (!os)
        throw jcd::ConfigError("cannot open '" + c.out + "' for writing");
    table.write_csv(os);
    if (!os.flush())
        throw jcd::Error("write to '" + c.out + "' failed");
    if (c.plot_script) {
        std::ofstream py(c.out + ".py", std::ios::binary);
        py << jcd::plot_script(c.command, c.out);
        if (!py.flush())
            throw jcd::Error("write to '" + c.out + ".py' failed");
    }
}

int run(const std::string &command, const Flags &f) {
    if (command == "validate") {
        jcd::ValidationOptions opt;
        opt.seed = f.seed;
        opt.flip_gamma_sign = f.fault == "gamma-sign";
        const jcd::ValidationReport report = jcd::run_validation(opt, std::cout);
        std::size_t failed = 0;
        for (const auto &c : report.checks)
            failed += (!c.informational && !c.passed) ? 1 : 0;
        std::cout << (failed ? "FAILED: " + std::to_string(failed) + " check(s)" : "all checks passed") << '\n';
        return failed ? kExitValidation : 0;
    }

    const jcd::ExperimentConfig c = to_config(command, f);
    if (c.plot_script && c.out.empty())
        throw jcd::ConfigError("--plot-script needs --out");
    if (c.params.rwa_questionable())
        std::cerr << "warning: g = " << c.params.g << " is large; the rotating-wave approximation may not hold\n";

    if (command == "evolve")
        emit(c, jcd::run_timeseries(c));
    else if (command == "steady")
        emit(c, jcd::sweep_detuning_steady(c));
    else if (command == "surface")
        emit(c, jcd::surface_grid(c));
    else if (command == "optimum") {
        const jcd::OptimumResult r = jcd::find_optimal_detuning(c);
        if (!r.defined)
            std::cerr << "note: steady discord vanishes on the whole range; optimum undefined\n";
        emit(c, jcd::optimum_table(c, r));
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Atom-field correlations under intrinsic decoherence"};
    app.require_subcommand(1);
    Flags f;

    auto add_model = [&](CLI::App *sub) {
        sub->add_option("--field", f.field, "number:<k> or coherent:<modulus>[,<phase>]")->capture_default_str();
        sub->add_option("--dim", f.dim, "field truncation (0 = default)")->capture_default_str();
        sub->add_option("--p", f.p, "initial excited-state population")->capture_default_str();
        sub->add_option("--delta", f.delta, "detuning omega_A - omega_F")->capture_default_str();
        sub->add_option("--g", f.g, "coupling constant")->capture_default_str();
        sub->add_option("--gamma", f.gamma, "intrinsic decoherence rate")->capture_default_str();
        sub->add_option("--out", f.out, "CSV path (stdout if omitted)");
        sub->add_flag("--plot-script", f.plot_script, "also write <out>.py");
        sub->add_option("--threads", f.threads, "worker threads (0 = all cores)")->capture_default_str();
    };

    auto *evolve = app.add_subcommand("evolve", "time series of D_G, negativity, purity");
    add_model(evolve);
    evolve->add_option("--tmax", f.t_max, "end time")->capture_default_str();
    evolve->add_option("--steps", f.steps, "number of samples")->capture_default_str();

    auto *steady = app.add_subcommand("steady", "steady-state D_G over a detuning grid");
    add_model(steady);
    steady->add_option("--delta-range", f.delta_range, "lo:hi:step")->capture_default_str();

    auto *surface = app.add_subcommand("surface", "steady-state D_G over (delta, p)");
    add_model(surface);
    surface->add_option("--delta-range", f.delta_range, "lo:hi:step")->capture_default_str();
    surface->add_option("--p-range", f.p_range, "lo:hi:step")->capture_default_str();

    auto *optimum = app.add_subcommand("optimum", "detuning that maximizes steady-state D_G");
    add_model(optimum);
    optimum->add_option("--delta-range", f.delta_range, "lo:hi:step")->capture_default_str();

    auto *validate = app.add_subcommand("validate", "run the invariant suite");
    validate->add_option("--seed", f.seed, "seed for random instances")->capture_default_str();
    validate->add_option("--inject-fault", f.fault, "")->check(CLI::IsMember({"gamma-sign"}))->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        return run(app.get_subcommands().front()->get_name(), f);
    } catch (const jcd::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitValidation;
    }
}
