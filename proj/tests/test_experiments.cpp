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
#include <sstream>

#include "doctest.h"
#include "jcd/error.hpp"
#include "jcd/experiments.hpp"

using namespace jcd;

namespace {

ExperimentConfig config(const std::string &command, const std::string &field, double p) {
    ExperimentConfig c;
    c.command = command;
    c.field_text = field;
    c.init = {p, parse_field(field)};
    return c;
}

std::string csv(const SweepTable &t) {
    std::ostringstream os;
    t.write_csv(os);
    return os.str();
}

} // namespace

TEST_CASE("range parsing") {
    const Range r = Range::parse("0:1:0.25");
    CHECK(r.values() == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
    CHECK(Range::parse("0:1:0.01").values().size() == 101);
    CHECK(Range::parse("0:1:0.01").values().back() == 1.0);
    CHECK(Range::parse("0.5:0.5:0.1").values().size() == 1);
    CHECK(Range::parse("0:1:0.3").values().back() == doctest::Approx(0.9));
    CHECK_THROWS_AS(Range::parse("0:1"), ConfigError);
    CHECK_THROWS_AS(Range::parse("0:1:0"), ConfigError);
    CHECK_THROWS_AS(Range::parse("1:0:0.1"), ConfigError);
    CHECK_THROWS_AS(Range::parse("a:1:0.1"), ConfigError);
    CHECK_THROWS_AS(Range::parse("0:1:0.1:2"), ConfigError);
}

TEST_CASE("field parsing") {
    const auto n = std::get<NumberState>(parse_field("number:3"));
    CHECK(n.k == 3);
    CHECK(n.dim == 0);
    const auto c = std::get<CoherentState>(parse_field("coherent:2,0.5", 40));
    CHECK(c.modulus == 2.0);
    CHECK(c.phase == 0.5);
    CHECK(c.dim == 40);
    const auto d = std::get<CoherentState>(parse_field("coherent"));
    CHECK(d.modulus == doctest::Approx(std::sqrt(5.0)));
    CHECK(d.dim == 30);
    CHECK_THROWS_AS(parse_field("number:"), ConfigError);
    CHECK_THROWS_AS(parse_field("number:-1"), ConfigError);
    CHECK_THROWS_AS(parse_field("squeezed:1"), ConfigError);
    CHECK_THROWS_AS(parse_field("coherent:x"), ConfigError);
}

TEST_CASE("config validation") {
    ExperimentConfig c = config("evolve", "number:1", 0.5);
    CHECK_NOTHROW(c.validate());
    c.steps = 1;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = config("evolve", "number:1", 1.5);
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = config("surface", "number:1", 0.5);
    c.p_range = {0.0, 2.0, 0.5};
    CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("sweep table") {
    SweepTable t({"a", "b"}, {"note"});
    t.add_row({1.0, 0.1234567890123456});
    t.add_row({-0.0, 1e-20});
    CHECK_THROWS_AS(t.add_row({1.0}), DimensionMismatch);
    CHECK(csv(t) == "# note\na,b\n1,0.123456789012\n0,1e-20\n");
    CHECK(t.column("b").size() == 2);
    CHECK_THROWS_AS((void)t.column("c"), Error);

    t.add_row({std::nan(""), 0.0});
    std::ostringstream os;
    CHECK_THROWS_AS(t.write_csv(os), Error);
    CHECK(os.str().empty());
}

TEST_CASE("provenance echoes the configuration") {
    const auto lines = provenance_lines(config("steady", "coherent:2", 0.25));
    std::string all;
    for (const auto &l : lines)
        all += l + "\n";
    CHECK(all.find("command: steady") != std::string::npos);
    CHECK(all.find("field: coherent:2 (dim 30)") != std::string::npos);
    CHECK(all.find("p: 0.25") != std::string::npos);
    CHECK(all.find("delta-range: 0:1:0.01") != std::string::npos);
}

TEST_CASE("time series: resonant vacuum") {
    ExperimentConfig c = config("evolve", "number:0", 1.0);
    c.params = {1.0, 0.1, 0.0, 0.0};
    c.t_max = 10 * std::numbers::pi / c.params.g;
    c.steps = 501;
    const SweepTable t = run_timeseries(c);
    REQUIRE(t.rows().size() == 501);
    for (const auto &r : t.rows()) {
        const double s = std::sin(2 * c.params.g * r[0]);
        CHECK(std::abs(r[1] - 0.5 * s * s) <= 1e-9);
        CHECK(std::abs(r[1] - 2 * r[2] * r[2]) <= 1e-9);
        CHECK(std::abs(r[3] - 1.0) <= 1e-12);
    }

    c.steps = 3;
    c.t_max = std::numbers::pi / (4 * c.params.g);
    const SweepTable small = run_timeseries(c);
    CHECK(small.rows().size() == 3);
    CHECK(small.rows()[1][1] == doctest::Approx(0.25));
    CHECK(small.rows()[2][1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("time series values stay in range") {
    ExperimentConfig c = config("evolve", "coherent", 0.5);
    c.t_max = 300;
    c.steps = 31;
    const SweepTable t = run_timeseries(c);
    for (const auto &r : t.rows()) {
        CHECK(r[1] >= 0.0);
        CHECK(r[1] <= 0.5);
        CHECK(r[2] >= 0.0);
        CHECK(r[2] <= 0.5);
        CHECK(r[4] <= kCoherentTailTolerance);
    }
}

TEST_CASE("detuning sweep") {
    for (double p : {0.0, 0.5, 1.0}) {
        const SweepTable t = sweep_detuning_steady(config("steady", "number:1", p));
        const auto d = t.column("D_G_inf");
        REQUIRE(d.size() == 101);
        CHECK(d.front() <= 1e-10);
        const auto peak = std::max_element(d.begin(), d.end());
        CHECK(peak != d.begin());
        CHECK(peak != d.end() - 1);
        CHECK(*peak > std::max(d.front(), d.back()));
    }
    ExperimentConfig c = config("steady", "number:1", 0.5);
    c.params.gamma = 0.0;
    CHECK_THROWS_AS(sweep_detuning_steady(c), ConfigError);
}

TEST_CASE("surface") {
    ExperimentConfig c = config("surface", "number:1", 0.5);
    c.delta_range = {0.0, 1.0, 0.1};
    const SweepTable t = surface_grid(c);
    REQUIRE(t.rows().size() == 121);
    CHECK(t.rows()[1][0] == 0.0);
    CHECK(t.rows()[1][1] == doctest::Approx(0.1));
    CHECK(t.rows()[11][0] == doctest::Approx(0.1));

    double asym = 0.0;
    for (int i = 0; i < 11; ++i) {
        CHECK(t.rows()[static_cast<std::size_t>(i)][2] <= 1e-10); // delta = 0 column
        for (int j = 0; j < 11; ++j)
            asym = std::max(asym, std::abs(t.rows()[static_cast<std::size_t>(11 * i + j)][2] -
                                           t.rows()[static_cast<std::size_t>(11 * i + 10 - j)][2]));
    }
    CHECK(asym > 1e-6);
}

TEST_CASE("optimal detuning") {
    const OptimumResult dark = find_optimal_detuning(config("optimum", "number:0", 0.0));
    CHECK_FALSE(dark.defined);
    CHECK(dark.value == 0.0);

    ExperimentConfig c = config("optimum", "number:1", 1.0);
    const OptimumResult r = find_optimal_detuning(c);
    CHECK(r.defined);
    CHECK(r.delta_opt > 0.0);
    CHECK(r.delta_opt < 1.0);
    CHECK(r.value > 0.0);

    // refined value beats every point of a fine verification grid
    double best = 0.0;
    for (int i = 0; i <= 2000; ++i) {
        ModelParams q = c.params;
        q.delta = i * 5e-4;
        best = std::max(best, steady_discord(c.init, q));
    }
    CHECK(r.value >= best - 1e-12);
    CHECK(r.value - best <= 1e-6);

    const SweepTable t = optimum_table(c, r);
    CHECK(t.columns() == std::vector<std::string>{"defined", "delta_opt", "D_G_inf"});
}

TEST_CASE("parallel and serial sweeps are byte-identical") {
    ExperimentConfig c = config("surface", "coherent", 0.5);
    c.delta_range = {0.0, 1.0, 0.125};
    c.p_range = {0.0, 1.0, 0.25};
    c.threads = 1;
    const std::string serial = csv(surface_grid(c));
    for (int threads : {2, 3, 8}) {
        c.threads = threads;
        CHECK(csv(surface_grid(c)) == serial);
    }
}

TEST_CASE("coincidence metric is reported") {
    const double dev = fig_coincidence_deviation({1.0, 0.1, 0.0, 0.5}, {0.0, 1.0, 0.1});
    CHECK(std::isfinite(dev));
    CHECK(dev >= 0.0);
}

TEST_CASE("plot scripts") {
    CHECK(plot_script("evolve", "x.csv").find("negativity") != std::string::npos);
    CHECK(plot_script("surface", "x.csv").find("pcolormesh") != std::string::npos);
    CHECK(plot_script("steady", "x.csv").find("x.csv.png") != std::string::npos);
}

TEST_CASE("validation suite and fault canary") {
    std::ostringstream log;
    const ValidationReport ok = run_validation({}, log);
    CHECK(ok.passed());
    CHECK(log.str().find("INFO number:1 vs coherent") != std::string::npos);

    std::ostringstream log2;
    ValidationOptions fault;
    fault.flip_gamma_sign = true;
    const ValidationReport bad = run_validation(fault, log2);
    CHECK_FALSE(bad.passed());
    for (const auto &check : bad.checks)
        if (!check.passed)
            CHECK(check.name.find("master-equation") != std::string::npos);
}
