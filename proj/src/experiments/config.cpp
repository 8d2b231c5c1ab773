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

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>

#include "jcd/error.hpp"
#include "jcd/experiments.hpp"

#ifndef JCD_VERSION
#define JCD_VERSION "0.0.0"
#endif

namespace jcd {

namespace {

double parse_double(std::string_view text, const std::string &what) {
    // std::from_chars for double is available in libstdc++ 11
    double v = 0.0;
    const auto *first = text.data();
    const auto *last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || text.empty())
        throw ConfigError("cannot parse " + what + " from '" + std::string(text) + "'");
    return v;
}

int parse_int(std::string_view text, const std::string &what) {
    int v = 0;
    const auto *last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), last, v);
    if (ec != std::errc() || ptr != last || text.empty())
        throw ConfigError("cannot parse " + what + " from '" + std::string(text) + "'");
    return v;
}

} // namespace

Range Range::parse(const std::string &text, const char *name) {
    const auto first = text.find(':');
    const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
    if (second == std::string::npos || text.find(':', second + 1) != std::string::npos)
        throw ConfigError(std::string(name) + " must look like lo:hi:step, got '" + text + "'");
    const std::string_view view(text);
    Range r;
    r.lo = parse_double(view.substr(0, first), "range start");
    r.hi = parse_double(view.substr(first + 1, second - first - 1), "range end");
    r.step = parse_double(view.substr(second + 1), "range step");
    r.validate(name);
    return r;
}

void Range::validate(const char *name) const {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(step))
        throw ConfigError(std::string(name) + ": values must be finite");
    if (!(step > 0.0))
        throw ConfigError(std::string(name) + ": step must be positive");
    if (hi < lo)
        throw ConfigError(std::string(name) + ": empty range (hi < lo)");
}

std::vector<double> Range::values() const {
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> v;
    v.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        v.push_back(std::min(hi, lo + static_cast<double>(i) * step));
    return v;
}

std::string Range::str() const { return format_value(lo) + ":" + format_value(hi) + ":" + format_value(step); }

FieldInitSpec parse_field(const std::string &text, int dim) {
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    const std::string rest = colon == std::string::npos ? std::string() : text.substr(colon + 1);

    if (kind == "number") {
        if (rest.empty())
            throw ConfigError("number field needs an index, e.g. number:1");
        NumberState s{parse_int(rest, "Fock index"), dim};
        if (s.k < 0)
            throw ConfigError("Fock index must be non-negative");
        return s;
    }
    if (kind == "coherent") {
        CoherentState s{std::sqrt(5.0), 0.0, dim == 0 ? 30 : dim};
        if (!rest.empty()) {
            const auto comma = rest.find(',');
            s.modulus = parse_double(std::string_view(rest).substr(0, comma), "coherent modulus");
            if (comma != std::string::npos)
                s.phase = parse_double(std::string_view(rest).substr(comma + 1), "coherent phase");
        }
        if (!(s.modulus >= 0.0))
            throw ConfigError("coherent modulus must be non-negative");
        return s;
    }
    throw ConfigError("unknown field '" + text + "'; expected number:<k> or coherent:<modulus>[,<phase>]");
}

void ExperimentConfig::validate() const {
    params.validate();
    init.validate();
    if (steps < 2)
        throw ConfigError("--steps must be >= 2");
    if (!(t_max > 0.0) || !std::isfinite(t_max))
        throw ConfigError("--tmax must be positive");
    delta_range.validate("--delta-range");
    p_range.validate("--p-range");
    if (p_range.lo < 0.0 || p_range.hi > 1.0)
        throw ConfigError("--p-range must lie within [0, 1]");
}

std::vector<std::string> provenance_lines(const ExperimentConfig &c) {
    std::vector<std::string> lines;
    lines.push_back("jcd " JCD_VERSION);
    lines.push_back("command: " + c.command);
    lines.push_back("field: " + c.field_text + " (dim " + std::to_string(field_dim(c.init.field)) + ")");
    lines.push_back("p: " + format_value(c.init.p));
    lines.push_back("g: " + format_value(c.params.g));
    lines.push_back("delta: " + format_value(c.params.delta));
    lines.push_back("gamma: " + format_value(c.params.gamma));
    if (c.command == "evolve")
        lines.push_back("tmax: " + format_value(c.t_max) + ", steps: " + std::to_string(c.steps));
    if (c.command == "steady" || c.command == "surface" || c.command == "optimum")
        lines.push_back("delta-range: " + c.delta_range.str());
    if (c.command == "surface")
        lines.push_back("p-range: " + c.p_range.str());
    lines.push_back("units: omega_A = 1; delta and g in omega_A, gamma and t in 1/omega_A");
    lines.push_back("negativity: sum of |negative eigenvalues| of the atom partial transpose");
    return lines;
}

} // namespace jcd
