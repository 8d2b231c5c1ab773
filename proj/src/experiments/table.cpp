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
#include <ostream>
#include <sstream>

#include "jcd/error.hpp"
#include "jcd/experiments.hpp"

namespace jcd {

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v); // no "-0"
    return buf;
}

SweepTable::SweepTable(std::vector<std::string> columns, std::vector<std::string> provenance)
    : columns_(std::move(columns)), provenance_(std::move(provenance)) {
    if (columns_.empty())
        throw Error("SweepTable needs at least one column");
}

void SweepTable::add_row(std::vector<double> row) {
    if (row.size() != columns_.size())
        throw DimensionMismatch("row has " + std::to_string(row.size()) + " values, table has " +
                                std::to_string(columns_.size()) + " columns");
    rows_.push_back(std::move(row));
}

std::vector<double> SweepTable::column(const std::string &name) const {
    const auto it = std::find(columns_.begin(), columns_.end(), name);
    if (it == columns_.end())
        throw Error("no column named '" + name + "'");
    const auto j = static_cast<std::size_t>(it - columns_.begin());
    std::vector<double> out;
    out.reserve(rows_.size());
    for (const auto &r : rows_)
        out.push_back(r[j]);
    return out;
}

void SweepTable::write_csv(std::ostream &os) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < columns_.size(); ++j)
            if (!std::isfinite(rows_[i][j]))
                throw Error("non-finite value in row " + std::to_string(i) + ", column '" + columns_[j] + "'");

    std::ostringstream buf;
    for (const auto &line : provenance_)
        buf << "# " << line << '\n';
    for (std::size_t j = 0; j < columns_.size(); ++j)
        buf << (j ? "," : "") << columns_[j];
    buf << '\n';
    for (const auto &r : rows_) {
        for (std::size_t j = 0; j < r.size(); ++j)
            buf << (j ? "," : "") << format_value(r[j]);
        buf << '\n';
    }
    os << buf.str();
}

std::string plot_script(const std::string &command, const std::string &csv_path) {
    std::ostringstream s;
    s << "#!/usr/bin/env python3\n"
         "# Plots "
      << csv_path
      << "; needs numpy and matplotlib.\n"
         "import numpy as np\n"
         "import matplotlib.pyplot as plt\n\n"
         "data = np.genfromtxt(\""
      << csv_path
      << "\", delimiter=\",\", names=True, comments=\"#\")\n"
         "fig, ax = plt.subplots()\n";
    if (command == "evolve") {
        s << "ax.plot(data[\"t\"], data[\"D_G\"], label=\"D_G\")\n"
             "ax.plot(data[\"t\"], data[\"negativity\"], label=\"negativity\")\n"
             "ax.set_xlabel(\"t\")\n"
             "ax.legend()\n";
    } else if (command == "surface") {
        s << "deltas = np.unique(data[\"delta\"])\n"
             "ps = np.unique(data[\"p\"])\n"
             "z = data[\"D_G_inf\"].reshape(len(deltas), len(ps))\n"
             "mesh = ax.pcolormesh(ps, deltas, z, shading=\"auto\")\n"
             "fig.colorbar(mesh, ax=ax, label=\"D_G_inf\")\n"
             "ax.set_xlabel(\"p\")\n"
             "ax.set_ylabel(\"delta\")\n";
    } else if (command == "optimum") {
        s << "ax.plot(np.atleast_1d(data[\"delta_opt\"]), np.atleast_1d(data[\"D_G_inf\"]), \"o\")\n"
             "ax.set_xlabel(\"delta_opt\")\n"
             "ax.set_ylabel(\"D_G_inf\")\n";
    } else {
        s << "ax.plot(data[\"delta\"], data[\"D_G_inf\"])\n"
             "ax.set_xlabel(\"delta\")\n"
             "ax.set_ylabel(\"D_G_inf\")\n";
    }
    s << "fig.tight_layout()\n"
         "fig.savefig(\""
      << csv_path << ".png\", dpi=150)\n";
    return s.str();
}

} // namespace jcd
