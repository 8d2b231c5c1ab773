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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

int run(const std::string &args) {
    const std::string cmd = std::string(JCD_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch() {
    const fs::path dir = fs::temp_directory_path() / ("jcd_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("exit codes") {
    CHECK(run("steady --delta-range 0:1:0.1") == 0);
    CHECK(run("evolve --steps 5 --tmax 10") == 0);
    CHECK(run("optimum --field number:0 --p 0") == 0);
    CHECK(run("steady --gamma 0") == 2);
    CHECK(run("steady --delta-range 1:0:0.1") == 2);
    CHECK(run("evolve --field coherent:6") == 2);
    CHECK(run("evolve --p 2") == 2);
    CHECK(run("evolve --bogus") == 2);
    CHECK(run("") == 2);
    CHECK(run("validate --inject-fault gamma-sign") == 1);
}

TEST_CASE("identical flags give identical files") {
    const fs::path dir = scratch();
    const std::string flags = "steady --field coherent --p 0.5 --delta-range 0:1:0.05";
    REQUIRE(run(flags + " --threads 1 --out " + (dir / "a.csv").string()) == 0);
    REQUIRE(run(flags + " --out " + (dir / "b.csv").string() + " --plot-script") == 0);
    CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
    CHECK(fs::exists(dir / "b.csv.py"));
    CHECK(slurp(dir / "a.csv").rfind("# jcd", 0) == 0);
    fs::remove_all(dir);
}

TEST_CASE("plot script needs an output file") { CHECK(run("steady --plot-script") == 2); }
