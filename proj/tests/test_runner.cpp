// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qwalk/config.hpp"
#include "qwalk/emit.hpp"
#include "qwalk/runner.hpp"

using namespace qwalk;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("qwalk_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

emit::Json read_json(const fs::path& p) { return emit::Json::parse(slurp(p)); }

config::ExperimentConfig small_birkhoff() {
  return config::parse_config(R"(walk = "birkhoff"
[run]
n = [5, 50]
seed = 99
samples = 2000
[system]
kind = "baker"
[limit]
n_avg = 200
samples = 2000
)");
}

}  // namespace

TEST_CASE("hadamard run writes every artifact") {
  const auto dir = scratch("hadamard");
  const auto c = config::parse_config("walk = \"hadamard\"\n[run]\nn = [10, 20, 40]\n");
  const auto r = runner::run(c, {false, dir});
  CHECK(r.exit_code == runner::kExitOk);
  for (const char* f : {"q_n_10.csv", "q_n_40.csv", "report.json", "report.csv", "summary.json", "manifest.json"}) {
    CHECK_MESSAGE(fs::exists(dir / f), f);
  }
  const auto manifest = read_json(dir / "manifest.json");
  CHECK(config::parse_config(manifest["config"].get<std::string>()) == c);
  const auto summary = read_json(dir / "summary.json");
  CHECK(summary.contains("norm"));
}

TEST_CASE("plancherel run") {
  const auto dir = scratch("plancherel");
  const auto c = config::parse_config("walk = \"plancherel\"\n[run]\nn = [4, 8]\n[grid]\ncoin_points = 64\nx_factor = 8\n");
  const auto r = runner::run(c, {true, dir});
  CHECK(r.exit_code == runner::kExitOk);
  CHECK(r.warnings.empty());
  CHECK(fs::exists(dir / "q_limit.csv"));
  const auto summary = read_json(dir / "summary.json");
  CHECK(summary["u4_error"].get<double>() < 1e-6);
  CHECK(std::abs(summary["norm"].get<double>() - 1.0) < 1e-10);
}

TEST_CASE("birkhoff runs are reproducible") {
  const auto a = scratch("birkhoff_a");
  const auto b = scratch("birkhoff_b");
  CHECK(runner::run(small_birkhoff(), {false, a}).exit_code == runner::kExitOk);
  CHECK(runner::run(small_birkhoff(), {false, b}).exit_code == runner::kExitOk);
  for (const char* f : {"q_n_5.csv", "q_n_50.csv", "q_limit.csv", "report.csv"}) {
    CHECK_MESSAGE(slurp(a / f) == slurp(b / f), f);
  }
  const auto meta = read_json(a / "q_n_5.json");
  CHECK(meta.dump().find("99") != std::string::npos);
}

TEST_CASE("strict mode turns boundary warnings into exit code 3") {
  const auto c = config::parse_config(R"(walk = "plancherel"
[run]
n = [4]
[grid]
coin_points = 16
x_factor = 1
[psi0.phi]
kind = "box"
a = -2.8
b = 2.8
)");
  const auto loose = runner::run(c, {false, scratch("loose")});
  CHECK(loose.exit_code == runner::kExitOk);
  CHECK_FALSE(loose.warnings.empty());
  const auto strict = runner::run(c, {true, scratch("strict")});
  CHECK(strict.exit_code == runner::kExitStrictWarning);
  const auto manifest = read_json(strict.out_dir / "manifest.json");
  CHECK_FALSE(manifest["warnings"].empty());
}
