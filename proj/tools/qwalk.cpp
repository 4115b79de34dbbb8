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

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "qwalk/acceptance.hpp"
#include "qwalk/config.hpp"
#include "qwalk/parallel.hpp"
#include "qwalk/runner.hpp"

namespace {

int run_command(const std::string& path, bool strict, const std::string& out) {
  qwalk::config::ExperimentConfig cfg;
  try {
    cfg = qwalk::config::load_config(path);
  } catch (const qwalk::config::ConfigError& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return qwalk::runner::kExitInvalidConfig;
  }
  qwalk::runner::RunOptions options;
  options.strict = strict;
  if (!out.empty()) options.out_dir = out;
  try {
    const auto result = qwalk::runner::run(cfg, options);
    for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
    std::cout << "wrote " << result.files.size() << " files to " << result.out_dir.string() << "\n";
    if (result.exit_code == qwalk::runner::kExitStrictWarning) {
      std::cerr << "--strict: warnings escalated\n";
    }
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qwalk::runner::kExitFailure;
  }
}

int verify_command(const std::string& name) {
  const auto suite = qwalk::acceptance::parse_suite(name);
  if (!suite) {
    std::cerr << "unknown suite '" << name << "' (lattice, plancherel, birkhoff, all)\n";
    return qwalk::runner::kExitInvalidConfig;
  }
  const auto results = qwalk::acceptance::run_suite(*suite, std::cout);
  for (const auto& r : results) {
    if (!r.passed) return qwalk::runner::kExitFailure;
  }
  return qwalk::runner::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qwalk: Hadamard, Plancherel and Birkhoff quantum walks"};
  app.set_version_flag("--version", QWALK_VERSION);
  app.require_subcommand(1);
  std::size_t threads = 0;
  app.add_option("--threads", threads, "Worker threads (default: QWALK_THREADS or all cores)");

  auto* run = app.add_subcommand("run", "Run an experiment config and write its artifacts");
  std::string config_path;
  std::string out_dir;
  bool strict = false;
  run->add_option("config", config_path, "Experiment config file")->required();
  run->add_option("--out", out_dir, "Output directory (overrides output.dir)");
  run->add_flag("--strict", strict, "Exit 3 when the run raises warnings");
  run->add_option("--threads", threads, "Worker threads");

  auto* verify = app.add_subcommand("verify", "Run acceptance suites");
  std::string suite = "all";
  verify->add_option("suite", suite, "lattice, plancherel, birkhoff or all")->required();
  verify->add_option("--threads", threads, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qwalk::runner::kExitInvalidConfig;
  }
  if (threads > 0) qwalk::set_thread_count(threads);
  if (*run) return run_command(config_path, strict, out_dir);
  return verify_command(suite);
}
