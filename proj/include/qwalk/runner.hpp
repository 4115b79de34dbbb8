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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qwalk/config.hpp"

/// Runs an experiment and writes its artifacts.
namespace qwalk::runner {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitStrictWarning = 3;

struct RunOptions {
  bool strict = false;
  std::optional<std::filesystem::path> out_dir;  // overrides output.dir
};

struct RunResult {
  int exit_code = kExitOk;
  std::filesystem::path out_dir;
  std::vector<std::string> warnings;
  std::vector<std::filesystem::path> files;
};

/// Artifacts, all in the output directory:
///   q_n_<n>.csv      rescaled measure Q_n (grid density or atoms)
///   q_limit.csv      the limit law (plancherel, birkhoff)
///   report.json/csv  convergence report
///   summary.json     walk-specific diagnostics
///   manifest.json    config echo, version, seeds, threads, wall time, warnings
/// Birkhoff measures also get a <name>.json metadata file.
RunResult run(const config::ExperimentConfig& config, const RunOptions& options = {});

}  // namespace qwalk::runner
