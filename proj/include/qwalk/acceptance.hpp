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

#include <optional>
#include <ostream>
#include <string>
#include <vector>

/// The acceptance criteria, runnable from the CLI (`qwalk verify`) and from
/// the acceptance test binary.
namespace qwalk::acceptance {

enum class Suite { lattice, plancherel, birkhoff, all };

std::optional<Suite> parse_suite(const std::string& name);
std::vector<int> suite_criteria(Suite suite);

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 9;

/// Runs criterion `id` (1..9). Exceptions become failures.
CriterionResult run_criterion(int id);

/// "PASS  3  plancherel limit ... (12.3 s): detail"
std::string format_result(const CriterionResult& r);

/// Runs the suite, printing one line per criterion to `out` as it finishes.
std::vector<CriterionResult> run_suite(Suite suite, std::ostream& out);

}  // namespace qwalk::acceptance
