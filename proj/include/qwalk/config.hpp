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

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qwalk/birkhoff_walk.hpp"
#include "qwalk/dynamical_system.hpp"
#include "qwalk/limits_analysis.hpp"
#include "qwalk/profiles.hpp"

/// Experiment configuration: a TOML subset with [section] headers,
/// `key = value` lines, number arrays and `#` comments.
namespace qwalk::config {

enum class WalkKind { hadamard, plancherel, birkhoff };

const char* walk_name(WalkKind kind);

struct HadamardConfig {
  std::int64_t site = 0;
  std::string coin = "heads";  // heads | tails | symmetric
  bool operator==(const HadamardConfig&) const = default;
};

struct PlancherelConfig {
  int dim = 1;
  std::size_t coin_points = 256;
  std::size_t x_factor = 8;
  std::string form = "product";  // product | grid-file
  Profile phi = GaussianProfile{};
  Profile chi = GaussianProfile{};
  std::string grid_file;
  bool operator==(const PlancherelConfig&) const = default;
};

struct BirkhoffConfig {
  std::string system = "rotation";  // rotation | baker
  std::optional<double> alpha;
  std::optional<std::int64_t> alpha_p;
  std::optional<std::int64_t> alpha_q;
  std::vector<birkhoff::TrigPolynomial> h{birkhoff::TrigPolynomial{0.0, {{0, 1, 1.0, 0.0}}}};
  Profile phi = GaussianProfile{};
  std::string chi = "uniform";  // uniform | trig
  birkhoff::TrigPolynomial chi_amplitude{1.0, {}};
  std::size_t samples = 100000;
  std::int64_t n_avg = 10000;
  std::size_t limit_samples = 100000;
  bool quadrature = false;
  std::size_t omega_cells = 1024;
  std::size_t x_points = 2048;
  double x_half_length = 0.0;  // 0 picks a range covering every orbit sum
  bool operator==(const BirkhoffConfig&) const = default;
};

struct ExperimentConfig {
  WalkKind walk = WalkKind::plancherel;
  std::vector<std::int64_t> n_list;
  std::optional<std::uint64_t> seed;
  analysis::CfWindow window;
  std::string output_dir = "qwalk-out";
  HadamardConfig hadamard;
  PlancherelConfig plancherel;
  BirkhoffConfig birkhoff;
  bool operator==(const ExperimentConfig&) const = default;
};

/// Every problem found in a document, in reading order.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> errors);
  const std::vector<std::string>& errors() const { return errors_; }

 private:
  std::vector<std::string> errors_;
};

ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

/// Canonical document for `config`; parse_config(to_text(c)) == c.
std::string to_text(const ExperimentConfig& config);

/// The dynamical system described by a Birkhoff config.
std::unique_ptr<birkhoff::DynamicalSystem> make_system(const BirkhoffConfig& config);
birkhoff::CoinDensity make_coin(const BirkhoffConfig& config, birkhoff::Space space);

}  // namespace qwalk::config
