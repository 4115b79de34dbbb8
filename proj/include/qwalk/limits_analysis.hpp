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

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qwalk/measure.hpp"

/// Distances between probability measures on R^d, d <= 2.
namespace qwalk::analysis {

using Complex = std::complex<double>;

/// Frequencies zeta in [-half_width, half_width]^d. One-dimensional measures
/// use `points` samples; two-dimensional ones a `points_2d` x `points_2d` grid.
struct CfWindow {
  double half_width = 8.0;
  std::size_t points = 257;
  std::size_t points_2d = 33;
  bool operator==(const CfWindow&) const = default;
};

std::vector<Vec2> zeta_grid(const CfWindow& window, int dim);

/// phi(zeta) = integral exp(i zeta.x) dm, exact for atoms and a Riemann sum
/// for grid densities.
std::vector<Complex> characteristic_function(const Measure& m, std::span<const Vec2> zetas);

/// max over the window grid of |phi_1 - phi_2|.
double cf_distance(const Measure& a, const Measure& b, const CfWindow& window = {});

/// sqrt((1 - |phi|^2) / samples): standard error of a Monte Carlo estimate of
/// phi(zeta) from `samples` independent draws.
double cf_standard_error(Complex phi, std::size_t samples);

/// sup_t |F_a(t) - F_b(t)| on one-dimensional marginals, maximised over
/// coordinates. Throws for dimension mismatch.
double ks_distance(const Measure& a, const Measure& b);
/// sup_t |F(t) - cdf(t)| for the marginal along `coordinate`; cdf must be
/// continuous.
double ks_distance_to_cdf(const Measure& m, const std::function<double(double)>& cdf,
                          int coordinate = 0);

/// Levy distance between one-dimensional marginals, maximised over
/// coordinates. Unlike KS it metrises weak convergence to atoms.
double levy_distance(const Measure& a, const Measure& b);

/// moments[c][k - 1] = integral x_c^k dm for k = 1..max_order (<= 8).
std::vector<std::vector<double>> moments(const Measure& m, int max_order);

struct SweepSample {
  Measure measure;
  std::vector<std::string> warnings;
};

struct SweepEntry {
  std::int64_t n = 0;
  /// Distances to the limit, or to the previous entry when the sweep has no
  /// limit. Empty for the first entry of a limit-free sweep.
  std::optional<double> cf;
  std::optional<double> ks;
  std::optional<double> levy;
  std::vector<std::vector<double>> moments;
};

struct ConvergenceReport {
  std::string walk;
  CfWindow window;
  bool has_limit = true;
  std::vector<SweepEntry> entries;
  bool cf_nonincreasing = true;
  bool cf_strictly_decreasing = true;
  bool ks_nonincreasing = true;
  std::vector<std::string> warnings;
};

/// Runs the walk at each n and compares against `limit`, or against the
/// previous n when no limit is given. Throws for an empty or non-increasing
/// n-list.
ConvergenceReport convergence_sweep(const std::string& walk, std::span<const std::int64_t> ns,
                                    const std::function<SweepSample(std::int64_t)>& run_at,
                                    const std::optional<Measure>& limit,
                                    const CfWindow& window = {}, int max_moment = 4);

}  // namespace qwalk::analysis
