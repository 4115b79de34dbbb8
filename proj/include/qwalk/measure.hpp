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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace qwalk {

/// A point of R^d for d <= 2; unused trailing coordinates are zero.
using Vec2 = std::array<double, 2>;

/// Uniform axis description shared by every coordinate of a density grid.
struct DensityAxis {
  std::size_t points = 0;
  double origin = 0.0;   // coordinate of index 0
  double spacing = 0.0;  // distance between neighbouring samples

  double coordinate(std::size_t i) const { return origin + static_cast<double>(i) * spacing; }
  bool operator==(const DensityAxis&) const = default;
};

/// Real density sampled on a regular grid in dimension 1 or 2.
///
/// Values are stored row-major (first coordinate slowest) and are meant as
/// point samples of a density, so sum(values) * spacing^dim is the total mass.
struct DensityOnGrid {
  int dim = 1;
  DensityAxis axis;
  std::vector<double> values;

  std::size_t size() const;
  double cell_volume() const;
  double total_mass() const;
  Vec2 point(std::size_t flat_index) const;
};

/// Weighted point masses in R^dim.
struct EmpiricalMeasure {
  int dim = 1;
  std::vector<double> coords;   // atom i occupies coords[i*dim, (i+1)*dim)
  std::vector<double> weights;  // one per atom
  std::optional<std::uint64_t> seed;
  std::size_t samples = 0;      // Monte Carlo draws behind the atoms, 0 if exact

  std::size_t size() const { return weights.size(); }
  double total_weight() const;
  Vec2 point(std::size_t i) const;
  void add(const Vec2& point, double weight);
};

using Measure = std::variant<DensityOnGrid, EmpiricalMeasure>;

int measure_dim(const Measure& m);
double total_mass(const Measure& m);

/// Relabels the bins of P as n^d P(n x): the grid contracts by 1/n and values
/// scale by n^d. No resampling. Throws for n == 0.
DensityOnGrid rescaled_density(const DensityOnGrid& density, std::int64_t n);

/// One-dimensional marginal along `coordinate` as sorted (point, weight)
/// pairs. Grid densities contribute one atom per grid point with weight
/// value * cell volume.
struct Marginal {
  std::vector<double> points;
  std::vector<double> weights;
};
Marginal marginal(const Measure& m, int coordinate);

}  // namespace qwalk
