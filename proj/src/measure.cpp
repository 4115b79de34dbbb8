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

#include "qwalk/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qwalk {

std::size_t DensityOnGrid::size() const {
  return dim == 1 ? axis.points : axis.points * axis.points;
}

double DensityOnGrid::cell_volume() const { return std::pow(axis.spacing, dim); }

double DensityOnGrid::total_mass() const {
  return std::accumulate(values.begin(), values.end(), 0.0) * cell_volume();
}

Vec2 DensityOnGrid::point(std::size_t flat_index) const {
  if (dim == 1) return {axis.coordinate(flat_index), 0.0};
  return {axis.coordinate(flat_index / axis.points), axis.coordinate(flat_index % axis.points)};
}

double EmpiricalMeasure::total_weight() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

Vec2 EmpiricalMeasure::point(std::size_t i) const {
  if (dim == 1) return {coords[i], 0.0};
  return {coords[2 * i], coords[2 * i + 1]};
}

void EmpiricalMeasure::add(const Vec2& p, double weight) {
  for (int c = 0; c < dim; ++c) coords.push_back(p[c]);
  weights.push_back(weight);
}

int measure_dim(const Measure& m) {
  return std::visit([](const auto& v) { return v.dim; }, m);
}

double total_mass(const Measure& m) {
  if (const auto* g = std::get_if<DensityOnGrid>(&m)) return g->total_mass();
  return std::get<EmpiricalMeasure>(m).total_weight();
}

DensityOnGrid rescaled_density(const DensityOnGrid& density, std::int64_t n) {
  if (n <= 0) {
    throw std::invalid_argument("rescaled_density: n must be positive, got " + std::to_string(n));
  }
  const double scale = static_cast<double>(n);
  DensityOnGrid out = density;
  out.axis.origin = density.axis.origin / scale;
  out.axis.spacing = density.axis.spacing / scale;
  const double factor = std::pow(scale, density.dim);
  for (double& v : out.values) v *= factor;
  return out;
}

Marginal marginal(const Measure& m, int coordinate) {
  const int dim = measure_dim(m);
  if (coordinate < 0 || coordinate >= dim) {
    throw std::invalid_argument("marginal: coordinate out of range");
  }
  std::vector<std::pair<double, double>> atoms;
  if (const auto* g = std::get_if<DensityOnGrid>(&m)) {
    const double cell = g->cell_volume();
    if (g->dim == 1) {
      atoms.reserve(g->axis.points);
      for (std::size_t i = 0; i < g->axis.points; ++i) {
        atoms.emplace_back(g->axis.coordinate(i), g->values[i] * cell);
      }
    } else {
      const std::size_t n = g->axis.points;
      for (std::size_t i = 0; i < n; ++i) {
        double w = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          w += coordinate == 0 ? g->values[i * n + j] : g->values[j * n + i];
        }
        atoms.emplace_back(g->axis.coordinate(i), w * cell);
      }
    }
  } else {
    const auto& e = std::get<EmpiricalMeasure>(m);
    atoms.reserve(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      atoms.emplace_back(e.coords[i * static_cast<std::size_t>(e.dim) + static_cast<std::size_t>(coordinate)],
                         e.weights[i]);
    }
  }
  std::stable_sort(atoms.begin(), atoms.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  Marginal out;
  out.points.reserve(atoms.size());
  out.weights.reserve(atoms.size());
  for (const auto& [p, w] : atoms) {
    if (!out.points.empty() && out.points.back() == p) {
      out.weights.back() += w;
    } else {
      out.points.push_back(p);
      out.weights.push_back(w);
    }
  }
  return out;
}

}  // namespace qwalk
