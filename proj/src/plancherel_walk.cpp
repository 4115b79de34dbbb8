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

#include "qwalk/plancherel_walk.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "qwalk/parallel.hpp"

namespace qwalk::plancherel {

using grid::Axes;
using grid::Complex;
using grid::Direction;

void WalkDiagnostics::record(double boundary_mass) {
  if (boundary_mass > max_boundary_mass) max_boundary_mass = boundary_mass;
  if (boundary_mass > kBoundaryMassLimit) boundary_warning = true;
}

void require_walk_grid(const GridSpec& spec) {
  spec.validate();
  if (!spec.y.self_dual(1e-9)) {
    throw std::invalid_argument(
        "plancherel: coin axis must be self-dual (spacing^2 = 2 pi / N); use GridSpec::walk");
  }
  const double ratio = spec.y.spacing() / spec.x.spacing();
  if (std::round(ratio) < 1.0 || std::abs(ratio - std::round(ratio)) > 1e-9 * ratio) {
    throw std::invalid_argument(
        "plancherel: coin spacing must be an integer multiple of the walker spacing");
  }
}

GridWavefunction plancherel_step(const GridWavefunction& psi, WalkDiagnostics& diagnostics) {
  require_walk_grid(psi.spec);
  GridWavefunction flipped = grid::dft(psi, Axes::y_only, Direction::forward);
  // The coin axis is self-dual, so keep the bit-identical original axis.
  flipped.spec = psi.spec;
  GridWavefunction out = grid::shear(flipped);
  diagnostics.record(grid::boundary_mass(out));
  return out;
}

GridWavefunction plancherel_step(const GridWavefunction& psi) {
  WalkDiagnostics ignored;
  return plancherel_step(psi, ignored);
}

GridWavefunction evolve(const GridWavefunction& psi0, std::int64_t steps,
                        WalkDiagnostics& diagnostics) {
  if (steps < 0) throw std::invalid_argument("evolve: negative step count");
  require_walk_grid(psi0.spec);
  diagnostics.record(grid::boundary_mass(psi0));
  GridWavefunction psi = psi0;
  for (std::int64_t i = 0; i < steps; ++i) psi = plancherel_step(psi, diagnostics);
  return psi;
}

GridWavefunction evolve(const GridWavefunction& psi0, std::int64_t steps) {
  WalkDiagnostics ignored;
  return evolve(psi0, steps, ignored);
}

DensityOnGrid position_density(const GridWavefunction& psi) {
  const GridSpec& spec = psi.spec;
  spec.validate();
  const std::size_t ys = spec.y_size();
  DensityOnGrid p;
  p.dim = spec.dim;
  p.axis = {spec.x.points, -spec.x.half_length, spec.x.spacing()};
  p.values.assign(spec.x_size(), 0.0);
  const double cell = spec.y_cell();
  parallel_for(
      0, spec.x_size(),
      [&](std::size_t ix) {
        double s = 0.0;
        for (std::size_t iy = 0; iy < ys; ++iy) s += std::norm(psi.values[ix * ys + iy]);
        p.values[ix] = s * cell;
      },
      64);
  return p;
}

DensityOnGrid limit_density(const GridWavefunction& psi0) {
  const GridWavefunction f1 = grid::dft(psi0, Axes::x_only, Direction::forward);
  const GridSpec& spec = f1.spec;
  const std::size_t n = spec.x.points;
  const std::size_t ys = spec.y_size();
  const double dzeta = spec.x.spacing();

  // zeta_k = -L* + k dzeta, so x = -zeta_k / 2 increases as k decreases.
  // Output index m holds k = n - 1 - m along every walker coordinate.
  DensityOnGrid q;
  q.dim = spec.dim;
  q.axis = {n, -0.5 * spec.x.coordinate(n - 1), 0.5 * dzeta};
  q.values.assign(spec.x_size(), 0.0);
  const double prefactor = std::pow(2.0, spec.dim) * spec.y_cell();
  parallel_for(
      0, spec.x_size(),
      [&](std::size_t m) {
        std::size_t k;
        if (spec.dim == 1) {
          k = n - 1 - m;
        } else {
          k = (n - 1 - m / n) * n + (n - 1 - m % n);
        }
        double s = 0.0;
        for (std::size_t iy = 0; iy < ys; ++iy) s += std::norm(f1.values[k * ys + iy]);
        q.values[m] = prefactor * s;
      },
      64);
  return q;
}

double check_u4_identity(const GridWavefunction& psi) {
  const GridWavefunction evolved = evolve(psi, 4);
  const GridWavefunction lhs = grid::dft(evolved, Axes::x_only, Direction::forward);
  const GridWavefunction rhs = grid::dft(psi, Axes::x_only, Direction::forward);
  const GridSpec& spec = rhs.spec;
  const std::size_t ys = spec.y_size();
  std::vector<double> rows(spec.x_size(), 0.0);
  parallel_for(
      0, spec.x_size(),
      [&](std::size_t k) {
        const auto zeta = grid::x_point(spec, k);
        const double phase = zeta[0] * zeta[0] + zeta[1] * zeta[1];
        const Complex rotation = std::polar(1.0, phase);
        double s = 0.0;
        for (std::size_t iy = 0; iy < ys; ++iy) {
          s += std::norm(lhs.values[k * ys + iy] - rotation * rhs.values[k * ys + iy]);
        }
        rows[k] = s;
      },
      64);
  double total = 0.0;
  for (double r : rows) total += r;
  const double err = std::sqrt(total * spec.x_cell() * spec.y_cell());
  return err / psi.norm();
}

}  // namespace qwalk::plancherel
