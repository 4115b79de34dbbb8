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

#include "qwalk/measure.hpp"
#include "qwalk/torus_grid.hpp"

/// The walk whose coin flip is the Fourier transform on L^2(R^d).
namespace qwalk::plancherel {

using grid::GridSpec;
using grid::GridWavefunction;

/// Boundary mass above which the torus no longer stands in for R^d.
inline constexpr double kBoundaryMassLimit = 1e-6;

struct WalkDiagnostics {
  double max_boundary_mass = 0.0;
  bool boundary_warning = false;

  void record(double boundary_mass);
};

/// U = S (I (x) F): Fourier transform over the coin, then shear.
///
/// Requires a self-dual coin axis (so the transform maps the coin grid onto
/// itself) and a coin spacing that is an integer multiple of the walker
/// spacing; GridSpec::walk builds such grids.
GridWavefunction plancherel_step(const GridWavefunction& psi);
GridWavefunction plancherel_step(const GridWavefunction& psi, WalkDiagnostics& diagnostics);

/// U^n psi0.
GridWavefunction evolve(const GridWavefunction& psi0, std::int64_t steps);
GridWavefunction evolve(const GridWavefunction& psi0, std::int64_t steps,
                        WalkDiagnostics& diagnostics);

/// Throws unless the grid supports the exact step.
void require_walk_grid(const GridSpec& spec);

/// P(x) = integral |psi(x, y)|^2 dy on the walker grid.
DensityOnGrid position_density(const GridWavefunction& psi);

/// Q(x) = 2^d integral |(F_1 psi0)(-2x, y)|^2 dy.
///
/// Evaluated at x = -zeta / 2 for zeta on the dual walker grid and reported
/// in increasing x: spacing half the dual spacing, no interpolation. For
/// d = 1 the prefactor is the familiar 2.
DensityOnGrid limit_density(const GridWavefunction& psi0);

/// ||F_1 U^4 psi - exp(i |zeta|^2) F_1 psi|| / ||psi||.
double check_u4_identity(const GridWavefunction& psi);

}  // namespace qwalk::plancherel
