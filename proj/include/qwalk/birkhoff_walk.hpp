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
#include <functional>
#include <vector>

#include "qwalk/dynamical_system.hpp"
#include "qwalk/measure.hpp"
#include "qwalk/profiles.hpp"
#include "qwalk/rng.hpp"

/// The walk whose coin flip is composition with a measure-preserving map,
/// (U psi)(x, w) = psi(x - h(w), T(w)). Evolution uses the closed form
/// (U^n psi0)(x, w) = psi0(x - sum_{j<n} h(T^j w), T^n w).
namespace qwalk::birkhoff {

/// Probability density of the coin relative to Lebesgue measure on Omega.
class CoinDensity {
 public:
  static CoinDensity uniform(Space space);
  /// |chi(w)|^2 / integral |chi|^2 for a real trigonometric amplitude chi.
  static CoinDensity from_amplitude(Space space, TrigPolynomial amplitude);
  /// Piecewise constant on `cells` equal cells per coordinate (cells or
  /// cells^2 row-major values); rescaled to integrate to one.
  static CoinDensity from_grid(Space space, std::size_t cells, std::vector<double> values);

  Space space() const { return space_; }
  bool is_uniform() const { return kind_ == Kind::uniform; }
  double operator()(const OmegaPoint& w) const;
  /// Upper bound on the density, used for rejection sampling.
  double sup() const { return sup_; }
  OmegaPoint sample(Rng& rng) const;

 private:
  enum class Kind { uniform, amplitude, grid };

  Space space_ = Space::circle;
  Kind kind_ = Kind::uniform;
  TrigPolynomial amplitude_;
  double amplitude_norm_sq_ = 1.0;
  std::size_t cells_ = 0;
  std::vector<double> grid_;
  double sup_ = 1.0;
};

/// psi0(x, w) = phi0(x_1) ... phi0(x_d) chi0(w).
struct ProductState {
  Profile walker;
  CoinDensity coin;
};

/// One draw (y, w') from |psi0|^2, together with the tail of w'.
struct Psi0Draw {
  Vec2 y{0.0, 0.0};
  OmegaPoint omega{0.0, 0.0};
  TailKey tail;
};

using Psi0Sampler = std::function<Psi0Draw(Rng&)>;

/// Sampler for a product state; `dim` is the walker dimension.
Psi0Sampler product_sampler(const ProductState& state, int dim);

enum class OrbitDirection { forward, backward };

/// Forward: sum_{j=0}^{n-1} h(T^j w). Backward: sum_{j=1}^{n} h(T^{-j} w).
Vec2 trajectory_sum(const DynamicalSystem& sys, const OmegaPoint& w, std::int64_t n,
                    OrbitDirection direction, TailKey tail = std::nullopt);

/// (1/n) sum_{j=0}^{n-1} h(T^{-j} w). Exactly v for constant h = v.
Vec2 birkhoff_average(const DynamicalSystem& sys, const OmegaPoint& w, std::int64_t n,
                      TailKey tail = std::nullopt);

/// Monte Carlo estimate of Q_n: x = (y + sum_{j=1}^{n} h(T^{-j} w')) / n with
/// (y, w') ~ |psi0|^2. Sample i uses the stream (seed, i).
EmpiricalMeasure sample_rescaled_position(const DynamicalSystem& sys, const Psi0Sampler& sampler,
                                          std::int64_t n, std::size_t samples,
                                          std::uint64_t seed);

/// P_n(x) = sum_w weight(w) |phi0(x - S_n(w))|^2 chi-density(T^n w) on the
/// given walker grid, S_n(w) = sum_{j<n} h(T^j w).
///
/// Omega is split into `omega_cells` equal cells per coordinate with one
/// point w' per cell, and the closed form is evaluated at the nodes
/// w = T^{-n} w', which carry the same weights because T preserves P. Then
/// chi-density(T^n w) is sampled on the cell grid itself for any n. The w' sit at cell midpoints for isometries; for
/// expanding maps each w' is placed uniformly inside its cell with a random
/// tail from the stream (seed, cell), making the rule stratified sampling.
/// Node weights are normalised to sum to one; for midpoint nodes and
/// trigonometric coin densities they already do.
DensityOnGrid pn_quadrature(const DynamicalSystem& sys, const ProductState& state, std::int64_t n,
                            const DensityAxis& x_axis, std::size_t omega_cells,
                            std::uint64_t seed = 0);

/// Share of samples whose average at n_avg and n_avg / 2 agree to 1e-2 in
/// every coordinate; stabilized when at least 99%.
struct StabilizationCheck {
  double stable_fraction = 0.0;
  bool stabilized = false;
};

/// Pushforward of coin * P under the Birkhoff average at horizon n_avg.
EmpiricalMeasure limit_pushforward(const DynamicalSystem& sys, const CoinDensity& coin,
                                   std::int64_t n_avg, std::size_t samples, std::uint64_t seed,
                                   StabilizationCheck* check = nullptr);

}  // namespace qwalk::birkhoff
