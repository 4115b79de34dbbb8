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

#include "qwalk/birkhoff_walk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qwalk/parallel.hpp"

namespace qwalk::birkhoff {
namespace {

void require_positive(std::int64_t n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
}

int max_frequency(const TrigPolynomial& p) {
  int f = 0;
  for (const auto& t : p.terms) f = std::max(f, std::abs(t.frequency));
  return f;
}

}  // namespace

CoinDensity CoinDensity::uniform(Space space) {
  CoinDensity c;
  c.space_ = space;
  return c;
}

CoinDensity CoinDensity::from_amplitude(Space space, TrigPolynomial amplitude) {
  for (const auto& t : amplitude.terms) {
    if (t.coordinate < 0 || t.coordinate >= space_dim(space)) {
      throw std::invalid_argument("CoinDensity: term coordinate outside Omega");
    }
  }
  CoinDensity c;
  c.space_ = space;
  c.kind_ = Kind::amplitude;
  c.amplitude_ = std::move(amplitude);
  // |chi|^2 has degree <= 2 f per coordinate, which the periodic trapezoid
  // rule with more than 2 f + 1 nodes integrates exactly.
  const std::size_t m = static_cast<std::size_t>(4 * max_frequency(c.amplitude_) + 8);
  double total = 0.0;
  if (space == Space::circle) {
    for (std::size_t i = 0; i < m; ++i) {
      const double v = c.amplitude_({static_cast<double>(i) / static_cast<double>(m), 0.0});
      total += v * v;
    }
    total /= static_cast<double>(m);
  } else {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const double v = c.amplitude_({static_cast<double>(i) / static_cast<double>(m),
                                       static_cast<double>(j) / static_cast<double>(m)});
        total += v * v;
      }
    }
    total /= static_cast<double>(m * m);
  }
  if (!(total > 0.0)) throw std::invalid_argument("CoinDensity: amplitude has zero norm");
  c.amplitude_norm_sq_ = total;
  const double bound = c.amplitude_.sup_bound();
  c.sup_ = bound * bound / total;
  return c;
}

CoinDensity CoinDensity::from_grid(Space space, std::size_t cells, std::vector<double> values) {
  const std::size_t expected = space == Space::circle ? cells : cells * cells;
  if (cells == 0 || values.size() != expected) {
    throw std::invalid_argument("CoinDensity: expected " + std::to_string(expected) +
                                " grid values");
  }
  double total = 0.0;
  for (double v : values) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("CoinDensity: grid values must be finite and nonnegative");
    }
    total += v;
  }
  if (!(total > 0.0)) throw std::invalid_argument("CoinDensity: grid values sum to zero");
  CoinDensity c;
  c.space_ = space;
  c.kind_ = Kind::grid;
  c.cells_ = cells;
  const double scale = static_cast<double>(expected) / total;
  for (double& v : values) v *= scale;
  c.sup_ = *std::max_element(values.begin(), values.end());
  c.grid_ = std::move(values);
  return c;
}

double CoinDensity::operator()(const OmegaPoint& w) const {
  switch (kind_) {
    case Kind::uniform:
      return 1.0;
    case Kind::amplitude: {
      const double v = amplitude_(w);
      return v * v / amplitude_norm_sq_;
    }
    case Kind::grid: {
      auto cell = [&](double u) {
        return std::min(cells_ - 1, static_cast<std::size_t>(u * static_cast<double>(cells_)));
      };
      if (space_ == Space::circle) return grid_[cell(w[0])];
      return grid_[cell(w[0]) * cells_ + cell(w[1])];
    }
  }
  return 0.0;
}

OmegaPoint CoinDensity::sample(Rng& rng) const {
  auto draw = [&] {
    OmegaPoint w{rng.uniform(), 0.0};
    if (space_ == Space::square) w[1] = rng.uniform();
    return w;
  };
  if (kind_ == Kind::uniform) return draw();
  for (int attempt = 0; attempt < 1000000; ++attempt) {
    const OmegaPoint w = draw();
    if (rng.uniform() * sup_ < (*this)(w)) return w;
  }
  throw std::runtime_error("CoinDensity: rejection sampling did not terminate");
}

Psi0Sampler product_sampler(const ProductState& state, int dim) {
  validate_profile(state.walker);
  if (dim != 1 && dim != 2) throw std::invalid_argument("product_sampler: dim must be 1 or 2");
  return [state, dim](Rng& rng) {
    Psi0Draw d;
    for (int c = 0; c < dim; ++c) d.y[static_cast<std::size_t>(c)] = sample_profile(state.walker, rng);
    d.omega = state.coin.sample(rng);
    d.tail = rng.next();
    return d;
  };
}

Vec2 trajectory_sum(const DynamicalSystem& sys, const OmegaPoint& w, std::int64_t n,
                    OrbitDirection direction, TailKey tail) {
  require_positive(n, "trajectory_sum");
  if (direction == OrbitDirection::forward) return sys.orbit_sum(w, 0, n, tail);
  return sys.orbit_sum(w, -n, 0, tail);
}

Vec2 birkhoff_average(const DynamicalSystem& sys, const OmegaPoint& w, std::int64_t n,
                      TailKey tail) {
  require_positive(n, "birkhoff_average");
  if (sys.step().is_constant()) return sys.h(w);
  const Vec2 s = sys.orbit_sum(w, -(n - 1), 1, tail);
  const double inv = 1.0 / static_cast<double>(n);
  return {s[0] * inv, s[1] * inv};
}

EmpiricalMeasure sample_rescaled_position(const DynamicalSystem& sys, const Psi0Sampler& sampler,
                                          std::int64_t n, std::size_t samples,
                                          std::uint64_t seed) {
  require_positive(n, "sample_rescaled_position");
  if (samples == 0) throw std::invalid_argument("sample_rescaled_position: samples must be >= 1");
  const int dim = sys.step_dim();
  const auto d = static_cast<std::size_t>(dim);
  EmpiricalMeasure m;
  m.dim = dim;
  m.coords.assign(samples * d, 0.0);
  m.weights.assign(samples, 1.0 / static_cast<double>(samples));
  m.seed = seed;
  m.samples = samples;
  const double inv = 1.0 / static_cast<double>(n);
  parallel_for(
      0, samples,
      [&](std::size_t i) {
        Rng rng(seed, i);
        Psi0Draw draw;
        try {
          draw = sampler(rng);
        } catch (const std::exception& e) {
          throw std::runtime_error("psi0 sampler failed at sample " + std::to_string(i) + ": " +
                                   e.what());
        }
        const Vec2 s = sys.orbit_sum(draw.omega, -n, 0, draw.tail);
        for (std::size_t c = 0; c < d; ++c) m.coords[i * d + c] = (draw.y[c] + s[c]) * inv;
      },
      256);
  return m;
}

DensityOnGrid pn_quadrature(const DynamicalSystem& sys, const ProductState& state, std::int64_t n,
                            const DensityAxis& x_axis, std::size_t omega_cells,
                            std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("pn_quadrature: n must be >= 0");
  if (omega_cells == 0) throw std::invalid_argument("pn_quadrature: omega_cells must be >= 1");
  if (x_axis.points == 0 || !(x_axis.spacing > 0.0)) {
    throw std::invalid_argument("pn_quadrature: invalid walker grid");
  }
  if (state.coin.space() != sys.space()) {
    throw std::invalid_argument("pn_quadrature: coin density lives on a different space");
  }
  validate_profile(state.walker);
  const int dim = sys.step_dim();
  const bool square = sys.space() == Space::square;
  const std::size_t nodes = square ? omega_cells * omega_cells : omega_cells;
  const double cell = 1.0 / static_cast<double>(omega_cells);
  const double weight = 1.0 / static_cast<double>(nodes);

  std::vector<Vec2> shifts(nodes);
  std::vector<double> coin_weights(nodes);
  parallel_for(
      0, nodes,
      [&](std::size_t k) {
        const std::size_t i = square ? k / omega_cells : k;
        const std::size_t j = square ? k % omega_cells : 0;
        OmegaPoint w{(static_cast<double>(i) + 0.5) * cell, square ? (static_cast<double>(j) + 0.5) * cell : 0.0};
        TailKey tail;
        if (sys.expanding()) {
          Rng rng(seed, k);
          w[0] = (static_cast<double>(i) + rng.uniform()) * cell;
          if (square) w[1] = (static_cast<double>(j) + rng.uniform()) * cell;
          tail = rng.next();
        }
        // Node T^{-n} w: its forward sum S_n is the backward sum from w and
        // T^n of it is w itself.
        shifts[k] = n == 0 ? Vec2{0.0, 0.0} : sys.orbit_sum(w, -n, 0, tail);
        coin_weights[k] = weight * state.coin(w);
      },
      64);
  double coin_total = 0.0;
  for (double w : coin_weights) coin_total += w;
  if (!(coin_total > 0.0)) throw std::runtime_error("pn_quadrature: coin density vanishes on the nodes");
  for (double& w : coin_weights) w /= coin_total;

  DensityOnGrid p;
  p.dim = dim;
  p.axis = x_axis;
  p.values.assign(dim == 1 ? x_axis.points : x_axis.points * x_axis.points, 0.0);
  parallel_for(
      0, p.values.size(),
      [&](std::size_t ix) {
        const Vec2 x = p.point(ix);
        double s = 0.0;
        for (std::size_t k = 0; k < nodes; ++k) {
          if (coin_weights[k] == 0.0) continue;
          double f = profile_density(state.walker, x[0] - shifts[k][0]);
          if (dim == 2) f *= profile_density(state.walker, x[1] - shifts[k][1]);
          s += coin_weights[k] * f;
        }
        p.values[ix] = s;
      },
      16);
  return p;
}

EmpiricalMeasure limit_pushforward(const DynamicalSystem& sys, const CoinDensity& coin,
                                   std::int64_t n_avg, std::size_t samples, std::uint64_t seed,
                                   StabilizationCheck* check) {
  require_positive(n_avg, "limit_pushforward");
  if (samples == 0) throw std::invalid_argument("limit_pushforward: samples must be >= 1");
  if (coin.space() != sys.space()) {
    throw std::invalid_argument("limit_pushforward: coin density lives on a different space");
  }
  const int dim = sys.step_dim();
  const auto d = static_cast<std::size_t>(dim);
  const std::int64_t half = std::max<std::int64_t>(1, n_avg / 2);
  const bool constant = sys.step().is_constant();
  EmpiricalMeasure m;
  m.dim = dim;
  m.coords.assign(samples * d, 0.0);
  m.weights.assign(samples, 1.0 / static_cast<double>(samples));
  m.seed = seed;
  m.samples = samples;
  std::vector<unsigned char> stable(samples, 1);
  parallel_for(
      0, samples,
      [&](std::size_t i) {
        Rng rng(seed, i);
        const OmegaPoint w = coin.sample(rng);
        const TailKey tail = rng.next();
        Vec2 full;
        Vec2 early;
        if (constant) {
          full = early = sys.h(w);
        } else {
          // j in [0, half) and j in [half, n_avg), as powers of T^{-1}.
          const Vec2 a = sys.orbit_sum(w, -(half - 1), 1, tail);
          const Vec2 b = sys.orbit_sum(w, -(n_avg - 1), -(half - 1), tail);
          for (std::size_t c = 0; c < 2; ++c) {
            early[c] = a[c] / static_cast<double>(half);
            full[c] = (a[c] + b[c]) / static_cast<double>(n_avg);
          }
        }
        for (std::size_t c = 0; c < d; ++c) {
          m.coords[i * d + c] = full[c];
          if (std::abs(full[c] - early[c]) >= 1e-2) stable[i] = 0;
        }
      },
      256);
  if (check) {
    std::size_t count = 0;
    for (auto s : stable) count += s;
    check->stable_fraction = static_cast<double>(count) / static_cast<double>(samples);
    check->stabilized = check->stable_fraction >= 0.99;
  }
  return m;
}

}  // namespace qwalk::birkhoff
