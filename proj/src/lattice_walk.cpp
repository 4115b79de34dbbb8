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

#include "qwalk/lattice_walk.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qwalk::lattice {

LatticeState LatticeState::basis(std::int64_t site, Coin coin) {
  LatticeState s;
  s.offset = site;
  s.amps_h = {coin == Coin::heads ? Complex{1.0} : Complex{0.0}};
  s.amps_t = {coin == Coin::tails ? Complex{1.0} : Complex{0.0}};
  return s;
}

LatticeState LatticeState::localized(std::int64_t site, Complex heads, Complex tails) {
  const double norm = std::sqrt(std::norm(heads) + std::norm(tails));
  if (norm == 0.0) throw std::invalid_argument("LatticeState: zero coin state");
  LatticeState s;
  s.offset = site;
  s.amps_h = {heads / norm};
  s.amps_t = {tails / norm};
  return s;
}

double LatticeState::norm_squared() const {
  double total = 0.0;
  for (std::size_t k = 0; k < width(); ++k) total += std::norm(amps_h[k]) + std::norm(amps_t[k]);
  return total;
}

Complex LatticeState::heads(std::int64_t site) const {
  const std::int64_t k = site - offset;
  if (k < 0 || k >= static_cast<std::int64_t>(width())) return 0.0;
  return amps_h[static_cast<std::size_t>(k)];
}

Complex LatticeState::tails(std::int64_t site) const {
  const std::int64_t k = site - offset;
  if (k < 0 || k >= static_cast<std::int64_t>(width())) return 0.0;
  return amps_t[static_cast<std::size_t>(k)];
}

double LatticeDistribution::at(std::int64_t site) const {
  const std::int64_t k = site - offset;
  if (k < 0 || k >= static_cast<std::int64_t>(probs.size())) return 0.0;
  return probs[static_cast<std::size_t>(k)];
}

double LatticeDistribution::total() const {
  return std::accumulate(probs.begin(), probs.end(), 0.0);
}

LatticeState hadamard_step(const LatticeState& state) {
  if (state.amps_h.size() != state.amps_t.size()) {
    throw std::invalid_argument("hadamard_step: heads and tails windows differ in width");
  }
  const std::size_t w = state.width();
  const double s = 1.0 / std::numbers::sqrt2;
  LatticeState next;
  next.offset = state.offset - 1;
  next.amps_h.assign(w + 2, Complex{0.0});
  next.amps_t.assign(w + 2, Complex{0.0});
  // Old window index k is site offset + k, which is new index k + 1.
  for (std::size_t k = 0; k < w; ++k) {
    const Complex h = state.amps_h[k];
    const Complex t = state.amps_t[k];
    next.amps_h[k + 2] = s * (h + t);
    next.amps_t[k] = s * (h - t);
  }
  return next;
}

LatticeState evolve(LatticeState state, std::int64_t steps) {
  if (steps < 0) throw std::invalid_argument("evolve: negative step count");
  for (std::int64_t i = 0; i < steps; ++i) state = hadamard_step(state);
  return state;
}

LatticeDistribution lattice_distribution(const LatticeState& state) {
  LatticeDistribution d;
  d.offset = state.offset;
  d.probs.resize(state.width());
  for (std::size_t k = 0; k < state.width(); ++k) {
    d.probs[k] = std::norm(state.amps_h[k]) + std::norm(state.amps_t[k]);
  }
  return d;
}

EmpiricalMeasure rescaled_lattice_measure(const LatticeDistribution& dist, std::int64_t n) {
  if (n <= 0) {
    throw std::invalid_argument("rescaled_lattice_measure: n must be positive, got " +
                                std::to_string(n));
  }
  EmpiricalMeasure m;
  m.dim = 1;
  const double scale = static_cast<double>(n);
  for (std::size_t k = 0; k < dist.probs.size(); ++k) {
    if (dist.probs[k] == 0.0) continue;
    m.add({static_cast<double>(dist.offset + static_cast<std::int64_t>(k)) / scale, 0.0},
          dist.probs[k]);
  }
  return m;
}

}  // namespace qwalk::lattice
