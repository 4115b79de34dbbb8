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
#include <vector>

#include "qwalk/measure.hpp"

/// Hadamard walk on Z with a two-state coin.
namespace qwalk::lattice {

using Complex = std::complex<double>;

enum class Coin { heads, tails };

/// Walker-and-coin amplitudes on the window [offset, offset + width).
///
/// amps_h[k] and amps_t[k] are the amplitudes of |offset + k> (x) |H> and
/// |offset + k> (x) |T>. The window always contains every nonzero amplitude.
struct LatticeState {
  std::int64_t offset = 0;
  std::vector<Complex> amps_h;
  std::vector<Complex> amps_t;

  static LatticeState basis(std::int64_t site, Coin coin);
  /// Arbitrary coin state a|H> + b|T> at `site`, normalised.
  static LatticeState localized(std::int64_t site, Complex heads, Complex tails);

  std::size_t width() const { return amps_h.size(); }
  double norm_squared() const;
  Complex heads(std::int64_t site) const;
  Complex tails(std::int64_t site) const;
};

/// P(j) for j in [offset, offset + probs.size()).
struct LatticeDistribution {
  std::int64_t offset = 0;
  std::vector<double> probs;

  double at(std::int64_t site) const;
  double total() const;
};

/// One step S (I (x) F): Hadamard coin flip, then heads move right and tails
/// move left. The window grows by one site on each side.
LatticeState hadamard_step(const LatticeState& state);

LatticeState evolve(LatticeState state, std::int64_t steps);

LatticeDistribution lattice_distribution(const LatticeState& state);

/// sum_j P(j) delta(j / n). Throws for n <= 0.
EmpiricalMeasure rescaled_lattice_measure(const LatticeDistribution& dist, std::int64_t n);

}  // namespace qwalk::lattice
