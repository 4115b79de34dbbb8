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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qwalk/measure.hpp"
#include "qwalk/rng.hpp"

namespace qwalk::birkhoff {

/// A point of the circle [0,1) (second coordinate unused) or the unit square.
using OmegaPoint = std::array<double, 2>;

enum class Space { circle, square };

int space_dim(Space space);

/// cos_coeff cos(2 pi f w_c) + sin_coeff sin(2 pi f w_c) for coordinate c.
struct TrigTerm {
  int coordinate = 0;
  int frequency = 1;
  double cos_coeff = 0.0;
  double sin_coeff = 0.0;
  bool operator==(const TrigTerm&) const = default;
};

/// Real trigonometric polynomial on the circle or the square.
struct TrigPolynomial {
  double constant = 0.0;
  std::vector<TrigTerm> terms;

  double operator()(const OmegaPoint& w) const;
  /// |constant| + sum |cos_coeff| + |sin_coeff|, an upper bound on |p|.
  double sup_bound() const;
  bool operator==(const TrigPolynomial&) const = default;
};

/// The step vector h : Omega -> R^d, one trigonometric polynomial per
/// component (d = 1 or 2).
class StepFunction {
 public:
  StepFunction() = default;
  explicit StepFunction(std::vector<TrigPolynomial> components);
  static StepFunction constant(const Vec2& v, int dim);

  int dim() const { return static_cast<int>(components_.size()); }
  Vec2 operator()(const OmegaPoint& w) const;
  bool is_constant() const;
  const std::vector<TrigPolynomial>& components() const { return components_; }
  bool operator==(const StepFunction&) const = default;

 private:
  std::vector<TrigPolynomial> components_;
};

/// Key of the binary digits of a generic point below double precision.
///
/// A double is a dyadic rational, which is a null set for expanding maps:
/// its baker's-map orbit collapses to a fixed point after ~53 steps. Points
/// drawn for Monte Carlo carry a tail key whose hashed bits continue the
/// expansion, so orbits of any length follow a Lebesgue-typical point with
/// the given leading digits. An empty key means all further digits are zero.
using TailKey = std::optional<std::uint64_t>;

/// Invertible measure-preserving system (Omega, Lebesgue, T) with a step
/// function h. Both shipped systems preserve Lebesgue measure.
class DynamicalSystem {
 public:
  virtual ~DynamicalSystem() = default;

  virtual Space space() const = 0;
  virtual std::string name() const = 0;
  virtual OmegaPoint forward(const OmegaPoint& w) const = 0;
  virtual OmegaPoint inverse(const OmegaPoint& w) const = 0;
  /// True when T stretches some direction, so long orbits depend on digits
  /// beyond double precision.
  virtual bool expanding() const = 0;

  /// sum_{j = first}^{last - 1} h(T^j w); negative j are powers of T^{-1}.
  virtual Vec2 orbit_sum(const OmegaPoint& w, std::int64_t first, std::int64_t last,
                         TailKey tail = std::nullopt) const = 0;

  /// T^j w for any integer j.
  virtual OmegaPoint iterate(const OmegaPoint& w, std::int64_t j,
                             TailKey tail = std::nullopt) const = 0;

  /// Draws w uniformly from Omega.
  OmegaPoint sample(Rng& rng) const;

  const StepFunction& step() const { return h_; }
  Vec2 h(const OmegaPoint& w) const { return h_(w); }
  int step_dim() const { return h_.dim(); }

 protected:
  explicit DynamicalSystem(StepFunction h);

 private:
  StepFunction h_;
};

/// T(w) = w + alpha mod 1 on the circle.
class CircleRotation final : public DynamicalSystem {
 public:
  CircleRotation(double alpha, StepFunction h);

  /// (sqrt(5) - 1) / 2.
  static double golden_alpha();

  double alpha() const { return alpha_; }
  Space space() const override { return Space::circle; }
  std::string name() const override { return "rotation"; }
  OmegaPoint forward(const OmegaPoint& w) const override;
  OmegaPoint inverse(const OmegaPoint& w) const override;
  bool expanding() const override { return false; }
  Vec2 orbit_sum(const OmegaPoint& w, std::int64_t first, std::int64_t last,
                 TailKey tail = std::nullopt) const override;
  OmegaPoint iterate(const OmegaPoint& w, std::int64_t j,
                     TailKey tail = std::nullopt) const override;

 private:
  double alpha_;
};

/// Baker's map T(x, y) = (2x mod 1, (y + floor(2x)) / 2) on the unit square.
///
/// Orbit sums run on the binary expansion: with x = 0.s1 s2 ... and
/// y = 0.s0 s-1 ..., T^j w has x = 0.s(j+1) s(j+2) ... and
/// y = 0.s(j) s(j-1) ..., exactly, for every integer j.
class BakerMap final : public DynamicalSystem {
 public:
  explicit BakerMap(StepFunction h);

  Space space() const override { return Space::square; }
  std::string name() const override { return "baker"; }
  OmegaPoint forward(const OmegaPoint& w) const override;
  OmegaPoint inverse(const OmegaPoint& w) const override;
  bool expanding() const override { return true; }
  Vec2 orbit_sum(const OmegaPoint& w, std::int64_t first, std::int64_t last,
                 TailKey tail = std::nullopt) const override;
  OmegaPoint iterate(const OmegaPoint& w, std::int64_t j,
                     TailKey tail = std::nullopt) const override;
};

}  // namespace qwalk::birkhoff
