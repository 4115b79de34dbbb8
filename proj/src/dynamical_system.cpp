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

#include "qwalk/dynamical_system.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qwalk::birkhoff {
namespace {

double frac(double v) { return v - std::floor(v); }

// Binary digits s_k, k in Z, of a baker's-map point (see BakerMap).
class DigitSequence {
 public:
  DigitSequence(const OmegaPoint& w, TailKey tail)
      : x_(to_fixed(w[0])), y_(to_fixed(w[1])), tail_(tail) {}

  unsigned digit(std::int64_t k) {
    if (k >= 1 && k <= 64) return static_cast<unsigned>((x_ >> (64 - k)) & 1U);
    if (k <= 0 && k >= -63) return static_cast<unsigned>((y_ >> (63 + k)) & 1U);
    if (!tail_) return 0;
    const std::int64_t block = k >= 0 ? k / 64 : -((-k + 63) / 64);
    const int bit = static_cast<int>(k - block * 64);
    if (!cached_ || block != cached_block_) {
      cached_word_ = hash_pair(*tail_, static_cast<std::uint64_t>(block));
      cached_block_ = block;
      cached_ = true;
    }
    return static_cast<unsigned>((cached_word_ >> bit) & 1U);
  }

 private:
  static std::uint64_t to_fixed(double v) {
    if (!(v >= 0.0 && v < 1.0)) throw std::invalid_argument("baker: point outside [0,1)^2");
    return static_cast<std::uint64_t>(std::ldexp(v, 64));
  }

  std::uint64_t x_;
  std::uint64_t y_;
  TailKey tail_;
  bool cached_ = false;
  std::int64_t cached_block_ = 0;
  std::uint64_t cached_word_ = 0;
};

Vec2 constant_sum(const StepFunction& h, std::int64_t count) {
  const Vec2 v = h(OmegaPoint{0.0, 0.0});
  const double c = static_cast<double>(count);
  return {c * v[0], c * v[1]};
}

double from_window(std::uint64_t window) {
  return static_cast<double>(window >> 11) * 0x1.0p-53;
}

}  // namespace

int space_dim(Space space) { return space == Space::circle ? 1 : 2; }

double TrigPolynomial::operator()(const OmegaPoint& w) const {
  double v = constant;
  for (const auto& t : terms) {
    const double angle = 2.0 * std::numbers::pi * t.frequency * w[static_cast<std::size_t>(t.coordinate)];
    if (t.cos_coeff != 0.0) v += t.cos_coeff * std::cos(angle);
    if (t.sin_coeff != 0.0) v += t.sin_coeff * std::sin(angle);
  }
  return v;
}

double TrigPolynomial::sup_bound() const {
  double b = std::abs(constant);
  for (const auto& t : terms) b += std::abs(t.cos_coeff) + std::abs(t.sin_coeff);
  return b;
}

StepFunction::StepFunction(std::vector<TrigPolynomial> components)
    : components_(std::move(components)) {
  if (components_.empty() || components_.size() > 2) {
    throw std::invalid_argument("StepFunction: dimension must be 1 or 2");
  }
  for (const auto& c : components_) {
    for (const auto& t : c.terms) {
      if (t.coordinate < 0 || t.coordinate > 1) {
        throw std::invalid_argument("StepFunction: term coordinate must be 0 or 1");
      }
    }
  }
}

StepFunction StepFunction::constant(const Vec2& v, int dim) {
  std::vector<TrigPolynomial> comps;
  for (int c = 0; c < dim; ++c) comps.push_back(TrigPolynomial{v[static_cast<std::size_t>(c)], {}});
  return StepFunction(std::move(comps));
}

Vec2 StepFunction::operator()(const OmegaPoint& w) const {
  Vec2 out{0.0, 0.0};
  for (std::size_t c = 0; c < components_.size(); ++c) out[c] = components_[c](w);
  return out;
}

bool StepFunction::is_constant() const {
  for (const auto& c : components_) {
    for (const auto& t : c.terms) {
      if (t.cos_coeff != 0.0 || t.sin_coeff != 0.0) return false;
    }
  }
  return true;
}

DynamicalSystem::DynamicalSystem(StepFunction h) : h_(std::move(h)) {
  if (h_.dim() < 1) throw std::invalid_argument("DynamicalSystem: missing step function");
}

OmegaPoint DynamicalSystem::sample(Rng& rng) const {
  OmegaPoint w{rng.uniform(), 0.0};
  if (space() == Space::square) w[1] = rng.uniform();
  return w;
}

CircleRotation::CircleRotation(double alpha, StepFunction h)
    : DynamicalSystem(std::move(h)), alpha_(frac(alpha)) {
  if (!std::isfinite(alpha)) throw std::invalid_argument("CircleRotation: alpha must be finite");
  for (const auto& c : step().components()) {
    for (const auto& t : c.terms) {
      if (t.coordinate != 0) {
        throw std::invalid_argument("CircleRotation: step terms must use coordinate 0");
      }
    }
  }
}

double CircleRotation::golden_alpha() { return (std::sqrt(5.0) - 1.0) / 2.0; }

OmegaPoint CircleRotation::forward(const OmegaPoint& w) const {
  return {frac(w[0] + alpha_), 0.0};
}

OmegaPoint CircleRotation::inverse(const OmegaPoint& w) const {
  return {frac(w[0] - alpha_), 0.0};
}

OmegaPoint CircleRotation::iterate(const OmegaPoint& w, std::int64_t j, TailKey) const {
  return {frac(std::fma(static_cast<double>(j), alpha_, w[0])), 0.0};
}

Vec2 CircleRotation::orbit_sum(const OmegaPoint& w, std::int64_t first, std::int64_t last,
                               TailKey) const {
  Vec2 sum{0.0, 0.0};
  const auto& h = step();
  if (last <= first) return sum;
  if (h.is_constant()) return constant_sum(h, last - first);
  for (std::int64_t j = first; j < last; ++j) {
    const OmegaPoint p{frac(std::fma(static_cast<double>(j), alpha_, w[0])), 0.0};
    const Vec2 v = h(p);
    sum[0] += v[0];
    sum[1] += v[1];
  }
  return sum;
}

BakerMap::BakerMap(StepFunction h) : DynamicalSystem(std::move(h)) {}

OmegaPoint BakerMap::forward(const OmegaPoint& w) const {
  const double b = w[0] >= 0.5 ? 1.0 : 0.0;
  return {2.0 * w[0] - b, 0.5 * (w[1] + b)};
}

OmegaPoint BakerMap::inverse(const OmegaPoint& w) const {
  const double b = w[1] >= 0.5 ? 1.0 : 0.0;
  return {0.5 * (w[0] + b), 2.0 * w[1] - b};
}

OmegaPoint BakerMap::iterate(const OmegaPoint& w, std::int64_t j, TailKey tail) const {
  DigitSequence digits(w, tail);
  std::uint64_t xw = 0;
  std::uint64_t yw = 0;
  for (int m = 1; m <= 64; ++m) {
    xw = (xw << 1) | digits.digit(j + m);
  }
  for (int m = 1; m <= 64; ++m) {
    yw |= static_cast<std::uint64_t>(digits.digit(j + 1 - m)) << (64 - m);
  }
  return {from_window(xw), from_window(yw)};
}

Vec2 BakerMap::orbit_sum(const OmegaPoint& w, std::int64_t first, std::int64_t last,
                         TailKey tail) const {
  Vec2 sum{0.0, 0.0};
  if (last <= first) return sum;
  if (step().is_constant()) return constant_sum(step(), last - first);
  // Separate readers for the two windows keep each cache sequential.
  DigitSequence ahead(w, tail);
  DigitSequence behind(w, tail);
  std::uint64_t xw = 0;  // digits s(j+1) .. s(j+64), most significant first
  std::uint64_t yw = 0;  // digits s(j) .. s(j-63)
  for (int m = 1; m <= 64; ++m) {
    xw = (xw << 1) | ahead.digit(first + m);
  }
  for (int m = 1; m <= 64; ++m) {
    yw |= static_cast<std::uint64_t>(behind.digit(first + 1 - m)) << (64 - m);
  }
  const auto& h = step();
  for (std::int64_t j = first; j < last; ++j) {
    const Vec2 v = h(OmegaPoint{from_window(xw), from_window(yw)});
    sum[0] += v[0];
    sum[1] += v[1];
    const unsigned entering = static_cast<unsigned>(xw >> 63);  // s(j+1)
    xw = (xw << 1) | ahead.digit(j + 65);
    yw = (yw >> 1) | (static_cast<std::uint64_t>(entering) << 63);
  }
  return sum;
}

}  // namespace qwalk::birkhoff
