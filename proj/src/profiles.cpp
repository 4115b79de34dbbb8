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

#include "qwalk/profiles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qwalk {

void validate_profile(const Profile& p) {
  if (const auto* g = std::get_if<GaussianProfile>(&p)) {
    if (!(g->width > 0.0) || !std::isfinite(g->width) || !std::isfinite(g->center) ||
        !std::isfinite(g->momentum)) {
      throw std::invalid_argument("gaussian profile needs a finite positive width");
    }
  } else {
    const auto& b = std::get<BoxProfile>(p);
    if (!(b.b > b.a) || !std::isfinite(b.a) || !std::isfinite(b.b)) {
      throw std::invalid_argument("box profile needs a < b");
    }
  }
}

std::complex<double> profile_amplitude(const Profile& p, double x) {
  if (const auto* g = std::get_if<GaussianProfile>(&p)) {
    const double u = (x - g->center) / g->width;
    const double norm = std::pow(std::numbers::pi * g->width * g->width, -0.25);
    return std::polar(norm * std::exp(-0.5 * u * u), g->momentum * x);
  }
  const auto& b = std::get<BoxProfile>(p);
  return (x >= b.a && x < b.b) ? 1.0 / std::sqrt(b.b - b.a) : 0.0;
}

double profile_density(const Profile& p, double x) {
  if (const auto* g = std::get_if<GaussianProfile>(&p)) {
    const double u = (x - g->center) / g->width;
    return std::exp(-u * u) / (std::sqrt(std::numbers::pi) * g->width);
  }
  const auto& b = std::get<BoxProfile>(p);
  return (x >= b.a && x < b.b) ? 1.0 / (b.b - b.a) : 0.0;
}

double sample_profile(const Profile& p, Rng& rng) {
  if (const auto* g = std::get_if<GaussianProfile>(&p)) {
    return g->center + g->width / std::numbers::sqrt2 * rng.normal();
  }
  const auto& b = std::get<BoxProfile>(p);
  return b.a + (b.b - b.a) * rng.uniform();
}

}  // namespace qwalk
