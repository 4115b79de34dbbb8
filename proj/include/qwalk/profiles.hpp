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
#include <variant>

#include "qwalk/rng.hpp"

namespace qwalk {

/// exp(-(x - center)^2 / (2 width^2) + i momentum x), normalised in L^2(R).
struct GaussianProfile {
  double center = 0.0;
  double width = 1.0;
  double momentum = 0.0;
  bool operator==(const GaussianProfile&) const = default;
};

/// Indicator of [a, b), normalised in L^2(R).
struct BoxProfile {
  double a = -1.0;
  double b = 1.0;
  bool operator==(const BoxProfile&) const = default;
};

using Profile = std::variant<GaussianProfile, BoxProfile>;

/// Throws std::invalid_argument for a non-normalisable profile.
void validate_profile(const Profile& p);

std::complex<double> profile_amplitude(const Profile& p, double x);
/// |amplitude|^2, a probability density on R.
double profile_density(const Profile& p, double x);
/// Draws from profile_density.
double sample_profile(const Profile& p, Rng& rng);

}  // namespace qwalk
