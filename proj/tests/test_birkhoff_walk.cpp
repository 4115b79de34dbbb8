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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qwalk/birkhoff_walk.hpp"
#include "qwalk/limits_analysis.hpp"

using namespace qwalk;
using namespace qwalk::birkhoff;

namespace {

constexpr double kPi = std::numbers::pi;

StepFunction cos_step(int frequency = 1) {
  return StepFunction({TrigPolynomial{0.0, {TrigTerm{0, frequency, 1.0, 0.0}}}});
}

ProductState gaussian_state(Space space) { return {GaussianProfile{}, CoinDensity::uniform(space)}; }

DensityAxis wide_axis() { return {1601, -8.0, 0.01}; }

}  // namespace

TEST_CASE("coin densities") {
  Rng rng(51);
  const auto u = CoinDensity::uniform(Space::square);
  CHECK(u.is_uniform());
  CHECK(u({0.3, 0.9}) == 1.0);
  const auto a = CoinDensity::from_amplitude(Space::circle, TrigPolynomial{1.0, {TrigTerm{0, 1, 1.0, 0.0}}});
  // |1 + cos|^2 integrates to 3/2.
  CHECK(a({0.0, 0.0}) == doctest::Approx(4.0 / 1.5));
  CHECK(a({0.5, 0.0}) == doctest::Approx(0.0));
  double mean = 0.0;
  for (int i = 0; i < 20000; ++i) mean += std::cos(2.0 * kPi * a.sample(rng)[0]);
  // E cos = integral cos (1 + cos)^2 / 1.5 = 2/3.
  CHECK(mean / 20000 == doctest::Approx(2.0 / 3.0).epsilon(0.03));
  const auto g = CoinDensity::from_grid(Space::circle, 4, {0.0, 1.0, 1.0, 2.0});
  CHECK(g({0.1, 0.0}) == 0.0);
  CHECK(g({0.9, 0.0}) == doctest::Approx(2.0));
  CHECK_THROWS_AS(CoinDensity::from_grid(Space::circle, 4, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(CoinDensity::from_grid(Space::circle, 2, {-1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(CoinDensity::from_amplitude(Space::circle, TrigPolynomial{}), std::invalid_argument);
}

TEST_CASE("trajectory sums") {
  const CircleRotation half(0.5, cos_step());
  CHECK(std::abs(trajectory_sum(half, {0.0, 0.0}, 2, OrbitDirection::forward)[0]) < 1e-15);
  CHECK(std::abs(trajectory_sum(half, {0.0, 0.0}, 2, OrbitDirection::backward)[0]) < 1e-15);
  CHECK_THROWS_AS(trajectory_sum(half, {0.0, 0.0}, 0, OrbitDirection::forward), std::invalid_argument);

  const CircleRotation golden(CircleRotation::golden_alpha(), cos_step());
  const BakerMap baker(StepFunction({TrigPolynomial{0.0, {TrigTerm{0, 1, 1.0, 0.0}, TrigTerm{1, 2, 0.0, 1.0}}}}));
  Rng rng(52);
  for (int i = 0; i < 100; ++i) {
    for (const DynamicalSystem* sys : {static_cast<const DynamicalSystem*>(&golden), static_cast<const DynamicalSystem*>(&baker)}) {
      const auto w = sys->sample(rng);
      const std::int64_t n = 1 + i % 12;
      const auto f = trajectory_sum(*sys, w, n, OrbitDirection::forward);
      const auto b = trajectory_sum(*sys, sys->iterate(w, n), n, OrbitDirection::backward);
      CHECK(f[0] == doctest::Approx(b[0]).epsilon(1e-9));
    }
  }
}

TEST_CASE("birkhoff averages") {
  const CircleRotation golden(CircleRotation::golden_alpha(), cos_step());
  Rng rng(53);
  for (int i = 0; i < 20; ++i) {
    CHECK(std::abs(birkhoff_average(golden, golden.sample(rng), 10000)[0]) < 0.02);
  }
  const CircleRotation half(0.5, cos_step(2));
  for (double w : {0.0, 0.1, 0.37}) {
    CHECK(birkhoff_average(half, {w, 0.0}, 1001)[0] == doctest::Approx(std::cos(4.0 * kPi * w)).epsilon(1e-12));
  }
  const BakerMap flat(StepFunction::constant({0.25, -1.0}, 2));
  const auto v = birkhoff_average(flat, {0.3, 0.6}, 17);
  CHECK(v[0] == 0.25);
  CHECK(v[1] == -1.0);
}

TEST_CASE("monte carlo positions with constant drift") {
  const CircleRotation rot(0.3, StepFunction::constant({0.7, 0.0}, 1));
  const auto sampler = product_sampler(gaussian_state(Space::circle), 1);
  const std::int64_t n = 50;
  const std::size_t samples = 20000;
  const auto m = sample_rescaled_position(rot, sampler, n, samples, 54);
  CHECK(m.samples == samples);
  CHECK(m.total_weight() == doctest::Approx(1.0));
  double mean = 0.0;
  for (double x : m.coords) mean += x;
  mean /= static_cast<double>(samples);
  // y ~ N(0, 1/2), so x - 0.7 has standard deviation sqrt(1/2) / n.
  CHECK(std::abs(mean - 0.7) < 4.0 * std::sqrt(0.5 / samples) / n);
  CHECK(sample_rescaled_position(rot, sampler, n, samples, 54).coords == m.coords);
  CHECK_THROWS_AS(sample_rescaled_position(rot, sampler, n, 0, 54), std::invalid_argument);
}

TEST_CASE("sampler failures name the sample") {
  const CircleRotation rot(0.3, cos_step());
  const Psi0Sampler bad = [](Rng& rng) -> Psi0Draw {
    if (rng.uniform() < 0.5) throw std::runtime_error("bad draw");
    return {};
  };
  try {
    sample_rescaled_position(rot, bad, 3, 100, 55);
    FAIL("expected a failure");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("sample") != std::string::npos);
    CHECK(std::string(e.what()).find("bad draw") != std::string::npos);
  }
}

TEST_CASE("quadrature at n = 0 is the initial walker density") {
  const CircleRotation rot(CircleRotation::golden_alpha(), cos_step());
  const Profile phi = GaussianProfile{0.3, 0.8, 2.0};
  const auto p = pn_quadrature(rot, {phi, CoinDensity::uniform(Space::circle)}, 0, wide_axis(), 64);
  for (std::size_t i = 0; i < p.size(); ++i) {
    CHECK(p.values[i] == doctest::Approx(profile_density(phi, p.axis.coordinate(i))).epsilon(1e-12));
  }
  CHECK_THROWS_AS(pn_quadrature(rot, gaussian_state(Space::circle), -1, wide_axis(), 64), std::invalid_argument);
  CHECK_THROWS_AS(pn_quadrature(rot, gaussian_state(Space::square), 1, wide_axis(), 64), std::invalid_argument);
}

TEST_CASE("quadrature with constant drift is a translate") {
  const CircleRotation rot(0.2, StepFunction::constant({0.5, 0.0}, 1));
  const auto p = pn_quadrature(rot, gaussian_state(Space::circle), 6, wide_axis(), 16);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double x = p.axis.coordinate(i);
    CHECK(p.values[i] == doctest::Approx(profile_density(GaussianProfile{}, x - 3.0)).epsilon(1e-12));
  }
}

TEST_CASE("quadrature keeps unit mass") {
  const CircleRotation rot(1.0 / 3.0, cos_step());
  const auto coin = CoinDensity::from_amplitude(Space::circle, TrigPolynomial{1.0, {TrigTerm{0, 2, 0.5, 0.5}}});
  CHECK(std::abs(pn_quadrature(rot, {GaussianProfile{}, coin}, 7, wide_axis(), 512).total_mass() - 1.0) < 1e-8);
  const BakerMap baker(cos_step());
  const DensityAxis axis{401, -20.0, 0.1};
  const auto pb = pn_quadrature(baker, {GaussianProfile{0.0, 1.0, 0.0}, CoinDensity::uniform(Space::square)}, 5, axis, 64, 9);
  CHECK(std::abs(pb.total_mass() - 1.0) < 1e-8);
}

TEST_CASE("quadrature agrees with monte carlo") {
  const CircleRotation rot(1.0 / 3.0, cos_step());
  const ProductState state{GaussianProfile{0.2, 0.7, 0.0}, CoinDensity::uniform(Space::circle)};
  const std::int64_t n = 4;
  const std::size_t samples = 100000;
  const Measure quad = rescaled_density(pn_quadrature(rot, state, n, {6001, -6.0, 0.002}, 1024), n);
  const Measure mc = sample_rescaled_position(rot, product_sampler(state, 1), n, samples, 56);
  std::vector<Vec2> zetas;
  for (double z : {0.5, 1.0, 2.0, 4.0, 8.0}) zetas.push_back({z, 0.0});
  const auto a = analysis::characteristic_function(quad, zetas);
  const auto b = analysis::characteristic_function(mc, zetas);
  for (std::size_t k = 0; k < zetas.size(); ++k) {
    CHECK(std::abs(a[k] - b[k]) <= 3.0 * std::sqrt(2.0) * analysis::cf_standard_error(a[k], samples) + 1e-3);
  }
}

TEST_CASE("limit pushforward") {
  const BakerMap flat(StepFunction::constant({0.4, 0.0}, 1));
  const auto c = limit_pushforward(flat, CoinDensity::uniform(Space::square), 100, 50, 57);
  for (double x : c.coords) CHECK(x == 0.4);

  StabilizationCheck check;
  const CircleRotation golden(CircleRotation::golden_alpha(), cos_step());
  const auto g = limit_pushforward(golden, CoinDensity::uniform(Space::circle), 10000, 1000, 58, &check);
  for (double x : g.coords) CHECK(std::abs(x) < 0.01);
  CHECK(check.stabilized);

  // cos(4 pi w) is invariant under w -> w + 1/2, so the limit is its law.
  const CircleRotation half(0.5, cos_step(2));
  const Measure h = limit_pushforward(half, CoinDensity::uniform(Space::circle), 1000, 20000, 59);
  const double ks = analysis::ks_distance_to_cdf(h, [](double x) {
    return x <= -1.0 ? 0.0 : x >= 1.0 ? 1.0 : 0.5 + std::asin(x) / kPi;
  });
  CHECK(ks < 0.015);
  CHECK_THROWS_AS(limit_pushforward(half, CoinDensity::uniform(Space::circle), 10, 0, 1), std::invalid_argument);
}

TEST_CASE("rescaled positions approach the limit") {
  const CircleRotation golden(CircleRotation::golden_alpha(), cos_step());
  const BakerMap baker(cos_step());
  EmpiricalMeasure origin;
  origin.add({0.0, 0.0}, 1.0);
  const Measure limit = origin;
  for (const DynamicalSystem* sys : {static_cast<const DynamicalSystem*>(&golden), static_cast<const DynamicalSystem*>(&baker)}) {
    const auto sampler = product_sampler(gaussian_state(sys->space()), 1);
    double previous = INFINITY;
    for (std::int64_t n : {10, 100, 1000}) {
      const double d = analysis::cf_distance(sample_rescaled_position(*sys, sampler, n, 20000, 60), limit);
      CHECK(d < previous);
      previous = d;
    }
  }
}
