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

#include "qwalk/limits_analysis.hpp"
#include "qwalk/plancherel_walk.hpp"
#include "qwalk/profiles.hpp"
#include "qwalk/rng.hpp"

using namespace qwalk;
using namespace qwalk::plancherel;
using grid::Axes;
using grid::Direction;

namespace {

GridWavefunction product(const GridSpec& spec, const Profile& phi, const Profile& chi) {
  auto psi = GridWavefunction::sample(spec, [&](auto x, auto y) {
    auto v = profile_amplitude(phi, x[0]) * profile_amplitude(chi, y[0]);
    if (spec.dim == 2) v *= profile_amplitude(phi, x[1]) * profile_amplitude(chi, y[1]);
    return v;
  });
  psi.normalize();
  return psi;
}

GridWavefunction standard_gaussian(const GridSpec& spec) {
  return product(spec, GaussianProfile{}, GaussianProfile{});
}

double max_diff(const GridWavefunction& a, const GridWavefunction& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) d = std::max(d, std::abs(a.values[i] - b.values[i]));
  return d;
}

double max_diff(const DensityOnGrid& a, const DensityOnGrid& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) d = std::max(d, std::abs(a.values[i] - b.values[i]));
  return d;
}

}  // namespace

TEST_CASE("one step of the product gaussian matches the analytic shear") {
  const auto spec = GridSpec::walk(1, 256, 1);
  const auto psi = standard_gaussian(spec);
  const auto out = plancherel_step(psi);
  const double period = 2.0 * spec.x.half_length;
  const double c = std::pow(std::numbers::pi, -0.5);
  double err = 0.0;
  for (std::size_t ix = 0; ix < spec.x_size(); ++ix) {
    const double x = spec.x.coordinate(ix);
    for (std::size_t iy = 0; iy < spec.y_size(); ++iy) {
      const double y = spec.y.coordinate(iy);
      const double u = std::remainder(x - y, period);
      // phi(x - y) times the transform of the coin gaussian, itself.
      err = std::max(err, std::abs(out.at(ix, iy) - c * std::exp(-(u * u + y * y) / 2.0)));
    }
  }
  CHECK(err < 1e-8);
}

TEST_CASE("steps are unitary") {
  Rng rng(31);
  const auto spec = GridSpec::walk(1, 64, 4);
  auto psi = GridWavefunction::zeros(spec);
  for (auto& v : psi.values) v = {rng.normal(), rng.normal()};
  psi.normalize();
  CHECK(std::abs(plancherel_step(psi).norm() - 1.0) < 1e-12);
  CHECK(std::abs(evolve(psi, 64).norm() - 1.0) < 1e-10);

  const auto spec2 = GridSpec::walk(2, 16, 1);
  auto psi2 = GridWavefunction::zeros(spec2);
  for (auto& v : psi2.values) v = {rng.normal(), rng.normal()};
  psi2.normalize();
  CHECK(std::abs(evolve(psi2, 5).norm() - 1.0) < 1e-12);
}

TEST_CASE("evolve with zero and one step") {
  const auto psi = standard_gaussian(GridSpec::walk(1, 64, 2));
  CHECK(max_diff(evolve(psi, 0), psi) == 0.0);
  CHECK(max_diff(evolve(psi, 1), plancherel_step(psi)) == 0.0);
  CHECK_THROWS_AS(evolve(psi, -1), std::invalid_argument);
}

TEST_CASE("four steps equal the multiplication route") {
  const auto spec = GridSpec::walk(1, 256, 2);
  const auto psi = standard_gaussian(spec);
  auto f1 = grid::dft(psi, Axes::x_only, Direction::forward);
  for (std::size_t k = 0; k < f1.spec.x_size(); ++k) {
    const double z = f1.spec.x.coordinate(k);
    for (std::size_t iy = 0; iy < f1.spec.y_size(); ++iy) f1.at(k, iy) *= std::polar(1.0, z * z);
  }
  const auto shortcut = grid::dft(f1, Axes::x_only, Direction::inverse);
  CHECK(max_diff(evolve(psi, 4), shortcut) < 1e-6);
  CHECK(check_u4_identity(psi) < 1e-6);
}

TEST_CASE("u4 identity on a d = 2 grid") {
  CHECK(check_u4_identity(standard_gaussian(GridSpec::walk(2, 32, 1))) < 1e-12);
}

TEST_CASE("u4 identity needs a contained state") {
  const auto spec = GridSpec::walk(1, 64, 2);
  auto corner = GridWavefunction::zeros(spec);
  corner.at(0, 0) = 1.0;
  corner.normalize();
  CHECK(check_u4_identity(corner) > 0.1);
  WalkDiagnostics diag;
  evolve(corner, 1, diag);
  CHECK(diag.boundary_warning);
  WalkDiagnostics calm;
  evolve(standard_gaussian(GridSpec::walk(1, 256, 8)), 8, calm);
  CHECK_FALSE(calm.boundary_warning);
}

TEST_CASE("u4 error decreases with the box and with zero padding") {
  std::vector<double> e;
  for (std::size_t n : {128, 256, 512}) {
    e.push_back(check_u4_identity(product(GridSpec::walk(1, n, 2), GaussianProfile{}, GaussianProfile{0.0, 3.0, 0.0})));
  }
  CHECK(e[0] > e[1]);
  CHECK(e[1] > e[2]);
  CHECK(e[2] < 1e-6);
  const double small = check_u4_identity(product(GridSpec::walk(1, 128, 2), GaussianProfile{}, GaussianProfile{0.0, 3.0, 0.0}));
  const double padded = check_u4_identity(product(GridSpec::walk(1, 128, 8), GaussianProfile{}, GaussianProfile{0.0, 3.0, 0.0}));
  CHECK(padded <= small);
}

TEST_CASE("grid requirements for the walk") {
  CHECK_THROWS_AS(require_walk_grid(GridSpec::uniform(1, 16.0, 256)), std::invalid_argument);
  CHECK_NOTHROW(require_walk_grid(GridSpec::walk(1, 64, 4)));
}

TEST_CASE("position density") {
  const auto spec = GridSpec::walk(1, 64, 2);
  const Profile phi = GaussianProfile{0.5, 0.9, 1.0};
  const auto p = position_density(product(spec, phi, BoxProfile{-1.0, 1.0}));
  CHECK(std::abs(p.total_mass() - 1.0) < 1e-10);
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += profile_density(phi, spec.x.coordinate(i));
  s *= spec.x.spacing();
  for (std::size_t i = 0; i < p.size(); ++i) {
    CHECK(p.values[i] == doctest::Approx(profile_density(phi, spec.x.coordinate(i)) / s).epsilon(1e-12));
  }

  auto delta = GridWavefunction::zeros(spec);
  delta.at(40, 9) = 1.0;
  delta.normalize();
  const auto pd = position_density(delta);
  for (std::size_t i = 0; i < pd.size(); ++i) CHECK((i == 40 ? pd.values[i] > 0.0 : pd.values[i] == 0.0));

  Rng rng(32);
  auto psi = GridWavefunction::zeros(spec);
  for (auto& v : psi.values) v = {rng.normal(), rng.normal()};
  psi.normalize();
  const auto pr = position_density(psi);
  for (std::size_t ix = 0; ix < spec.x_size(); ++ix) {
    double direct = 0.0;
    for (std::size_t iy = 0; iy < spec.y_size(); ++iy) direct += std::norm(psi.at(ix, iy)) * spec.y_cell();
    CHECK(std::abs(pr.values[ix] - direct) < 1e-12);
  }
}

TEST_CASE("rescaled density relabels bins") {
  const auto p = position_density(standard_gaussian(GridSpec::walk(1, 64, 2)));
  const auto same = rescaled_density(p, 1);
  CHECK(same.axis == p.axis);
  CHECK(same.values == p.values);
  const auto q = rescaled_density(p, 8);
  CHECK(q.axis.spacing == doctest::Approx(p.axis.spacing / 8));
  CHECK(q.axis.origin == doctest::Approx(p.axis.origin / 8));
  CHECK(std::abs(q.total_mass() - p.total_mass()) < 1e-12);
  DensityOnGrid atom{1, {4, -2.0, 1.0}, {0.0, 0.0, 0.0, 1.0}};
  const auto qa = rescaled_density(atom, 4);
  CHECK(qa.point(3)[0] == doctest::Approx(0.25));
  CHECK_THROWS_AS(rescaled_density(p, 0), std::invalid_argument);
}

TEST_CASE("limit density of the standard gaussian") {
  const auto q = limit_density(standard_gaussian(GridSpec::uniform(1, 16.0, 256)));
  double err = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double x = q.axis.coordinate(i);
    err = std::max(err, std::abs(q.values[i] - 2.0 / std::sqrt(std::numbers::pi) * std::exp(-4.0 * x * x)));
  }
  CHECK(err < 1e-6);
  CHECK(std::abs(q.total_mass() - 1.0) < 1e-8);
  const auto m = analysis::moments(q, 2);
  CHECK(std::abs(m[0][0]) < 1e-12);
  CHECK(std::abs(m[0][1] - 0.125) < 1e-6);
}

TEST_CASE("limit density with momentum shifts to -k/2") {
  const auto q = limit_density(product(GridSpec::uniform(1, 16.0, 256), GaussianProfile{0.0, 1.0, 3.0}, GaussianProfile{}));
  CHECK(analysis::moments(q, 1)[0][0] == doctest::Approx(-1.5).epsilon(1e-9));
}

TEST_CASE("limit density in d = 2 integrates to one") {
  const auto q = limit_density(standard_gaussian(GridSpec::walk(2, 32, 1)));
  CHECK(std::abs(q.total_mass() - 1.0) < 1e-8);
}

TEST_CASE("limit is independent of chi0 and invariant under U") {
  const auto spec = GridSpec::walk(1, 128, 4);
  const Profile phi = GaussianProfile{-0.4, 1.1, 0.8};
  const auto qa = limit_density(product(spec, phi, GaussianProfile{}));
  const auto qb = limit_density(product(spec, phi, BoxProfile{0.0, 3.0}));
  CHECK(max_diff(qa, qb) < 1e-10);
  auto psi = product(spec, phi, BoxProfile{0.0, 3.0});
  for (int p = 1; p <= 4; ++p) {
    psi = plancherel_step(psi);
    CHECK(max_diff(limit_density(psi), qa) < 1e-6);
  }
}

TEST_CASE("cf distance to the limit along n = 4m") {
  const auto spec = GridSpec::walk(1, 256, 8);
  const auto psi0 = standard_gaussian(spec);
  const Measure limit = limit_density(psi0);
  auto psi = psi0;
  double previous = INFINITY;
  std::int64_t done = 0;
  for (std::int64_t m : {1, 2, 4, 8}) {
    psi = evolve(psi, 4 * m - done);
    done = 4 * m;
    const double d = analysis::cf_distance(rescaled_density(position_density(psi), 4 * m), limit);
    CHECK(d <= previous);
    previous = d;
  }
}
