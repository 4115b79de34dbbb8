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
#include <vector>

#include "qwalk/lattice_walk.hpp"
#include "qwalk/rng.hpp"

using namespace qwalk::lattice;

namespace {

const double kR = 1.0 / std::sqrt(2.0);

LatticeState random_state(qwalk::Rng& rng, std::size_t width, std::int64_t offset) {
  LatticeState s;
  s.offset = offset;
  for (std::size_t k = 0; k < width; ++k) {
    s.amps_h.emplace_back(rng.normal(), rng.normal());
    s.amps_t.emplace_back(rng.normal(), rng.normal());
  }
  const double scale = 1.0 / std::sqrt(s.norm_squared());
  for (auto& a : s.amps_h) a *= scale;
  for (auto& a : s.amps_t) a *= scale;
  return s;
}

// Dense U = S (I (x) F) on sites [-r, r], ordering (site, coin).
std::vector<std::vector<Complex>> dense_u(int r) {
  const auto dim = static_cast<std::size_t>(2 * (2 * r + 1));
  std::vector<std::vector<Complex>> u(dim, std::vector<Complex>(dim));
  auto idx = [&](int j, int c) { return static_cast<std::size_t>(2 * (j + r) + c); };
  for (int j = -r + 1; j < r; ++j) {
    u[idx(j + 1, 0)][idx(j, 0)] = kR;
    u[idx(j - 1, 1)][idx(j, 0)] = kR;
    u[idx(j + 1, 0)][idx(j, 1)] = kR;
    u[idx(j - 1, 1)][idx(j, 1)] = -kR;
  }
  return u;
}

}  // namespace

TEST_CASE("single step from |0,H> and |0,T>") {
  const auto h = hadamard_step(LatticeState::basis(0, Coin::heads));
  CHECK(std::abs(h.heads(1) - kR) < 1e-15);
  CHECK(std::abs(h.tails(-1) - kR) < 1e-15);
  CHECK(std::abs(h.heads(-1)) == 0.0);
  const auto d = lattice_distribution(h);
  CHECK(d.at(1) == doctest::Approx(0.5));
  CHECK(d.at(-1) == doctest::Approx(0.5));

  const auto t = hadamard_step(LatticeState::basis(0, Coin::tails));
  CHECK(std::abs(t.heads(1) - kR) < 1e-15);
  CHECK(std::abs(t.tails(-1) + kR) < 1e-15);
}

TEST_CASE("two steps from |0,H>") {
  const auto d = lattice_distribution(evolve(LatticeState::basis(0, Coin::heads), 2));
  CHECK(d.at(2) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(d.at(0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(d.at(-2) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(d.at(1) == 0.0);

  const auto q = rescaled_lattice_measure(d, 2);
  double at_m1 = 0, at_0 = 0, at_1 = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q.coords[i] == -1.0) at_m1 += q.weights[i];
    if (q.coords[i] == 0.0) at_0 += q.weights[i];
    if (q.coords[i] == 1.0) at_1 += q.weights[i];
  }
  CHECK(at_m1 == doctest::Approx(0.25));
  CHECK(at_0 == doctest::Approx(0.5));
  CHECK(at_1 == doctest::Approx(0.25));
}

TEST_CASE("distribution of basis and uniform states") {
  const auto d = lattice_distribution(LatticeState::basis(0, Coin::heads));
  CHECK(d.at(0) == 1.0);
  CHECK(d.total() == 1.0);
  const auto ten = lattice_distribution(evolve(LatticeState::basis(0, Coin::heads), 10));
  CHECK(std::abs(ten.total() - 1.0) < 1e-12);
}

TEST_CASE("rescaling") {
  LatticeDistribution d{5, {1.0}};
  const auto q = rescaled_lattice_measure(d, 10);
  REQUIRE(q.size() == 1);
  CHECK(q.coords[0] == 0.5);
  CHECK(q.weights[0] == 1.0);
  CHECK_THROWS_AS(rescaled_lattice_measure(d, 0), std::invalid_argument);
}

TEST_CASE("window growth") {
  qwalk::Rng rng(5);
  const auto s = random_state(rng, 7, -3);
  const auto out = evolve(s, 9);
  CHECK(out.width() <= s.width() + 18);
}

TEST_CASE("norm conservation on random states") {
  qwalk::Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_state(rng, 1 + rng.next() % 64, static_cast<std::int64_t>(rng.next() % 9) - 4);
    CHECK(std::abs(hadamard_step(s).norm_squared() - s.norm_squared()) < 1e-12);
  }
}

TEST_CASE("linearity") {
  qwalk::Rng rng(12);
  const auto a = random_state(rng, 6, -2);
  const auto b = random_state(rng, 6, -2);
  const Complex alpha(0.3, -1.1), beta(-0.7, 0.4);
  LatticeState c = a;
  for (std::size_t k = 0; k < c.width(); ++k) {
    c.amps_h[k] = alpha * a.amps_h[k] + beta * b.amps_h[k];
    c.amps_t[k] = alpha * a.amps_t[k] + beta * b.amps_t[k];
  }
  const auto sa = hadamard_step(a), sb = hadamard_step(b), sc = hadamard_step(c);
  for (std::int64_t j = sc.offset; j < sc.offset + static_cast<std::int64_t>(sc.width()); ++j) {
    CHECK(std::abs(sc.heads(j) - (alpha * sa.heads(j) + beta * sb.heads(j))) < 1e-12);
    CHECK(std::abs(sc.tails(j) - (alpha * sa.tails(j) + beta * sb.tails(j))) < 1e-12);
  }
}

TEST_CASE("dense matrix power oracle for n <= 8") {
  const int r = 12;
  const auto u = dense_u(r);
  qwalk::Rng rng(13);
  for (int trial = 0; trial < 5; ++trial) {
    const auto s = random_state(rng, 5, -2);
    std::vector<Complex> v(u.size());
    for (int k = 0; k < 5; ++k) {
      v[static_cast<std::size_t>(2 * (k - 2 + r))] = s.amps_h[static_cast<std::size_t>(k)];
      v[static_cast<std::size_t>(2 * (k - 2 + r) + 1)] = s.amps_t[static_cast<std::size_t>(k)];
    }
    LatticeState walked = s;
    for (int n = 1; n <= 8; ++n) {
      std::vector<Complex> w(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) w[i] += u[i][j] * v[j];
      }
      v = w;
      walked = hadamard_step(walked);
      for (int j = -r; j <= r; ++j) {
        CHECK(std::abs(walked.heads(j) - v[static_cast<std::size_t>(2 * (j + r))]) < 1e-10);
        CHECK(std::abs(walked.tails(j) - v[static_cast<std::size_t>(2 * (j + r) + 1)]) < 1e-10);
      }
    }
  }
}

TEST_CASE("mass concentrates on the Konno interval") {
  const double edge = 1.0 / std::sqrt(2.0) + 0.05;
  auto outside = [&](std::int64_t n) {
    const auto q = rescaled_lattice_measure(
        lattice_distribution(evolve(LatticeState::basis(0, Coin::heads), n)), n);
    double m = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) m += std::abs(q.coords[i]) > edge ? q.weights[i] : 0.0;
    return m;
  };
  const double m100 = outside(100);
  const double m200 = outside(200);
  CHECK(m200 < 0.05);
  CHECK(m200 <= m100);
}
