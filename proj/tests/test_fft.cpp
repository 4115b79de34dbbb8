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
#include <vector>

#include "qwalk/fft.hpp"
#include "qwalk/rng.hpp"

using qwalk::Complex;

namespace {

std::vector<Complex> naive_dft(const std::vector<Complex>& a, bool inverse) {
  const std::size_t n = a.size();
  const double sign = inverse ? 1.0 : -1.0;
  std::vector<Complex> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(j * k % n) /
                           static_cast<double>(n);
      out[k] += a[j] * std::polar(1.0, angle);
    }
  }
  return out;
}

std::vector<Complex> random_vector(std::size_t n, qwalk::Rng& rng) {
  std::vector<Complex> v(n);
  for (auto& x : v) x = {rng.normal(), rng.normal()};
  return v;
}

double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST_CASE("power of two detection") {
  CHECK(qwalk::is_power_of_two(1));
  CHECK(qwalk::is_power_of_two(1024));
  CHECK_FALSE(qwalk::is_power_of_two(0));
  CHECK_FALSE(qwalk::is_power_of_two(96));
  CHECK_THROWS_AS(qwalk::Fft(12), std::invalid_argument);
}

TEST_CASE("fft matches the naive DFT") {
  qwalk::Rng rng(1);
  for (std::size_t n : {1, 2, 4, 8, 64, 256, 512}) {
    CAPTURE(n);
    const auto a = random_vector(n, rng);
    const qwalk::Fft fft(n);
    auto f = a;
    fft.forward(f);
    CHECK(max_diff(f, naive_dft(a, false)) < 1e-10 * static_cast<double>(n));
    auto g = a;
    fft.inverse(g);
    CHECK(max_diff(g, naive_dft(a, true)) < 1e-10 * static_cast<double>(n));
  }
}

TEST_CASE("forward then inverse scales by N") {
  qwalk::Rng rng(2);
  const qwalk::Fft fft(1024);
  const auto a = random_vector(1024, rng);
  auto b = a;
  fft.forward(b);
  fft.inverse(b);
  for (auto& x : b) x /= 1024.0;
  CHECK(max_diff(a, b) < 1e-13);
}

TEST_CASE("transform_lines agrees with per-line transforms") {
  qwalk::Rng rng(3);
  // 3 x 8 x 4 array, transform the middle axis.
  const std::size_t outer = 3, length = 8, inner = 4;
  const auto data = random_vector(outer * length * inner, rng);
  std::vector<Complex> pre(length), post(length);
  for (std::size_t j = 0; j < length; ++j) {
    pre[j] = std::polar(1.0, 0.3 * static_cast<double>(j));
    post[j] = std::polar(2.0, -0.1 * static_cast<double>(j));
  }
  auto batched = data;
  qwalk::transform_lines(batched, {length, inner, outer}, false, pre, post);
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t i = 0; i < inner; ++i) {
      std::vector<Complex> line(length);
      for (std::size_t j = 0; j < length; ++j) line[j] = data[(o * length + j) * inner + i] * pre[j];
      const auto f = naive_dft(line, false);
      for (std::size_t k = 0; k < length; ++k) {
        CHECK(std::abs(batched[(o * length + k) * inner + i] - f[k] * post[k]) < 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(qwalk::transform_lines(batched, {length, inner, outer + 1}, false, pre, post),
                  std::invalid_argument);
}
