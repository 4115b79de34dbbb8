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

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "qwalk/parallel.hpp"
#include "qwalk/rng.hpp"

TEST_CASE("parallel_for visits every index once at any thread count") {
  for (std::size_t threads : {1, 2, 3, 8}) {
    qwalk::ThreadCountGuard guard(threads);
    std::vector<int> hits(1000, 0);
    qwalk::parallel_for(0, hits.size(), [&](std::size_t i) { hits[i] += 1; }, 7);
    for (int h : hits) CHECK(h == 1);
  }
}

TEST_CASE("parallel_for propagates exceptions") {
  qwalk::ThreadCountGuard guard(4);
  CHECK_THROWS_AS(qwalk::parallel_for(0, 100,
                                      [](std::size_t i) {
                                        if (i == 57) throw std::runtime_error("boom");
                                      }),
                  std::runtime_error);
}

TEST_CASE("thread count guard restores the previous value") {
  const auto before = qwalk::thread_count();
  {
    qwalk::ThreadCountGuard guard(5);
    CHECK(qwalk::thread_count() == 5);
  }
  CHECK(qwalk::thread_count() == before);
}

TEST_CASE("rng streams are reproducible and distinct") {
  qwalk::Rng a(42, 7), b(42, 7), c(42, 8);
  for (int i = 0; i < 10; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    CHECK(x != c.next());
  }
}

TEST_CASE("rng distributions have the right moments") {
  qwalk::Rng rng(9);
  const int n = 200000;
  double su = 0, su2 = 0, sn = 0, sn2 = 0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    CHECK((u >= 0.0 && u < 1.0));
    su += u;
    su2 += u * u;
    const double z = rng.normal();
    sn += z;
    sn2 += z * z;
  }
  CHECK(su / n == doctest::Approx(0.5).epsilon(0.01));
  CHECK(su2 / n == doctest::Approx(1.0 / 3.0).epsilon(0.01));
  CHECK(std::abs(sn / n) < 0.01);
  CHECK(sn2 / n == doctest::Approx(1.0).epsilon(0.01));
}
