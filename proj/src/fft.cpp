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

#include "qwalk/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qwalk/parallel.hpp"

namespace qwalk {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

Fft::Fft(std::size_t n) : n_(n), bit_reverse_(n), twiddles_(n / 2) {
  if (!is_power_of_two(n)) {
    throw std::invalid_argument("Fft: length " + std::to_string(n) + " is not a power of two");
  }
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = 0;
    for (std::size_t b = 0; b < bits; ++b) {
      if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
    }
    bit_reverse_[i] = r;
  }
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    twiddles_[k] = {std::cos(angle), std::sin(angle)};
  }
}

void Fft::run(std::span<Complex> data, bool inverse) const {
  if (data.size() != n_) {
    throw std::invalid_argument("Fft: expected " + std::to_string(n_) + " points, got " +
                                std::to_string(data.size()));
  }
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t r = bit_reverse_[i];
    if (i < r) std::swap(data[i], data[r]);
  }
  for (std::size_t len = 2; len <= n_; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t step = n_ / len;
    for (std::size_t start = 0; start < n_; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        Complex w = twiddles_[k * step];
        if (inverse) w = std::conj(w);
        const Complex u = data[start + k];
        const Complex v = data[start + k + half] * w;
        data[start + k] = u + v;
        data[start + k + half] = u - v;
      }
    }
  }
}

void transform_lines(std::span<Complex> data, const StridedAxis& axis, bool inverse,
                     std::span<const Complex> pre, std::span<const Complex> post) {
  const std::size_t n = axis.length;
  if (pre.size() != n || post.size() != n) {
    throw std::invalid_argument("transform_lines: phase tables must match the axis length");
  }
  if (axis.outer * n * axis.stride != data.size()) {
    throw std::invalid_argument("transform_lines: axis shape does not match the data size");
  }
  const Fft fft(n);
  const std::size_t lines = axis.outer * axis.stride;
  const std::size_t block = n * axis.stride;
  parallel_for(
      0, lines,
      [&](std::size_t line) {
        const std::size_t outer = line / axis.stride;
        const std::size_t inner = line % axis.stride;
        Complex* base = data.data() + outer * block + inner;
        std::vector<Complex> buffer(n);
        for (std::size_t j = 0; j < n; ++j) buffer[j] = base[j * axis.stride] * pre[j];
        if (inverse) {
          fft.inverse(buffer);
        } else {
          fft.forward(buffer);
        }
        for (std::size_t k = 0; k < n; ++k) base[k * axis.stride] = buffer[k] * post[k];
      },
      64);
}

}  // namespace qwalk
