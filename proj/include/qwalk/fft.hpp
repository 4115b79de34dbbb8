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
#include <cstddef>
#include <span>
#include <vector>

namespace qwalk {

using Complex = std::complex<double>;

bool is_power_of_two(std::size_t n);

/// In-place iterative radix-2 FFT of a fixed power-of-two length.
///
/// Unnormalised: forward computes sum_j a_j exp(-2 pi i jk/N) and inverse the
/// same with exp(+2 pi i jk/N). Twiddles are evaluated directly, not by
/// recurrence.
class Fft {
 public:
  explicit Fft(std::size_t n);

  std::size_t size() const { return n_; }
  void forward(std::span<Complex> data) const { run(data, false); }
  void inverse(std::span<Complex> data) const { run(data, true); }

 private:
  void run(std::span<Complex> data, bool inverse) const;

  std::size_t n_;
  std::vector<std::size_t> bit_reverse_;
  std::vector<Complex> twiddles_;  // exp(-2 pi i k / N), k < N/2
};

/// Shape of a row-major array together with one axis to transform.
struct StridedAxis {
  std::size_t length;  // points along the axis
  std::size_t stride;  // distance between consecutive points
  std::size_t outer;   // number of blocks before the axis
};

/// Applies a 1-D transform to every line along `axis`. `pre` multiplies
/// element j of a line before the FFT and `post` element k after it (both
/// length `axis.length`). Lines are independent and processed in parallel.
void transform_lines(std::span<Complex> data, const StridedAxis& axis, bool inverse,
                     std::span<const Complex> pre, std::span<const Complex> post);

}  // namespace qwalk
