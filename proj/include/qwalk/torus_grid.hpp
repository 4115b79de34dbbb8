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

#include <array>
#include <complex>
#include <cstddef>
#include <iosfwd>
#include <vector>

namespace qwalk::grid {

using Complex = std::complex<double>;

/// A periodic axis [-L, L) sampled at N points x_i = -L + i * (2L / N).
///
/// The discrete Fourier transform maps an axis to its dual, the centred
/// frequency axis with half-length pi / spacing and the same N. The dual of
/// the dual is the original axis.
struct Axis {
  double half_length = 0.0;
  std::size_t points = 0;

  double spacing() const { return 2.0 * half_length / static_cast<double>(points); }
  double coordinate(std::size_t i) const {
    return -half_length + static_cast<double>(i) * spacing();
  }
  Axis dual() const;
  /// spacing^2 == 2 pi / N, i.e. the axis is its own dual.
  bool self_dual(double rel_tol = 1e-12) const;
  bool same_as(const Axis& other, double rel_tol = 1e-12) const;

  /// The unique self-dual axis with N points: spacing sqrt(2 pi / N).
  static Axis self_dual_axis(std::size_t points);
};

/// Discretisation of R^d x R^d (walker x coin) as a product of periodic boxes.
///
/// Every walker coordinate uses `x`, every coin coordinate uses `y`.
struct GridSpec {
  int dim = 1;
  Axis x;
  Axis y;

  /// Identical walker and coin axes [-L, L) with N points.
  static GridSpec uniform(int dim, double half_length, std::size_t points);
  /// Grid on which the Plancherel step is exact index arithmetic: a self-dual
  /// coin axis with `coin_points` points and a walker axis with the same
  /// spacing and `x_factor` times as many points.
  static GridSpec walk(int dim, std::size_t coin_points, std::size_t x_factor = 1);

  std::size_t x_size() const;  // x.points^dim
  std::size_t y_size() const;  // y.points^dim
  std::size_t size() const { return x_size() * y_size(); }
  double x_cell() const;       // x.spacing^dim
  double y_cell() const;

  /// Throws std::invalid_argument unless dim is 1 or 2 and both axes have a
  /// power-of-two point count >= 8 and a positive length.
  void validate() const;
  bool same_as(const GridSpec& other) const;
};

/// psi(x, y) sampled on a GridSpec. Layout is row-major over
/// (x_1, ..., x_d, y_1, ..., y_d), coin indices fastest.
struct GridWavefunction {
  GridSpec spec;
  std::vector<Complex> values;

  static GridWavefunction zeros(const GridSpec& spec);
  /// Samples f(x, y) at the grid points; for d = 1 the second components of
  /// the arguments are zero.
  template <class F>
  static GridWavefunction sample(const GridSpec& spec, F&& f);

  Complex& at(std::size_t x_index, std::size_t y_index) {
    return values[x_index * spec.y_size() + y_index];
  }
  const Complex& at(std::size_t x_index, std::size_t y_index) const {
    return values[x_index * spec.y_size() + y_index];
  }

  /// L2 norm: sqrt(x_cell * y_cell * sum |psi|^2).
  double norm() const;
  void normalize();
};

/// Coordinates of a flat walker or coin index.
std::array<double, 2> x_point(const GridSpec& spec, std::size_t x_index);
std::array<double, 2> y_point(const GridSpec& spec, std::size_t y_index);

enum class Axes { x_only, y_only, both };
enum class Direction { forward, inverse };

/// Discrete approximation of the continuous transform with kernel
/// (2 pi)^{-d/2} exp(-i x.zeta) (forward) or exp(+i x.zeta) (inverse) on the
/// selected coordinate group. The transformed axes are replaced by their
/// duals; values approximate the continuum transform pointwise. Unitary.
GridWavefunction dft(const GridWavefunction& psi, Axes axes, Direction direction);

/// (S psi)(x, y) = psi(x - y, y) by cyclic index arithmetic. Requires the coin
/// spacing to be an integer multiple of the walker spacing.
GridWavefunction shear(const GridWavefunction& psi);
/// psi(x + y, y); exact inverse of shear.
GridWavefunction shear_inverse(const GridWavefunction& psi);

/// Probability in the outermost two grid shells of the walker or coin box.
double boundary_mass(const GridWavefunction& psi);

/// Debug table: one row "x_index,y_index,re,im" per grid point (flat
/// indices), preceded by a comment line describing the grid and a header.
void write_csv(const GridWavefunction& psi, std::ostream& out);
GridWavefunction read_csv(std::istream& in);

template <class F>
GridWavefunction GridWavefunction::sample(const GridSpec& spec, F&& f) {
  GridWavefunction psi = zeros(spec);
  for (std::size_t ix = 0; ix < spec.x_size(); ++ix) {
    const auto x = x_point(spec, ix);
    for (std::size_t iy = 0; iy < spec.y_size(); ++iy) {
      psi.at(ix, iy) = f(x, y_point(spec, iy));
    }
  }
  return psi;
}

}  // namespace qwalk::grid
