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

#include "qwalk/torus_grid.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qwalk/fft.hpp"
#include "qwalk/parallel.hpp"

namespace qwalk::grid {
namespace {

bool close_rel(double a, double b, double rel_tol) {
  return std::abs(a - b) <= rel_tol * std::max(std::abs(a), std::abs(b));
}

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Full array shape: d walker dimensions then d coin dimensions.
std::vector<std::size_t> shape_of(const GridSpec& spec) {
  std::vector<std::size_t> dims;
  for (int i = 0; i < spec.dim; ++i) dims.push_back(spec.x.points);
  for (int i = 0; i < spec.dim; ++i) dims.push_back(spec.y.points);
  return dims;
}

StridedAxis strided(const std::vector<std::size_t>& dims, std::size_t p) {
  StridedAxis a{dims[p], 1, 1};
  for (std::size_t q = p + 1; q < dims.size(); ++q) a.stride *= dims[q];
  for (std::size_t q = 0; q < p; ++q) a.outer *= dims[q];
  return a;
}

// Transforms one dimension of a centred grid with spacing `spacing`. With
// x_j = (j - N/2) h and zeta_k = (k - N/2) 2 pi / (N h), and N divisible by 4,
// exp(-i x_j zeta_k) = (-1)^{j+k} exp(-2 pi i jk / N).
void transform_dimension(std::vector<Complex>& values, const std::vector<std::size_t>& dims,
                         std::size_t p, double spacing, Direction direction) {
  const std::size_t n = dims[p];
  const double scale = spacing / std::sqrt(2.0 * std::numbers::pi);
  std::vector<Complex> pre(n), post(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    pre[j] = sign;
    post[j] = sign * scale;
  }
  transform_lines(values, strided(dims, p), direction == Direction::inverse, pre, post);
}

void check_values(const GridWavefunction& psi, const char* what) {
  psi.spec.validate();
  if (psi.values.size() != psi.spec.size()) {
    throw std::invalid_argument(std::string(what) + ": wavefunction has " +
                                std::to_string(psi.values.size()) + " values but its grid has " +
                                std::to_string(psi.spec.size()));
  }
}

std::size_t shear_ratio(const GridSpec& spec) {
  const double ratio = spec.y.spacing() / spec.x.spacing();
  const double r = std::round(ratio);
  if (r < 1.0 || std::abs(ratio - r) > 1e-9 * r) {
    throw std::invalid_argument(
        "shear: coin spacing must be an integer multiple of the walker spacing (ratio " +
        std::to_string(ratio) + ")");
  }
  return static_cast<std::size_t>(r);
}

// out(x, y) = in(x - sign * r * y) componentwise on the torus.
GridWavefunction shear_impl(const GridWavefunction& psi, long sign) {
  check_values(psi, "shear");
  const GridSpec& spec = psi.spec;
  const long r = static_cast<long>(shear_ratio(spec));
  const long nx = static_cast<long>(spec.x.points);
  const long ny = static_cast<long>(spec.y.points);
  GridWavefunction out = GridWavefunction::zeros(spec);
  const std::size_t ys = spec.y_size();
  parallel_for(
      0, ys,
      [&](std::size_t iy) {
        long shift[2] = {0, 0};
        if (spec.dim == 1) {
          shift[0] = sign * r * (static_cast<long>(iy) - ny / 2);
        } else {
          shift[0] = sign * r * (static_cast<long>(iy) / ny - ny / 2);
          shift[1] = sign * r * (static_cast<long>(iy) % ny - ny / 2);
        }
        auto wrap = [nx](long i) { return static_cast<std::size_t>(((i % nx) + nx) % nx); };
        for (std::size_t ix = 0; ix < spec.x_size(); ++ix) {
          std::size_t src;
          if (spec.dim == 1) {
            src = wrap(static_cast<long>(ix) - shift[0]);
          } else {
            const long i1 = static_cast<long>(ix) / nx;
            const long i2 = static_cast<long>(ix) % nx;
            src = wrap(i1 - shift[0]) * static_cast<std::size_t>(nx) + wrap(i2 - shift[1]);
          }
          out.values[ix * ys + iy] = psi.values[src * ys + iy];
        }
      },
      16);
  return out;
}

bool in_shell(std::size_t i, std::size_t n) { return i < 2 || i + 2 >= n; }

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Axis Axis::dual() const { return Axis{std::numbers::pi / spacing(), points}; }

bool Axis::self_dual(double rel_tol) const {
  return close_rel(spacing() * spacing(), 2.0 * std::numbers::pi / static_cast<double>(points),
                   rel_tol);
}

bool Axis::same_as(const Axis& other, double rel_tol) const {
  return points == other.points && close_rel(half_length, other.half_length, rel_tol);
}

Axis Axis::self_dual_axis(std::size_t points) {
  const double spacing = std::sqrt(2.0 * std::numbers::pi / static_cast<double>(points));
  return Axis{0.5 * spacing * static_cast<double>(points), points};
}

GridSpec GridSpec::uniform(int dim, double half_length, std::size_t points) {
  GridSpec s{dim, Axis{half_length, points}, Axis{half_length, points}};
  s.validate();
  return s;
}

GridSpec GridSpec::walk(int dim, std::size_t coin_points, std::size_t x_factor) {
  if (x_factor == 0 || !is_power_of_two(x_factor)) {
    throw std::invalid_argument("GridSpec::walk: x_factor must be a power of two");
  }
  const Axis coin = Axis::self_dual_axis(coin_points);
  GridSpec s{dim, Axis{coin.half_length * static_cast<double>(x_factor), coin_points * x_factor},
             coin};
  s.validate();
  return s;
}

std::size_t GridSpec::x_size() const { return ipow(x.points, dim); }
std::size_t GridSpec::y_size() const { return ipow(y.points, dim); }
double GridSpec::x_cell() const { return std::pow(x.spacing(), dim); }
double GridSpec::y_cell() const { return std::pow(y.spacing(), dim); }

void GridSpec::validate() const {
  if (dim != 1 && dim != 2) {
    throw std::invalid_argument("GridSpec: dimension must be 1 or 2, got " + std::to_string(dim));
  }
  for (const Axis* a : {&x, &y}) {
    if (a->points < 8 || !is_power_of_two(a->points)) {
      throw std::invalid_argument("GridSpec: points per axis must be a power of two >= 8, got " +
                                  std::to_string(a->points));
    }
    if (!(a->half_length > 0.0) || !std::isfinite(a->half_length)) {
      throw std::invalid_argument("GridSpec: half-length must be positive");
    }
  }
}

bool GridSpec::same_as(const GridSpec& other) const {
  return dim == other.dim && x.same_as(other.x) && y.same_as(other.y);
}

GridWavefunction GridWavefunction::zeros(const GridSpec& spec) {
  spec.validate();
  return GridWavefunction{spec, std::vector<Complex>(spec.size(), Complex{0.0})};
}

double GridWavefunction::norm() const {
  // Row sums first, then a fixed-order total, so the result does not depend
  // on the thread count.
  const std::size_t ys = spec.y_size();
  std::vector<double> rows(spec.x_size(), 0.0);
  parallel_for(
      0, rows.size(),
      [&](std::size_t ix) {
        double s = 0.0;
        for (std::size_t iy = 0; iy < ys; ++iy) s += std::norm(values[ix * ys + iy]);
        rows[ix] = s;
      },
      64);
  double total = 0.0;
  for (double r : rows) total += r;
  return std::sqrt(total * spec.x_cell() * spec.y_cell());
}

void GridWavefunction::normalize() {
  const double n = norm();
  if (n == 0.0) throw std::invalid_argument("normalize: zero wavefunction");
  for (auto& v : values) v /= n;
}

std::array<double, 2> x_point(const GridSpec& spec, std::size_t x_index) {
  if (spec.dim == 1) return {spec.x.coordinate(x_index), 0.0};
  return {spec.x.coordinate(x_index / spec.x.points), spec.x.coordinate(x_index % spec.x.points)};
}

std::array<double, 2> y_point(const GridSpec& spec, std::size_t y_index) {
  if (spec.dim == 1) return {spec.y.coordinate(y_index), 0.0};
  return {spec.y.coordinate(y_index / spec.y.points), spec.y.coordinate(y_index % spec.y.points)};
}

GridWavefunction dft(const GridWavefunction& psi, Axes axes, Direction direction) {
  check_values(psi, "dft");
  GridWavefunction out = psi;
  const auto dims = shape_of(psi.spec);
  const std::size_t d = static_cast<std::size_t>(psi.spec.dim);
  if (axes != Axes::y_only) {
    for (std::size_t p = 0; p < d; ++p) {
      transform_dimension(out.values, dims, p, psi.spec.x.spacing(), direction);
    }
    out.spec.x = psi.spec.x.dual();
  }
  if (axes != Axes::x_only) {
    for (std::size_t p = d; p < 2 * d; ++p) {
      transform_dimension(out.values, dims, p, psi.spec.y.spacing(), direction);
    }
    out.spec.y = psi.spec.y.dual();
  }
  return out;
}

GridWavefunction shear(const GridWavefunction& psi) { return shear_impl(psi, 1); }
GridWavefunction shear_inverse(const GridWavefunction& psi) { return shear_impl(psi, -1); }

double boundary_mass(const GridWavefunction& psi) {
  check_values(psi, "boundary_mass");
  const GridSpec& spec = psi.spec;
  const std::size_t nx = spec.x.points;
  const std::size_t ny = spec.y.points;
  const std::size_t ys = spec.y_size();
  std::vector<bool> y_edge(ys);
  for (std::size_t iy = 0; iy < ys; ++iy) {
    y_edge[iy] = spec.dim == 1 ? in_shell(iy, ny) : (in_shell(iy / ny, ny) || in_shell(iy % ny, ny));
  }
  std::vector<double> rows(spec.x_size(), 0.0);
  parallel_for(
      0, rows.size(),
      [&](std::size_t ix) {
        const bool x_edge =
            spec.dim == 1 ? in_shell(ix, nx) : (in_shell(ix / nx, nx) || in_shell(ix % nx, nx));
        double s = 0.0;
        for (std::size_t iy = 0; iy < ys; ++iy) {
          if (x_edge || y_edge[iy]) s += std::norm(psi.values[ix * ys + iy]);
        }
        rows[ix] = s;
      },
      64);
  double total = 0.0;
  for (double r : rows) total += r;
  return total * spec.x_cell() * spec.y_cell();
}

void write_csv(const GridWavefunction& psi, std::ostream& out) {
  check_values(psi, "write_csv");
  const GridSpec& s = psi.spec;
  out << "# qwalk grid dim=" << s.dim << " x_half_length=" << format_double(s.x.half_length)
      << " x_points=" << s.x.points << " y_half_length=" << format_double(s.y.half_length)
      << " y_points=" << s.y.points << "\n";
  out << "x_index,y_index,re,im\n";
  for (std::size_t ix = 0; ix < s.x_size(); ++ix) {
    for (std::size_t iy = 0; iy < s.y_size(); ++iy) {
      const Complex v = psi.at(ix, iy);
      out << ix << ',' << iy << ',' << format_double(v.real()) << ',' << format_double(v.imag())
          << '\n';
    }
  }
}

GridWavefunction read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("# qwalk grid", 0) != 0) {
    throw std::runtime_error("read_csv: missing '# qwalk grid' description line");
  }
  GridSpec spec;
  std::istringstream desc(line.substr(12));
  std::string token;
  int found = 0;
  while (desc >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "dim") {
      spec.dim = std::stoi(value);
    } else if (key == "x_half_length") {
      spec.x.half_length = std::stod(value);
    } else if (key == "x_points") {
      spec.x.points = std::stoul(value);
    } else if (key == "y_half_length") {
      spec.y.half_length = std::stod(value);
    } else if (key == "y_points") {
      spec.y.points = std::stoul(value);
    } else {
      continue;
    }
    ++found;
  }
  if (found != 5) throw std::runtime_error("read_csv: incomplete grid description");
  GridWavefunction psi = GridWavefunction::zeros(spec);
  std::getline(in, line);  // column header
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string a, b, re, im;
    if (!std::getline(row, a, ',') || !std::getline(row, b, ',') || !std::getline(row, re, ',') ||
        !std::getline(row, im)) {
      throw std::runtime_error("read_csv: malformed row '" + line + "'");
    }
    const std::size_t ix = std::stoul(a);
    const std::size_t iy = std::stoul(b);
    if (ix >= spec.x_size() || iy >= spec.y_size()) {
      throw std::runtime_error("read_csv: index out of range in row '" + line + "'");
    }
    psi.at(ix, iy) = Complex{std::stod(re), std::stod(im)};
    ++rows;
  }
  if (rows == 0) throw std::runtime_error("read_csv: no data rows");
  return psi;
}

}  // namespace qwalk::grid
