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

#include "qwalk/limits_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qwalk/parallel.hpp"

namespace qwalk::analysis {
namespace {

struct Atoms {
  int dim = 1;
  std::vector<Vec2> points;
  std::vector<double> weights;
};

Atoms atoms_of(const Measure& m) {
  Atoms a;
  a.dim = measure_dim(m);
  if (const auto* g = std::get_if<DensityOnGrid>(&m)) {
    const double cell = g->cell_volume();
    a.points.reserve(g->size());
    for (std::size_t i = 0; i < g->size(); ++i) {
      a.points.push_back(g->point(i));
      a.weights.push_back(g->values[i] * cell);
    }
  } else {
    const auto& e = std::get<EmpiricalMeasure>(m);
    for (std::size_t i = 0; i < e.size(); ++i) {
      a.points.push_back(e.point(i));
      a.weights.push_back(e.weights[i]);
    }
  }
  return a;
}

void require_same_dim(const Measure& a, const Measure& b) {
  if (measure_dim(a) != measure_dim(b)) {
    throw std::invalid_argument("measures have different dimensions");
  }
}

/// Right-continuous step CDF of a marginal.
struct StepCdf {
  std::vector<double> points;
  std::vector<double> cumulative;

  explicit StepCdf(const Marginal& m) : points(m.points), cumulative(m.weights.size()) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.weights.size(); ++i) {
      s += m.weights[i];
      cumulative[i] = s;
    }
  }
  double operator()(double t) const {
    const auto it = std::upper_bound(points.begin(), points.end(), t);
    return it == points.begin() ? 0.0 : cumulative[static_cast<std::size_t>(it - points.begin()) - 1];
  }
  double left_limit(double t) const {
    const auto it = std::lower_bound(points.begin(), points.end(), t);
    return it == points.begin() ? 0.0 : cumulative[static_cast<std::size_t>(it - points.begin()) - 1];
  }
};

double ks_marginal(const Marginal& ma, const Marginal& mb) {
  const StepCdf fa(ma);
  const StepCdf fb(mb);
  double d = 0.0;
  // Both CDFs are constant between jumps, so the jumps suffice.
  for (double t : fa.points) d = std::max(d, std::abs(fa(t) - fb(t)));
  for (double t : fb.points) d = std::max(d, std::abs(fa(t) - fb(t)));
  return d;
}

// G(x) <= F(x + eps) + eps for all x; the left side only jumps at G's atoms
// and the right side is nondecreasing, so G's atoms suffice.
bool levy_dominated(const StepCdf& g, const StepCdf& f, double eps) {
  for (std::size_t i = 0; i < g.points.size(); ++i) {
    if (g.cumulative[i] > f(g.points[i] + eps) + eps + 1e-15) return false;
  }
  return true;
}

double levy_marginal(const Marginal& ma, const Marginal& mb) {
  const StepCdf fa(ma);
  const StepCdf fb(mb);
  auto ok = [&](double eps) { return levy_dominated(fa, fb, eps) && levy_dominated(fb, fa, eps); };
  double lo = 0.0;
  double hi = 1.0;
  if (ok(lo)) return 0.0;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (ok(mid) ? hi : lo) = mid;
  }
  return hi;
}

bool strictly_below(std::optional<double> a, std::optional<double> b) {
  return a && b && *a < *b;
}

}  // namespace

std::vector<Vec2> zeta_grid(const CfWindow& window, int dim) {
  if (!(window.half_width > 0.0)) throw std::invalid_argument("CfWindow: half_width must be > 0");
  const std::size_t n = dim == 1 ? window.points : window.points_2d;
  if (n < 2) throw std::invalid_argument("CfWindow: need at least 2 points");
  std::vector<double> axis(n);
  for (std::size_t i = 0; i < n; ++i) {
    axis[i] = -window.half_width + 2.0 * window.half_width * static_cast<double>(i) /
                                       static_cast<double>(n - 1);
  }
  std::vector<Vec2> out;
  if (dim == 1) {
    for (double z : axis) out.push_back({z, 0.0});
  } else if (dim == 2) {
    for (double z0 : axis) {
      for (double z1 : axis) out.push_back({z0, z1});
    }
  } else {
    throw std::invalid_argument("zeta_grid: dim must be 1 or 2");
  }
  return out;
}

std::vector<Complex> characteristic_function(const Measure& m, std::span<const Vec2> zetas) {
  const Atoms a = atoms_of(m);
  std::vector<Complex> phi(zetas.size());
  parallel_for(
      0, zetas.size(),
      [&](std::size_t k) {
        const Vec2 z = zetas[k];
        double re = 0.0;
        double im = 0.0;
        for (std::size_t i = 0; i < a.points.size(); ++i) {
          const double w = a.weights[i];
          if (w == 0.0) continue;
          const double arg = z[0] * a.points[i][0] + z[1] * a.points[i][1];
          re += w * std::cos(arg);
          im += w * std::sin(arg);
        }
        phi[k] = {re, im};
      },
      1);
  return phi;
}

double cf_distance(const Measure& a, const Measure& b, const CfWindow& window) {
  require_same_dim(a, b);
  const auto zetas = zeta_grid(window, measure_dim(a));
  const auto pa = characteristic_function(a, zetas);
  const auto pb = characteristic_function(b, zetas);
  double d = 0.0;
  for (std::size_t k = 0; k < zetas.size(); ++k) d = std::max(d, std::abs(pa[k] - pb[k]));
  return d;
}

double cf_standard_error(Complex phi, std::size_t samples) {
  if (samples == 0) throw std::invalid_argument("cf_standard_error: samples must be >= 1");
  return std::sqrt(std::max(0.0, 1.0 - std::norm(phi)) / static_cast<double>(samples));
}

double ks_distance(const Measure& a, const Measure& b) {
  require_same_dim(a, b);
  double d = 0.0;
  for (int c = 0; c < measure_dim(a); ++c) d = std::max(d, ks_marginal(marginal(a, c), marginal(b, c)));
  return d;
}

double ks_distance_to_cdf(const Measure& m, const std::function<double(double)>& cdf,
                          int coordinate) {
  const StepCdf f(marginal(m, coordinate));
  double d = 0.0;
  for (std::size_t i = 0; i < f.points.size(); ++i) {
    const double t = f.points[i];
    const double c = cdf(t);
    d = std::max({d, std::abs(f.cumulative[i] - c), std::abs(f.left_limit(t) - c)});
  }
  return d;
}

double levy_distance(const Measure& a, const Measure& b) {
  require_same_dim(a, b);
  double d = 0.0;
  for (int c = 0; c < measure_dim(a); ++c) {
    d = std::max(d, levy_marginal(marginal(a, c), marginal(b, c)));
  }
  return d;
}

std::vector<std::vector<double>> moments(const Measure& m, int max_order) {
  if (max_order < 1 || max_order > 8) throw std::invalid_argument("moments: order must be 1..8");
  const Atoms a = atoms_of(m);
  std::vector<std::vector<double>> out(static_cast<std::size_t>(a.dim),
                                       std::vector<double>(static_cast<std::size_t>(max_order), 0.0));
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    for (std::size_t c = 0; c < out.size(); ++c) {
      double p = 1.0;
      for (auto& mk : out[c]) {
        p *= a.points[i][c];
        mk += a.weights[i] * p;
      }
    }
  }
  return out;
}

ConvergenceReport convergence_sweep(const std::string& walk, std::span<const std::int64_t> ns,
                                    const std::function<SweepSample(std::int64_t)>& run_at,
                                    const std::optional<Measure>& limit, const CfWindow& window,
                                    int max_moment) {
  if (ns.empty()) throw std::invalid_argument("convergence_sweep: n-list is empty");
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] < 1) throw std::invalid_argument("convergence_sweep: n must be >= 1");
    if (i > 0 && ns[i] <= ns[i - 1]) {
      throw std::invalid_argument("convergence_sweep: n-list must be strictly increasing");
    }
  }
  ConvergenceReport r;
  r.walk = walk;
  r.window = window;
  r.has_limit = limit.has_value();
  std::optional<Measure> previous;
  for (std::int64_t n : ns) {
    SweepSample s = run_at(n);
    for (auto& w : s.warnings) r.warnings.push_back("n=" + std::to_string(n) + ": " + w);
    SweepEntry e;
    e.n = n;
    e.moments = moments(s.measure, max_moment);
    const Measure* ref = limit ? &*limit : (previous ? &*previous : nullptr);
    if (ref) {
      e.cf = cf_distance(s.measure, *ref, window);
      e.ks = ks_distance(s.measure, *ref);
      e.levy = levy_distance(s.measure, *ref);
    }
    if (!limit) previous = std::move(s.measure);
    r.entries.push_back(std::move(e));
  }
  for (std::size_t i = 1; i < r.entries.size(); ++i) {
    const auto& a = r.entries[i - 1];
    const auto& b = r.entries[i];
    if (!a.cf || !b.cf) continue;
    if (*b.cf > *a.cf) r.cf_nonincreasing = false;
    if (!strictly_below(b.cf, a.cf)) r.cf_strictly_decreasing = false;
    if (*b.ks > *a.ks) r.ks_nonincreasing = false;
  }
  return r;
}

}  // namespace qwalk::analysis
