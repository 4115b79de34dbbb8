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

#include "qwalk/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "qwalk/birkhoff_walk.hpp"
#include "qwalk/config.hpp"
#include "qwalk/emit.hpp"
#include "qwalk/lattice_walk.hpp"
#include "qwalk/limits_analysis.hpp"
#include "qwalk/parallel.hpp"
#include "qwalk/plancherel_walk.hpp"
#include "qwalk/rng.hpp"
#include "qwalk/runner.hpp"

namespace qwalk::acceptance {
namespace {

namespace fs = std::filesystem;
using birkhoff::CircleRotation;
using birkhoff::BakerMap;
using birkhoff::CoinDensity;
using birkhoff::ProductState;
using birkhoff::StepFunction;
using birkhoff::TrigPolynomial;
using grid::GridSpec;
using grid::GridWavefunction;
using lattice::LatticeState;

// Tolerances, as stated by the criteria.
constexpr double kUnitarityTol = 1e-10;
constexpr int kUnitarityTrials = 100;
constexpr double kU4FinalTol = 1e-6;
constexpr double kLimitMaxAbsTol = 1e-6;
constexpr double kLimitCfFinalTol = 0.02;
constexpr double kChiIndependenceTol = 1e-10;
constexpr double kInvarianceTol = 1e-6;
constexpr double kSecondMomentTol = 1e-3;
constexpr double kArcsineKsTol = 0.01;
constexpr double kMcBand = 3.0;
constexpr double kSupportSlack = 0.05;
constexpr double kSupportMassTol = 0.05;
constexpr double kOracleTol = 1e-10;
constexpr std::size_t kMcSamples = 100000;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << "FAILED " << what << "; ";
    }
  }
  void note(const std::string& s) { detail << s << "; "; }
};

std::complex<double> random_complex(Rng& rng) { return {rng.normal(), rng.normal()}; }

GridWavefunction product_state(const GridSpec& spec, const Profile& phi, const Profile& chi) {
  auto psi = GridWavefunction::sample(spec, [&](const Vec2& x, const Vec2& y) {
    auto v = profile_amplitude(phi, x[0]) * profile_amplitude(chi, y[0]);
    if (spec.dim == 2) v *= profile_amplitude(phi, x[1]) * profile_amplitude(chi, y[1]);
    return v;
  });
  psi.normalize();
  return psi;
}

double max_abs_diff(const DensityOnGrid& a, const DensityOnGrid& b) {
  if (a.values.size() != b.values.size()) return INFINITY;
  double d = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) d = std::max(d, std::abs(a.values[i] - b.values[i]));
  return d;
}

// ---------------------------------------------------------------- criterion 1

double lattice_unitarity(Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < kUnitarityTrials; ++t) {
    LatticeState s;
    const std::size_t width = 1 + rng.next() % 64;
    s.offset = static_cast<std::int64_t>(rng.next() % 21) - 10;
    for (std::size_t k = 0; k < width; ++k) {
      s.amps_h.push_back(random_complex(rng));
      s.amps_t.push_back(random_complex(rng));
    }
    const double scale = 1.0 / std::sqrt(s.norm_squared());
    for (auto& a : s.amps_h) a *= scale;
    for (auto& a : s.amps_t) a *= scale;
    const auto one = lattice::hadamard_step(s);
    const auto many = lattice::evolve(s, 25);
    worst = std::max({worst, std::abs(one.norm_squared() - 1.0), std::abs(many.norm_squared() - 1.0)});
  }
  return worst;
}

double plancherel_unitarity(Rng& rng) {
  const auto spec = GridSpec::walk(1, 64, 2);
  double worst = 0.0;
  for (int t = 0; t < kUnitarityTrials; ++t) {
    auto psi = GridWavefunction::zeros(spec);
    for (auto& v : psi.values) v = random_complex(rng);
    psi.normalize();
    worst = std::max(worst, std::abs(plancherel::plancherel_step(psi).norm() - 1.0));
  }
  return worst;
}

TrigPolynomial random_trig(Rng& rng, int coordinates, double constant) {
  TrigPolynomial p{constant, {}};
  const int terms = 1 + static_cast<int>(rng.next() % 3);
  for (int i = 0; i < terms; ++i) {
    p.terms.push_back({static_cast<int>(rng.next() % static_cast<std::uint64_t>(coordinates)),
                       1 + static_cast<int>(rng.next() % 4), rng.uniform() - 0.5,
                       rng.uniform() - 0.5});
  }
  return p;
}

double birkhoff_unitarity(Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < kUnitarityTrials; ++t) {
    const bool baker = t % 2 == 1;
    const int coords = baker ? 2 : 1;
    const StepFunction h({random_trig(rng, coords, rng.uniform() - 0.5)});
    std::unique_ptr<birkhoff::DynamicalSystem> sys;
    if (baker) {
      sys = std::make_unique<BakerMap>(h);
    } else {
      sys = std::make_unique<CircleRotation>(rng.uniform(), h);
    }
    const CoinDensity coin =
        t % 3 == 0 ? CoinDensity::uniform(sys->space())
                   : CoinDensity::from_amplitude(sys->space(), random_trig(rng, coords, 1.0));
    const double width = 0.5 + rng.uniform();
    const ProductState state{GaussianProfile{rng.uniform() - 0.5, width, 0.0}, coin};
    const auto n = static_cast<std::int64_t>(rng.next() % 65);
    const double half = static_cast<double>(n) * h.components()[0].sup_bound() + 1.0 + 12.0 * width;
    const double spacing = width / 8.0;
    const auto points = static_cast<std::size_t>(std::ceil(2.0 * half / spacing));
    const DensityAxis axis{points, -half, 2.0 * half / static_cast<double>(points)};
    const auto p = birkhoff::pn_quadrature(*sys, state, n, axis, baker ? 32 : 128, rng.next());
    worst = std::max(worst, std::abs(p.total_mass() - 1.0));
  }
  return worst;
}

void criterion_unitarity(Outcome& o) {
  Rng rng(20260101);
  const double lat = lattice_unitarity(rng);
  const double pla = plancherel_unitarity(rng);
  const double bir = birkhoff_unitarity(rng);
  o.note("lattice " + fmt(lat) + ", plancherel " + fmt(pla) + ", birkhoff " + fmt(bir));
  o.require(lat <= kUnitarityTol, "lattice norm");
  o.require(pla <= kUnitarityTol, "plancherel norm");
  o.require(bir <= kUnitarityTol, "birkhoff mass");
}

// ---------------------------------------------------------------- criterion 2

void criterion_u4(Outcome& o) {
  // Self-dual coin axes with N in {128, 256, 512}; the walker axis has twice
  // the points. A wide coin profile makes truncation visible at coarse levels.
  std::vector<double> errors;
  double standard = 0.0;
  for (std::size_t n : {128, 256, 512}) {
    const auto spec = GridSpec::walk(1, n, 2);
    const auto psi = product_state(spec, GaussianProfile{0.0, 1.0, 0.0}, GaussianProfile{0.0, 3.0, 0.0});
    errors.push_back(plancherel::check_u4_identity(psi));
    const auto std_psi = product_state(spec, GaussianProfile{}, GaussianProfile{});
    standard = std::max(standard, plancherel::check_u4_identity(std_psi));
  }
  o.note("errors " + fmt(errors[0]) + " > " + fmt(errors[1]) + " > " + fmt(errors[2]) +
         ", standard gaussian max " + fmt(standard));
  o.require(errors[0] > errors[1] && errors[1] > errors[2], "strictly decreasing");
  o.require(errors[2] < kU4FinalTol, "final error < 1e-6");
}

// ---------------------------------------------------------------- criterion 3

void criterion_plancherel_limit(Outcome& o) {
  const auto coarse = GridSpec::uniform(1, 16.0, 256);
  const auto psi = product_state(coarse, GaussianProfile{}, GaussianProfile{});
  const auto q = plancherel::limit_density(psi);
  double err = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double x = q.axis.coordinate(i);
    err = std::max(err, std::abs(q.values[i] - 2.0 / std::sqrt(std::numbers::pi) * std::exp(-4.0 * x * x)));
  }
  o.note("max |Q - 2/sqrt(pi) exp(-4x^2)| = " + fmt(err));
  o.require(err < kLimitMaxAbsTol, "analytic limit density");

  const auto spec = GridSpec::walk(1, 256, 8);
  const auto psi0 = product_state(spec, GaussianProfile{}, GaussianProfile{});
  const Measure limit = plancherel::limit_density(psi0);
  plancherel::WalkDiagnostics diag;
  auto state = psi0;
  std::int64_t done = 0;
  std::vector<double> cf;
  for (std::int64_t m : {1, 2, 4, 8, 16}) {
    state = plancherel::evolve(state, 4 * m - done, diag);
    done = 4 * m;
    const auto qn = rescaled_density(plancherel::position_density(state), 4 * m);
    cf.push_back(analysis::cf_distance(qn, limit));
  }
  std::string s = "cf(Q_4m, Q) =";
  for (double v : cf) s += " " + fmt(v);
  o.note(s + ", boundary mass " + fmt(diag.max_boundary_mass));
  for (std::size_t i = 1; i < cf.size(); ++i) o.require(cf[i] <= cf[i - 1], "cf nonincreasing");
  o.require(cf.back() < kLimitCfFinalTol, "final cf < 0.02");
  o.require(!diag.boundary_warning, "boundary mass guard");
}

// ---------------------------------------------------------------- criterion 4

void criterion_chi_independence(Outcome& o) {
  const auto spec = GridSpec::uniform(1, 16.0, 256);
  const Profile phi = GaussianProfile{0.3, 0.8, 1.5};
  const auto a = plancherel::limit_density(product_state(spec, phi, GaussianProfile{}));
  const auto b = plancherel::limit_density(product_state(spec, phi, BoxProfile{-2.0, 1.0}));
  const double d = max_abs_diff(a, b);
  o.note("max |Q_gauss - Q_box| = " + fmt(d));
  o.require(d <= kChiIndependenceTol, "chi independence");
}

// ---------------------------------------------------------------- criterion 5

void criterion_invariance(Outcome& o) {
  const auto spec = GridSpec::walk(1, 256, 8);
  const auto psi0 = product_state(spec, GaussianProfile{0.5, 1.2, -0.7}, BoxProfile{-1.0, 2.0});
  const auto q0 = plancherel::limit_density(psi0);
  auto psi = psi0;
  std::string s = "max |Q(U^p psi) - Q(psi)| =";
  for (int p = 1; p <= 4; ++p) {
    psi = plancherel::plancherel_step(psi);
    const double d = max_abs_diff(plancherel::limit_density(psi), q0);
    s += " " + fmt(d);
    o.require(d <= kInvarianceTol, "p = " + std::to_string(p));
  }
  o.note(s);
}

// ---------------------------------------------------------------- criterion 6

EmpiricalMeasure uniform_product_mc(const birkhoff::DynamicalSystem& sys, std::int64_t n,
                                    std::uint64_t seed) {
  const ProductState state{GaussianProfile{}, CoinDensity::uniform(sys.space())};
  return birkhoff::sample_rescaled_position(sys, birkhoff::product_sampler(state, sys.step_dim()),
                                            n, kMcSamples, seed);
}

void criterion_birkhoff_limit(Outcome& o) {
  // (a) constant step: exact point mass.
  {
    const CircleRotation rot(CircleRotation::golden_alpha(), StepFunction::constant({0.3, 0.0}, 1));
    const BakerMap baker(StepFunction::constant({0.3, -0.2}, 2));
    bool exact = true;
    for (std::int64_t n_avg : {1, 10, 100, 10000}) {
      const auto a = birkhoff::limit_pushforward(rot, CoinDensity::uniform(rot.space()), n_avg, 1000, 1);
      const auto b = birkhoff::limit_pushforward(baker, CoinDensity::uniform(baker.space()), n_avg, 1000, 2);
      for (double x : a.coords) exact = exact && x == 0.3;
      for (std::size_t i = 0; i < b.size(); ++i) exact = exact && b.point(i) == Vec2{0.3, -0.2};
    }
    o.note(std::string("(a) constant h point mass ") + (exact ? "exact" : "not exact"));
    o.require(exact, "(a) point mass");
  }
  // (b) irrational rotation, h = cos(2 pi w).
  {
    const CircleRotation rot(CircleRotation::golden_alpha(),
                             StepFunction({TrigPolynomial{0.0, {{0, 1, 1.0, 0.0}}}}));
    const auto limit = birkhoff::limit_pushforward(rot, CoinDensity::uniform(rot.space()), 10000,
                                                   kMcSamples, 61);
    const double m2 = analysis::moments(limit, 2)[0][1];
    std::vector<double> cf;
    for (std::int64_t n : {100, 1000, 10000}) {
      cf.push_back(analysis::cf_distance(uniform_product_mc(rot, n, 62), limit));
    }
    o.note("(b) second moment " + fmt(m2) + ", cf " + fmt(cf[0]) + " > " + fmt(cf[1]) + " > " + fmt(cf[2]));
    o.require(m2 < kSecondMomentTol, "(b) second moment");
    o.require(cf[1] < cf[0] && cf[2] < cf[1], "(b) cf decreasing");
  }
  // (c) rational rotation alpha = 1/2, h = cos(4 pi w): arcsine law.
  {
    const CircleRotation rot(0.5, StepFunction({TrigPolynomial{0.0, {{0, 2, 1.0, 0.0}}}}));
    const auto limit = birkhoff::limit_pushforward(rot, CoinDensity::uniform(rot.space()), 10000,
                                                   kMcSamples, 63);
    const double ks = analysis::ks_distance_to_cdf(limit, [](double t) {
      return std::acos(-std::clamp(t, -1.0, 1.0)) / std::numbers::pi;
    });
    o.note("(c) KS to arcsine " + fmt(ks));
    o.require(ks < kArcsineKsTol, "(c) arcsine KS");
  }
}

// ---------------------------------------------------------------- criterion 7

struct CrossCase {
  std::string name;
  std::unique_ptr<birkhoff::DynamicalSystem> sys;
  ProductState state;
  std::size_t omega_cells;
};

std::vector<CrossCase> cross_cases() {
  std::vector<CrossCase> cases;
  const StepFunction cos1({TrigPolynomial{0.0, {{0, 1, 1.0, 0.0}}}});
  cases.push_back({"rotation golden",
                   std::make_unique<CircleRotation>(CircleRotation::golden_alpha(), cos1),
                   {GaussianProfile{}, CoinDensity::uniform(birkhoff::Space::circle)},
                   1024});
  cases.push_back({"rotation 1/3 trig coin",
                   std::make_unique<CircleRotation>(1.0 / 3.0, cos1),
                   {GaussianProfile{0.3, 1.3, 0.0},
                    CoinDensity::from_amplitude(birkhoff::Space::circle,
                                                TrigPolynomial{1.0, {{0, 1, 0.5, 0.3}}})},
                   1024});
  cases.push_back({"baker",
                   std::make_unique<BakerMap>(StepFunction(
                       {TrigPolynomial{0.2, {{0, 1, 1.0, 0.0}, {1, 1, 0.0, 0.5}}}})),
                   {GaussianProfile{0.0, 0.7, 0.0},
                    CoinDensity::from_amplitude(birkhoff::Space::square,
                                                TrigPolynomial{1.0, {{1, 1, 0.4, 0.0}}})},
                   256});
  return cases;
}

void criterion_cross_validation(Outcome& o) {
  const analysis::CfWindow window;
  const auto zetas = analysis::zeta_grid(window, 1);
  double worst_z = 0.0;
  for (const auto& c : cross_cases()) {
    const int dim = c.sys->step_dim();
    const auto sampler = birkhoff::product_sampler(c.state, dim);
    const double sup = std::max(std::abs(c.sys->step().components()[0].sup_bound()), 1e-12);
    const double scale = std::get<GaussianProfile>(c.state.walker).width;
    const std::size_t nodes = c.sys->space() == birkhoff::Space::square
                                  ? c.omega_cells * c.omega_cells
                                  : c.omega_cells;
    for (std::int64_t n : {1, 4, 16}) {
      const auto mc = birkhoff::sample_rescaled_position(*c.sys, sampler, n, kMcSamples, 71);
      const double half = static_cast<double>(n) * sup + 14.0;
      const auto points = static_cast<std::size_t>(std::ceil(2.0 * half / (scale / 16.0)));
      const DensityAxis axis{points, -half, 2.0 * half / static_cast<double>(points)};
      const auto quad = rescaled_density(
          birkhoff::pn_quadrature(*c.sys, c.state, n, axis, c.omega_cells, 72), n);
      const auto phi_mc = analysis::characteristic_function(mc, zetas);
      const auto phi_q = analysis::characteristic_function(quad, zetas);
      for (std::size_t k = 0; k < zetas.size(); ++k) {
        double var = std::pow(analysis::cf_standard_error(phi_q[k], kMcSamples), 2);
        if (c.sys->expanding()) {
          var += c.state.coin.sup() * std::pow(analysis::cf_standard_error(phi_q[k], nodes), 2);
        }
        const double sigma = std::sqrt(var);
        const double diff = std::abs(phi_mc[k] - phi_q[k]);
        // Round-off floor: phi(0) is a sum of 1e5 weights.
        const double slack = 1e-10;
        if (diff > slack) worst_z = std::max(worst_z, diff / sigma);
        if (diff > kMcBand * sigma + slack) {
          o.require(false, c.name + " n=" + std::to_string(n) + " zeta=" + fmt(zetas[k][0]) +
                               " diff " + fmt(diff) + " > 3 sigma " + fmt(kMcBand * sigma));
          break;
        }
      }
    }
  }
  o.note("largest |phi_mc - phi_quad| / sigma = " + fmt(worst_z));
}

// ---------------------------------------------------------------- criterion 8

/// U = S (I (x) F) as a dense matrix on sites [-radius, radius], built from
/// the basis images of the coin flip and the shift.
std::vector<std::vector<lattice::Complex>> dense_hadamard(int radius) {
  const int sites = 2 * radius + 1;
  const auto dim = static_cast<std::size_t>(2 * sites);
  auto idx = [&](int site, int coin) { return static_cast<std::size_t>(2 * (site + radius) + coin); };
  std::vector<std::vector<lattice::Complex>> u(dim, std::vector<lattice::Complex>(dim, 0.0));
  const double r = 1.0 / std::sqrt(2.0);
  for (int j = -radius + 1; j <= radius - 1; ++j) {
    // |j,H> -> (|j+1,H> + |j-1,T>)/sqrt2 ; |j,T> -> (|j+1,H> - |j-1,T>)/sqrt2
    u[idx(j + 1, 0)][idx(j, 0)] += r;
    u[idx(j - 1, 1)][idx(j, 0)] += r;
    u[idx(j + 1, 0)][idx(j, 1)] += r;
    u[idx(j - 1, 1)][idx(j, 1)] -= r;
  }
  return u;
}

using Matrix = std::vector<std::vector<lattice::Complex>>;

Matrix matmul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<lattice::Complex>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

double lattice_oracle_error() {
  constexpr int radius = 12;
  const Matrix u = dense_hadamard(radius);
  Rng rng(88);
  double worst = 0.0;
  Matrix power = u;
  for (int n = 1; n <= 8; ++n) {
    if (n > 1) power = matmul(u, power);
    for (int trial = 0; trial < 10; ++trial) {
      LatticeState s;
      s.offset = -2;
      for (int k = 0; k < 5; ++k) {
        s.amps_h.push_back(random_complex(rng));
        s.amps_t.push_back(random_complex(rng));
      }
      const double scale = 1.0 / std::sqrt(s.norm_squared());
      std::vector<lattice::Complex> v(power.size(), 0.0);
      for (int k = 0; k < 5; ++k) {
        s.amps_h[static_cast<std::size_t>(k)] *= scale;
        s.amps_t[static_cast<std::size_t>(k)] *= scale;
        v[static_cast<std::size_t>(2 * (k - 2 + radius))] = s.amps_h[static_cast<std::size_t>(k)];
        v[static_cast<std::size_t>(2 * (k - 2 + radius) + 1)] = s.amps_t[static_cast<std::size_t>(k)];
      }
      const auto out = lattice::evolve(s, n);
      for (int j = -radius; j <= radius; ++j) {
        lattice::Complex eh = 0.0;
        lattice::Complex et = 0.0;
        const auto row_h = static_cast<std::size_t>(2 * (j + radius));
        for (std::size_t c = 0; c < v.size(); ++c) {
          eh += power[row_h][c] * v[c];
          et += power[row_h + 1][c] * v[c];
        }
        worst = std::max({worst, std::abs(out.heads(j) - eh), std::abs(out.tails(j) - et)});
      }
    }
  }
  return worst;
}

void criterion_hadamard(Outcome& o) {
  const double edge = 1.0 / std::sqrt(2.0) + kSupportSlack;
  auto outside = [&](std::int64_t n) {
    const auto s = lattice::evolve(LatticeState::basis(0, lattice::Coin::heads), n);
    const auto q = lattice::rescaled_lattice_measure(lattice::lattice_distribution(s), n);
    double m = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (std::abs(q.coords[i]) > edge) m += q.weights[i];
    }
    return m;
  };
  const double m100 = outside(100);
  const double m200 = outside(200);
  const double oracle = lattice_oracle_error();
  o.note("mass outside: n=100 " + fmt(m100) + ", n=200 " + fmt(m200) + "; dense oracle " + fmt(oracle));
  o.require(m200 < kSupportMassTol, "n=200 mass outside");
  o.require(m200 <= m100, "nonincreasing from n=100");
  o.require(oracle <= kOracleTol, "dense matrix oracle");
}

// ---------------------------------------------------------------- criterion 9

const char* kDeterminismConfigs[] = {
    R"(walk = "hadamard"
[run]
n = [25, 50, 100]
)",
    R"(walk = "plancherel"
[run]
n = [4, 8, 16]
[grid]
coin_points = 64
x_factor = 8
)",
    R"(walk = "birkhoff"
[run]
n = [1, 4, 16, 256]
seed = 12345
samples = 20000
[system]
kind = "baker"
[system.h]
constant = [0.1]
coordinate = [0, 1]
frequency = [1, 2]
cos = [1.0, 0.5]
sin = [0.0, 0.25]
[limit]
n_avg = 1000
samples = 20000
[quadrature]
enabled = true
omega_cells = 64
x_points = 1024
)"};

std::map<std::string, std::string> csv_files(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".csv") continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    out[entry.path().filename().string()] = s.str();
  }
  return out;
}

void criterion_determinism(Outcome& o) {
  const fs::path root = fs::temp_directory_path() /
                        ("qwalk-determinism-" + std::to_string(::qwalk::mix64(
                                                    static_cast<std::uint64_t>(std::chrono::steady_clock::now().time_since_epoch().count()))));
  std::size_t compared = 0;
  for (const char* text : kDeterminismConfigs) {
    const auto cfg = config::parse_config(text);
    std::vector<std::map<std::string, std::string>> runs;
    for (std::size_t threads : {1, 4}) {
      ThreadCountGuard guard(threads);
      const fs::path dir = root / (config::walk_name(cfg.walk) + std::string("-") + std::to_string(threads));
      runner::run(cfg, {false, dir});
      runs.push_back(csv_files(dir));
    }
    o.require(!runs[0].empty(), std::string(config::walk_name(cfg.walk)) + " wrote no CSV");
    o.require(runs[0] == runs[1], std::string(config::walk_name(cfg.walk)) + " CSV differs between 1 and 4 threads");
    compared += runs[0].size();
  }
  std::error_code ec;
  fs::remove_all(root, ec);
  o.note(std::to_string(compared) + " CSV files byte-identical at 1 and 4 threads");
}

struct Criterion {
  const char* title;
  std::function<void(Outcome&)> body;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {"unitarity", criterion_unitarity},
      {"U^4 identity sweep", criterion_u4},
      {"plancherel limit", criterion_plancherel_limit},
      {"chi0 independence", criterion_chi_independence},
      {"U^p invariance of the limit", criterion_invariance},
      {"birkhoff limit", criterion_birkhoff_limit},
      {"estimator cross-validation", criterion_cross_validation},
      {"hadamard support", criterion_hadamard},
      {"determinism", criterion_determinism},
  };
  return list;
}

}  // namespace

std::optional<Suite> parse_suite(const std::string& name) {
  if (name == "lattice") return Suite::lattice;
  if (name == "plancherel") return Suite::plancherel;
  if (name == "birkhoff") return Suite::birkhoff;
  if (name == "all") return Suite::all;
  return std::nullopt;
}

std::vector<int> suite_criteria(Suite suite) {
  switch (suite) {
    case Suite::lattice:
      return {1, 8};
    case Suite::plancherel:
      return {1, 2, 3, 4, 5};
    case Suite::birkhoff:
      return {1, 6, 7};
    case Suite::all:
      return {1, 2, 3, 4, 5, 6, 7, 8, 9};
  }
  return {};
}

CriterionResult run_criterion(int id) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("no criterion " + std::to_string(id));
  const auto& c = criteria()[static_cast<std::size_t>(id - 1)];
  CriterionResult r;
  r.id = id;
  r.title = c.title;
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = o.passed;
  r.detail = o.detail.str();
  if (r.detail.size() >= 2) r.detail.resize(r.detail.size() - 2);
  return r;
}

std::string format_result(const CriterionResult& r) {
  char head[96];
  std::snprintf(head, sizeof head, "%s  %d  %-30s (%.1f s): ", r.passed ? "PASS" : "FAIL", r.id,
                r.title.c_str(), r.seconds);
  return head + r.detail;
}

std::vector<CriterionResult> run_suite(Suite suite, std::ostream& out) {
  std::vector<CriterionResult> results;
  for (int id : suite_criteria(suite)) {
    results.push_back(run_criterion(id));
    out << format_result(results.back()) << std::endl;
  }
  return results;
}

}  // namespace qwalk::acceptance
