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

#include "qwalk/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>

#include "qwalk/birkhoff_walk.hpp"
#include "qwalk/emit.hpp"
#include "qwalk/lattice_walk.hpp"
#include "qwalk/parallel.hpp"
#include "qwalk/plancherel_walk.hpp"
#include "qwalk/rng.hpp"

#ifndef QWALK_VERSION
#define QWALK_VERSION "unknown"
#endif

namespace qwalk::runner {
namespace {

using config::ExperimentConfig;
using emit::HeaderFields;
using emit::Json;
namespace fs = std::filesystem;

/// Stream key separating the limit estimator from the Q_n samples.
constexpr std::uint64_t kLimitStream = 0x6c696d6974ULL;

std::string q_name(std::int64_t n) { return "q_n_" + std::to_string(n); }

struct Context {
  const ExperimentConfig& config;
  fs::path dir;
  RunResult& result;
  Json summary = Json::object();
  Json seeds = Json::object();

  fs::path file(const std::string& name) {
    fs::path p = dir / name;
    result.files.push_back(p);
    return p;
  }
  void warn(std::string w) { result.warnings.push_back(std::move(w)); }
};

double mass_outside(const EmpiricalMeasure& m, double limit) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (std::abs(m.coords[i]) > limit) s += m.weights[i];
  }
  return s;
}

void run_hadamard(Context& ctx) {
  const auto& h = ctx.config.hadamard;
  lattice::LatticeState state;
  if (h.coin == "heads") {
    state = lattice::LatticeState::basis(h.site, lattice::Coin::heads);
  } else if (h.coin == "tails") {
    state = lattice::LatticeState::basis(h.site, lattice::Coin::tails);
  } else {
    state = lattice::LatticeState::localized(h.site, 1.0, lattice::Complex(0.0, 1.0));
  }
  const double edge = 1.0 / std::numbers::sqrt2 + 0.05;
  std::int64_t done = 0;
  Json outside = Json::object();
  auto run_at = [&](std::int64_t n) {
    state = lattice::evolve(std::move(state), n - done);
    done = n;
    const auto dist = lattice::lattice_distribution(state);
    EmpiricalMeasure q = lattice::rescaled_lattice_measure(dist, n);
    emit::write_measure_csv(ctx.file(q_name(n) + ".csv"), q,
                            {{"walk", "hadamard"}, {"n", std::to_string(n)}});
    outside[std::to_string(n)] = mass_outside(q, edge);
    return analysis::SweepSample{std::move(q), {}};
  };
  const auto report = analysis::convergence_sweep("hadamard", ctx.config.n_list, run_at,
                                                  std::nullopt, ctx.config.window);
  emit::write_json(ctx.file("report.json"), emit::report_to_json(report));
  emit::write_report_csv(ctx.file("report.csv"), report);
  ctx.summary = {{"norm", std::sqrt(state.norm_squared())},
                 {"support_edge", edge},
                 {"mass_outside_support", outside}};
}

plancherel::GridWavefunction plancherel_initial(Context& ctx) {
  const auto& p = ctx.config.plancherel;
  plancherel::GridWavefunction psi;
  if (p.form == "grid-file") {
    std::ifstream in(p.grid_file);
    if (!in) throw std::runtime_error(p.grid_file + ": cannot open");
    psi = grid::read_csv(in);
    if (psi.spec.dim != p.dim) throw std::runtime_error(p.grid_file + ": grid dimension differs from grid.dim");
  } else {
    const auto spec = grid::GridSpec::walk(p.dim, p.coin_points, p.x_factor);
    psi = plancherel::GridWavefunction::sample(spec, [&](const Vec2& x, const Vec2& y) {
      auto v = profile_amplitude(p.phi, x[0]) * profile_amplitude(p.chi, y[0]);
      if (p.dim == 2) v *= profile_amplitude(p.phi, x[1]) * profile_amplitude(p.chi, y[1]);
      return v;
    });
  }
  plancherel::require_walk_grid(psi.spec);
  const double norm = psi.norm();
  if (!(norm > 0.0)) throw std::runtime_error("psi0 vanishes on the grid");
  psi.normalize();
  ctx.summary["initial_norm_before_normalization"] = norm;
  return psi;
}

HeaderFields grid_header(const grid::GridSpec& spec, const std::string& n) {
  return {{"walk", "plancherel"},
          {"n", n},
          {"L", emit::format_double(spec.x.half_length)},
          {"N", std::to_string(spec.x.points)},
          {"d", std::to_string(spec.dim)}};
}

void run_plancherel(Context& ctx) {
  const auto psi0 = plancherel_initial(ctx);
  const double initial_boundary = grid::boundary_mass(psi0);
  plancherel::WalkDiagnostics diag;
  diag.record(initial_boundary);

  const DensityOnGrid q_limit = plancherel::limit_density(psi0);
  {
    auto header = grid_header(psi0.spec, "limit");
    header[2] = {"L", emit::format_double(-q_limit.axis.origin)};
    emit::write_density_csv(ctx.file("q_limit.csv"), q_limit, header);
  }

  auto psi = psi0;
  std::int64_t done = 0;
  auto run_at = [&](std::int64_t n) {
    plancherel::WalkDiagnostics step_diag;
    psi = plancherel::evolve(psi, n - done, step_diag);
    done = n;
    diag.record(step_diag.max_boundary_mass);
    const DensityOnGrid q = rescaled_density(plancherel::position_density(psi), n);
    emit::write_density_csv(ctx.file(q_name(n) + ".csv"), q, grid_header(psi.spec, std::to_string(n)));
    analysis::SweepSample s{q, {}};
    if (step_diag.boundary_warning) {
      s.warnings.push_back("boundary mass " + emit::format_double(step_diag.max_boundary_mass) +
                           " exceeds " + emit::format_double(plancherel::kBoundaryMassLimit));
    }
    return s;
  };
  const auto report = analysis::convergence_sweep("plancherel", ctx.config.n_list, run_at,
                                                  Measure{q_limit}, ctx.config.window);
  for (const auto& w : report.warnings) ctx.warn(w);
  if (diag.boundary_warning && report.warnings.empty()) {
    ctx.warn("boundary mass " + emit::format_double(diag.max_boundary_mass) + " exceeds " +
             emit::format_double(plancherel::kBoundaryMassLimit));
  }
  emit::write_json(ctx.file("report.json"), emit::report_to_json(report));
  emit::write_report_csv(ctx.file("report.csv"), report);
  ctx.summary["norm"] = psi.norm();
  ctx.summary["boundary_mass"] = diag.max_boundary_mass;
  ctx.summary["initial_boundary_mass"] = initial_boundary;
  ctx.summary["u4_error"] = plancherel::check_u4_identity(psi0);
}

double profile_extent(const Profile& p) {
  if (const auto* g = std::get_if<GaussianProfile>(&p)) return std::abs(g->center) + 12.0 * g->width;
  const auto& b = std::get<BoxProfile>(p);
  return std::max(std::abs(b.a), std::abs(b.b));
}

double profile_scale(const Profile& p) {
  if (const auto* g = std::get_if<GaussianProfile>(&p)) return g->width;
  const auto& b = std::get<BoxProfile>(p);
  return b.b - b.a;
}

void run_birkhoff(Context& ctx) {
  const auto& b = ctx.config.birkhoff;
  const std::uint64_t seed = *ctx.config.seed;
  const auto sys = config::make_system(b);
  const auto coin = config::make_coin(b, sys->space());
  const birkhoff::ProductState state{b.phi, coin};
  const int dim = sys->step_dim();
  const auto sampler = birkhoff::product_sampler(state, dim);
  const std::uint64_t limit_seed = hash_pair(seed, kLimitStream);
  ctx.seeds["samples"] = seed;
  ctx.seeds["limit"] = limit_seed;

  auto metadata = [&](const std::string& name, std::int64_t n, std::uint64_t s,
                      std::size_t samples) {
    emit::write_json(ctx.file(name + ".json"), {{"system", sys->name()},
                                                {"seed", s},
                                                {"samples", samples},
                                                {"n", n},
                                                {"n_avg", b.n_avg}});
  };

  birkhoff::StabilizationCheck check;
  const EmpiricalMeasure limit =
      birkhoff::limit_pushforward(*sys, coin, b.n_avg, b.limit_samples, limit_seed, &check);
  emit::write_measure_csv(ctx.file("q_limit.csv"), limit,
                          {{"walk", "birkhoff"}, {"system", sys->name()}, {"n_avg", std::to_string(b.n_avg)}});
  metadata("q_limit", 0, limit_seed, b.limit_samples);
  ctx.summary["stable_fraction"] = check.stable_fraction;
  ctx.summary["stabilized"] = check.stabilized;
  if (!check.stabilized) {
    ctx.warn("Birkhoff average not stabilised at n_avg = " + std::to_string(b.n_avg) +
             " (stable fraction " + emit::format_double(check.stable_fraction) + ")");
  }

  const double h_sup = std::max(b.h[0].sup_bound(), b.h.size() > 1 ? b.h[1].sup_bound() : 0.0);
  Json quadrature = Json::array();
  auto run_at = [&](std::int64_t n) {
    EmpiricalMeasure q = birkhoff::sample_rescaled_position(*sys, sampler, n, b.samples, seed);
    emit::write_measure_csv(ctx.file(q_name(n) + ".csv"), q,
                            {{"walk", "birkhoff"}, {"system", sys->name()}, {"n", std::to_string(n)}});
    metadata(q_name(n), n, seed, b.samples);
    analysis::SweepSample s{q, {}};
    if (b.quadrature) {
      const double half = b.x_half_length > 0.0
                              ? b.x_half_length
                              : static_cast<double>(n) * h_sup + profile_extent(b.phi);
      const DensityAxis axis{b.x_points, -half, 2.0 * half / static_cast<double>(b.x_points)};
      if (axis.spacing > 0.25 * profile_scale(b.phi)) {
        s.warnings.push_back("quadrature skipped: walker grid too coarse for n = " + std::to_string(n));
      } else {
        const DensityOnGrid p = birkhoff::pn_quadrature(*sys, state, n, axis, b.omega_cells, seed);
        const DensityOnGrid qq = rescaled_density(p, n);
        emit::write_density_csv(ctx.file("quadrature_n_" + std::to_string(n) + ".csv"), qq,
                                {{"walk", "birkhoff"}, {"n", std::to_string(n)},
                                 {"L", emit::format_double(half)}, {"N", std::to_string(b.x_points)},
                                 {"d", std::to_string(dim)}});
        quadrature.push_back({{"n", n},
                              {"mass", p.total_mass()},
                              {"cf_distance_to_mc", analysis::cf_distance(q, qq, ctx.config.window)}});
      }
    }
    return s;
  };
  const auto report = analysis::convergence_sweep("birkhoff", ctx.config.n_list, run_at,
                                                  Measure{limit}, ctx.config.window);
  for (const auto& w : report.warnings) ctx.warn(w);
  emit::write_json(ctx.file("report.json"), emit::report_to_json(report));
  emit::write_report_csv(ctx.file("report.csv"), report);
  if (b.quadrature) ctx.summary["quadrature"] = quadrature;
}

}  // namespace

RunResult run(const ExperimentConfig& config, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  result.out_dir = options.out_dir ? *options.out_dir : fs::path(config.output_dir);
  Context ctx{config, result.out_dir, result};
  if (config.seed) ctx.seeds["run"] = *config.seed;

  switch (config.walk) {
    case config::WalkKind::hadamard:
      run_hadamard(ctx);
      break;
    case config::WalkKind::plancherel:
      run_plancherel(ctx);
      break;
    case config::WalkKind::birkhoff:
      run_birkhoff(ctx);
      break;
  }
  emit::write_json(ctx.file("summary.json"), ctx.summary);

  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Json manifest = {{"qwalk_version", QWALK_VERSION},
                   {"compiler", __VERSION__},
                   {"walk", config::walk_name(config.walk)},
                   {"config", config::to_text(config)},
                   {"seeds", ctx.seeds},
                   {"threads", thread_count()},
                   {"wall_time_seconds", wall},
                   {"strict", options.strict},
                   {"warnings", result.warnings}};
  Json files = Json::array();
  for (const auto& f : result.files) files.push_back(f.filename().string());
  manifest["files"] = files;
  emit::write_json(ctx.file("manifest.json"), manifest);

  if (options.strict && !result.warnings.empty()) result.exit_code = kExitStrictWarning;
  return result;
}

}  // namespace qwalk::runner
