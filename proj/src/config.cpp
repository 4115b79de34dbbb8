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

#include "qwalk/config.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "qwalk/fft.hpp"

namespace qwalk::config {
namespace {

std::string strip_underscores(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), '_'), s.end());
  return s;
}

template <class T>
std::optional<T> parse_number(const std::string& raw) {
  const std::string s = strip_underscores(raw);
  T v{};
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || first == s.data() + s.size()) {
    return std::nullopt;
  }
  return v;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Typed access to the parsed items; every key read is marked as used so the
/// leftovers can be reported as unknown.
class Reader {
 public:
  explicit Reader(const std::string& text) {
    std::istringstream in(text);
    std::vector<CLI::ConfigItem> items;
    try {
      items = CLI::ConfigTOML().from_config(in);
    } catch (const std::exception& e) {
      errors_.push_back(std::string("syntax: ") + e.what());
      return;
    }
    for (auto& item : items) {
      if (item.name == "--" || item.name == "++" || item.name.empty()) continue;
      std::string key = item.fullname();
      if (key.rfind("default.", 0) == 0) key.erase(0, 8);
      if (!values_.emplace(key, item.inputs).second) {
        errors_.push_back(key + ": duplicate key");
      }
    }
  }

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  bool has_section(const std::string& section) const {
    const std::string prefix = section + ".";
    return std::any_of(values_.begin(), values_.end(),
                       [&](const auto& kv) { return kv.first.rfind(prefix, 0) == 0; });
  }

  template <class T>
  void scalar(const std::string& key, T& out) {
    const auto* raw = single(key);
    if (!raw) return;
    if constexpr (std::is_same_v<T, std::string>) {
      out = *raw;
    } else if constexpr (std::is_same_v<T, bool>) {
      if (*raw == "true") {
        out = true;
      } else if (*raw == "false") {
        out = false;
      } else {
        errors_.push_back(key + ": expected true or false, got '" + *raw + "'");
      }
    } else {
      if (auto v = parse_number<T>(*raw)) {
        out = *v;
      } else {
        errors_.push_back(key + ": expected a number, got '" + *raw + "'");
      }
    }
  }

  template <class T>
  void scalar(const std::string& key, std::optional<T>& out) {
    if (!has(key)) return;
    T v{};
    scalar(key, v);
    out = v;
  }

  template <class T>
  void array(const std::string& key, std::vector<T>& out) {
    auto it = values_.find(key);
    if (it == values_.end()) return;
    used_.insert(key);
    std::vector<T> result;
    for (std::size_t i = 0; i < it->second.size(); ++i) {
      if (it->second[i].empty()) continue;
      if (auto v = parse_number<T>(it->second[i])) {
        result.push_back(*v);
      } else {
        errors_.push_back(key + "[" + std::to_string(i) + "]: expected a number, got '" +
                          it->second[i] + "'");
        return;
      }
    }
    out = std::move(result);
  }

  void error(const std::string& message) { errors_.push_back(message); }

  std::vector<std::string> finish() {
    for (const auto& kv : values_) {
      if (!used_.count(kv.first)) errors_.push_back(kv.first + ": unknown key");
    }
    return std::move(errors_);
  }

 private:
  const std::string* single(const std::string& key) {
    auto it = values_.find(key);
    if (it == values_.end()) return nullptr;
    used_.insert(key);
    if (it->second.size() != 1) {
      errors_.push_back(key + ": expected a single value");
      return nullptr;
    }
    return &it->second.front();
  }

  std::map<std::string, std::vector<std::string>> values_;
  std::set<std::string> used_;
  std::vector<std::string> errors_;
};

Profile read_profile(Reader& r, const std::string& section, const Profile& fallback) {
  std::string kind = std::holds_alternative<BoxProfile>(fallback) ? "box" : "gaussian";
  r.scalar(section + ".kind", kind);
  if (kind == "gaussian") {
    GaussianProfile g = std::holds_alternative<GaussianProfile>(fallback)
                            ? std::get<GaussianProfile>(fallback)
                            : GaussianProfile{};
    r.scalar(section + ".center", g.center);
    r.scalar(section + ".width", g.width);
    r.scalar(section + ".momentum", g.momentum);
    if (!(g.width > 0.0)) r.error(section + ".width: must be > 0");
    return g;
  }
  if (kind == "box") {
    BoxProfile b = std::holds_alternative<BoxProfile>(fallback) ? std::get<BoxProfile>(fallback)
                                                                : BoxProfile{};
    r.scalar(section + ".a", b.a);
    r.scalar(section + ".b", b.b);
    if (!(b.b > b.a)) r.error(section + ": box needs a < b");
    return b;
  }
  r.error(section + ".kind: expected gaussian or box, got '" + kind + "'");
  return fallback;
}

/// Parallel arrays coordinate/frequency/cos/sin (and component when several
/// polynomials share a section) describing trigonometric terms.
struct TermArrays {
  std::vector<int> component;
  std::vector<int> coordinate;
  std::vector<int> frequency;
  std::vector<double> cos;
  std::vector<double> sin;
};

std::optional<TermArrays> read_terms(Reader& r, const std::string& section, bool with_component) {
  TermArrays t;
  if (with_component) r.array(section + ".component", t.component);
  r.array(section + ".coordinate", t.coordinate);
  r.array(section + ".frequency", t.frequency);
  r.array(section + ".cos", t.cos);
  r.array(section + ".sin", t.sin);
  const std::size_t n = t.frequency.size();
  if (t.coordinate.empty()) t.coordinate.assign(n, 0);
  if (with_component && t.component.empty()) t.component.assign(n, 0);
  if (t.cos.empty()) t.cos.assign(n, 0.0);
  if (t.sin.empty()) t.sin.assign(n, 0.0);
  if (t.coordinate.size() != n || t.cos.size() != n || t.sin.size() != n ||
      (with_component && t.component.size() != n)) {
    r.error(section + ": term arrays must have equal lengths");
    return std::nullopt;
  }
  return t;
}

void write_profile(std::ostringstream& out, const std::string& section, const Profile& p) {
  out << "\n[" << section << "]\n";
  if (const auto* g = std::get_if<GaussianProfile>(&p)) {
    out << "kind = \"gaussian\"\ncenter = " << format_double(g->center)
        << "\nwidth = " << format_double(g->width) << "\nmomentum = " << format_double(g->momentum)
        << "\n";
  } else {
    const auto& b = std::get<BoxProfile>(p);
    out << "kind = \"box\"\na = " << format_double(b.a) << "\nb = " << format_double(b.b) << "\n";
  }
}

template <class T, class F>
std::string join(const std::vector<T>& v, F&& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += f(v[i]);
  }
  return s + "]";
}

std::string join_int(const std::vector<int>& v) {
  return join(v, [](int x) { return std::to_string(x); });
}
std::string join_double(const std::vector<double>& v) {
  return join(v, [](double x) { return format_double(x); });
}

}  // namespace

const char* walk_name(WalkKind kind) {
  switch (kind) {
    case WalkKind::hadamard:
      return "hadamard";
    case WalkKind::plancherel:
      return "plancherel";
    case WalkKind::birkhoff:
      return "birkhoff";
  }
  return "?";
}

ConfigError::ConfigError(std::vector<std::string> errors)
    : std::runtime_error([&] {
        std::string s = "invalid config:";
        for (const auto& e : errors) s += "\n  " + e;
        return s;
      }()),
      errors_(std::move(errors)) {}

ExperimentConfig parse_config(const std::string& text) {
  Reader r(text);
  ExperimentConfig c;

  std::string walk;
  r.scalar("walk", walk);
  if (walk == "hadamard") {
    c.walk = WalkKind::hadamard;
  } else if (walk == "plancherel") {
    c.walk = WalkKind::plancherel;
  } else if (walk == "birkhoff") {
    c.walk = WalkKind::birkhoff;
  } else if (walk.empty()) {
    r.error("walk: missing (hadamard, plancherel or birkhoff)");
  } else {
    r.error("walk: unknown walk '" + walk + "'");
  }

  if (!r.has("run.n")) r.error("run.n: missing");
  r.array("run.n", c.n_list);
  for (std::size_t i = 0; i < c.n_list.size(); ++i) {
    if (c.n_list[i] < 1) {
      r.error("run.n[" + std::to_string(i) + "]: must be >= 1, got " + std::to_string(c.n_list[i]));
    } else if (i > 0 && c.n_list[i] <= c.n_list[i - 1]) {
      r.error("run.n[" + std::to_string(i) + "]: n-list must be strictly increasing");
    }
  }
  if (r.has("run.n") && c.n_list.empty()) r.error("run.n: must not be empty");
  r.scalar("run.seed", c.seed);

  r.scalar("analysis.zeta_window", c.window.half_width);
  r.scalar("analysis.zeta_points", c.window.points);
  r.scalar("analysis.zeta_points_2d", c.window.points_2d);
  if (!(c.window.half_width > 0.0)) r.error("analysis.zeta_window: must be > 0");
  if (c.window.points < 2) r.error("analysis.zeta_points: must be >= 2");
  if (c.window.points_2d < 2) r.error("analysis.zeta_points_2d: must be >= 2");

  r.scalar("output.dir", c.output_dir);

  if (c.walk == WalkKind::hadamard && walk == "hadamard") {
    auto& h = c.hadamard;
    r.scalar("initial.site", h.site);
    r.scalar("initial.coin", h.coin);
    if (h.coin != "heads" && h.coin != "tails" && h.coin != "symmetric") {
      r.error("initial.coin: expected heads, tails or symmetric, got '" + h.coin + "'");
    }
  } else if (c.walk == WalkKind::plancherel && walk == "plancherel") {
    auto& p = c.plancherel;
    r.scalar("grid.dim", p.dim);
    r.scalar("grid.coin_points", p.coin_points);
    r.scalar("grid.x_factor", p.x_factor);
    if (p.dim != 1 && p.dim != 2) r.error("grid.dim: must be 1 or 2");
    if (p.coin_points < 8 || !is_power_of_two(p.coin_points)) {
      r.error("grid.coin_points: must be a power of two >= 8");
    }
    if (!is_power_of_two(p.x_factor)) r.error("grid.x_factor: must be a power of two");
    r.scalar("psi0.form", p.form);
    if (p.form == "product") {
      p.phi = read_profile(r, "psi0.phi", p.phi);
      p.chi = read_profile(r, "psi0.chi", p.chi);
    } else if (p.form == "grid-file") {
      r.scalar("psi0.file", p.grid_file);
      if (p.grid_file.empty()) r.error("psi0.file: required for form = grid-file");
    } else {
      r.error("psi0.form: expected product or grid-file, got '" + p.form + "'");
    }
  } else if (c.walk == WalkKind::birkhoff && walk == "birkhoff") {
    auto& b = c.birkhoff;
    if (!c.seed) r.error("run.seed: required for the Monte Carlo estimators of the birkhoff walk");
    r.scalar("system.kind", b.system);
    r.scalar("system.alpha", b.alpha);
    r.scalar("system.alpha_p", b.alpha_p);
    r.scalar("system.alpha_q", b.alpha_q);
    if (b.system == "rotation") {
      if (b.alpha && (b.alpha_p || b.alpha_q)) {
        r.error("system.alpha: give either alpha or alpha_p/alpha_q, not both");
      }
      if (b.alpha_p.has_value() != b.alpha_q.has_value()) {
        r.error("system.alpha_q: alpha_p and alpha_q go together");
      }
      if (b.alpha_q && *b.alpha_q < 1) r.error("system.alpha_q: must be >= 1");
    } else if (b.system == "baker") {
      if (b.alpha || b.alpha_p || b.alpha_q) r.error("system.alpha: not used by the baker map");
    } else {
      r.error("system.kind: expected rotation or baker, got '" + b.system + "'");
    }
    if (r.has_section("system.h")) {
      int dim = 1;
      r.scalar("system.h.dim", dim);
      if (dim != 1 && dim != 2) {
        r.error("system.h.dim: must be 1 or 2");
        dim = 1;
      }
      std::vector<double> constant(static_cast<std::size_t>(dim), 0.0);
      r.array("system.h.constant", constant);
      if (constant.size() != static_cast<std::size_t>(dim)) {
        r.error("system.h.constant: needs one entry per component");
        constant.resize(static_cast<std::size_t>(dim), 0.0);
      }
      std::vector<birkhoff::TrigPolynomial> h(static_cast<std::size_t>(dim));
      for (std::size_t k = 0; k < h.size(); ++k) h[k].constant = constant[k];
      if (auto t = read_terms(r, "system.h", true)) {
        for (std::size_t i = 0; i < t->frequency.size(); ++i) {
          if (t->component[i] < 0 || t->component[i] >= dim) {
            r.error("system.h.component[" + std::to_string(i) + "]: out of range");
            continue;
          }
          h[static_cast<std::size_t>(t->component[i])].terms.push_back(
              {t->coordinate[i], t->frequency[i], t->cos[i], t->sin[i]});
        }
      }
      b.h = std::move(h);
    }
    b.phi = read_profile(r, "psi0.phi", b.phi);
    r.scalar("psi0.chi.kind", b.chi);
    if (b.chi == "trig") {
      b.chi_amplitude = {};
      r.scalar("psi0.chi.constant", b.chi_amplitude.constant);
      if (auto t = read_terms(r, "psi0.chi", false)) {
        for (std::size_t i = 0; i < t->frequency.size(); ++i) {
          b.chi_amplitude.terms.push_back({t->coordinate[i], t->frequency[i], t->cos[i], t->sin[i]});
        }
      }
    } else if (b.chi != "uniform") {
      r.error("psi0.chi.kind: expected uniform or trig, got '" + b.chi + "'");
    }
    r.scalar("run.samples", b.samples);
    if (b.samples < 1) r.error("run.samples: must be >= 1");
    r.scalar("limit.n_avg", b.n_avg);
    r.scalar("limit.samples", b.limit_samples);
    if (b.n_avg < 1) r.error("limit.n_avg: must be >= 1");
    if (b.limit_samples < 1) r.error("limit.samples: must be >= 1");
    r.scalar("quadrature.enabled", b.quadrature);
    r.scalar("quadrature.omega_cells", b.omega_cells);
    r.scalar("quadrature.x_points", b.x_points);
    r.scalar("quadrature.x_half_length", b.x_half_length);
    if (b.omega_cells < 1) r.error("quadrature.omega_cells: must be >= 1");
    if (b.x_points < 2) r.error("quadrature.x_points: must be >= 2");
    if (b.x_half_length < 0.0) r.error("quadrature.x_half_length: must be >= 0");
    try {
      const auto sys = make_system(b);
      make_coin(b, sys->space());
    } catch (const std::exception& e) {
      r.error(std::string("system: ") + e.what());
    }
  }

  auto errors = r.finish();
  if (!errors.empty()) throw ConfigError(std::move(errors));
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({path + ": cannot open"});
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string to_text(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "walk = \"" << walk_name(c.walk) << "\"\n";
  out << "\n[run]\nn = " << join(c.n_list, [](std::int64_t n) { return std::to_string(n); })
      << "\n";
  if (c.seed) out << "seed = " << *c.seed << "\n";
  if (c.walk == WalkKind::birkhoff) out << "samples = " << c.birkhoff.samples << "\n";
  out << "\n[analysis]\nzeta_window = " << format_double(c.window.half_width)
      << "\nzeta_points = " << c.window.points << "\nzeta_points_2d = " << c.window.points_2d
      << "\n";
  out << "\n[output]\ndir = \"" << c.output_dir << "\"\n";
  switch (c.walk) {
    case WalkKind::hadamard:
      out << "\n[initial]\nsite = " << c.hadamard.site << "\ncoin = \"" << c.hadamard.coin
          << "\"\n";
      break;
    case WalkKind::plancherel: {
      const auto& p = c.plancherel;
      out << "\n[grid]\ndim = " << p.dim << "\ncoin_points = " << p.coin_points
          << "\nx_factor = " << p.x_factor << "\n";
      out << "\n[psi0]\nform = \"" << p.form << "\"\n";
      if (p.form == "grid-file") {
        out << "file = \"" << p.grid_file << "\"\n";
      } else {
        write_profile(out, "psi0.phi", p.phi);
        write_profile(out, "psi0.chi", p.chi);
      }
      break;
    }
    case WalkKind::birkhoff: {
      const auto& b = c.birkhoff;
      out << "\n[system]\nkind = \"" << b.system << "\"\n";
      if (b.alpha) out << "alpha = " << format_double(*b.alpha) << "\n";
      if (b.alpha_p) out << "alpha_p = " << *b.alpha_p << "\n";
      if (b.alpha_q) out << "alpha_q = " << *b.alpha_q << "\n";
      TermArrays t;
      std::vector<double> constant;
      for (std::size_t k = 0; k < b.h.size(); ++k) {
        constant.push_back(b.h[k].constant);
        for (const auto& term : b.h[k].terms) {
          t.component.push_back(static_cast<int>(k));
          t.coordinate.push_back(term.coordinate);
          t.frequency.push_back(term.frequency);
          t.cos.push_back(term.cos_coeff);
          t.sin.push_back(term.sin_coeff);
        }
      }
      out << "\n[system.h]\ndim = " << b.h.size() << "\nconstant = " << join_double(constant)
          << "\ncomponent = " << join_int(t.component) << "\ncoordinate = "
          << join_int(t.coordinate) << "\nfrequency = " << join_int(t.frequency)
          << "\ncos = " << join_double(t.cos) << "\nsin = " << join_double(t.sin) << "\n";
      write_profile(out, "psi0.phi", b.phi);
      out << "\n[psi0.chi]\nkind = \"" << b.chi << "\"\n";
      if (b.chi == "trig") {
        TermArrays a;
        for (const auto& term : b.chi_amplitude.terms) {
          a.coordinate.push_back(term.coordinate);
          a.frequency.push_back(term.frequency);
          a.cos.push_back(term.cos_coeff);
          a.sin.push_back(term.sin_coeff);
        }
        out << "constant = " << format_double(b.chi_amplitude.constant)
            << "\ncoordinate = " << join_int(a.coordinate) << "\nfrequency = "
            << join_int(a.frequency) << "\ncos = " << join_double(a.cos)
            << "\nsin = " << join_double(a.sin) << "\n";
      }
      out << "\n[limit]\nn_avg = " << b.n_avg << "\nsamples = " << b.limit_samples << "\n";
      out << "\n[quadrature]\nenabled = " << (b.quadrature ? "true" : "false")
          << "\nomega_cells = " << b.omega_cells << "\nx_points = " << b.x_points
          << "\nx_half_length = " << format_double(b.x_half_length) << "\n";
      break;
    }
  }
  return out.str();
}

std::unique_ptr<birkhoff::DynamicalSystem> make_system(const BirkhoffConfig& b) {
  birkhoff::StepFunction h(b.h);
  if (b.system == "baker") return std::make_unique<birkhoff::BakerMap>(std::move(h));
  if (b.system != "rotation") throw std::invalid_argument("unknown system '" + b.system + "'");
  double alpha = birkhoff::CircleRotation::golden_alpha();
  if (b.alpha) alpha = *b.alpha;
  if (b.alpha_p && b.alpha_q) {
    alpha = static_cast<double>(*b.alpha_p) / static_cast<double>(*b.alpha_q);
  }
  return std::make_unique<birkhoff::CircleRotation>(alpha, std::move(h));
}

birkhoff::CoinDensity make_coin(const BirkhoffConfig& b, birkhoff::Space space) {
  if (b.chi == "trig") return birkhoff::CoinDensity::from_amplitude(space, b.chi_amplitude);
  return birkhoff::CoinDensity::uniform(space);
}

}  // namespace qwalk::config
