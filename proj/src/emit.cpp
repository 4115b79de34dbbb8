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

#include "qwalk/emit.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace qwalk::emit {
namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      throw std::runtime_error(path.parent_path().string() + ": cannot create directory: " +
                               ec.message());
    }
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

void write_header(std::ostream& out, const HeaderFields& header) {
  out << "#";
  for (const auto& [k, v] : header) out << ' ' << k << '=' << v;
  out << '\n';
}

Json optional_number(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_density_csv(const std::filesystem::path& path, const DensityOnGrid& density,
                       const HeaderFields& header) {
  auto out = open_for_write(path);
  write_header(out, header);
  out << (density.dim == 1 ? "x,value\n" : "x1,x2,value\n");
  for (std::size_t i = 0; i < density.size(); ++i) {
    const Vec2 p = density.point(i);
    out << format_double(p[0]) << ',';
    if (density.dim == 2) out << format_double(p[1]) << ',';
    out << format_double(density.values[i]) << '\n';
  }
  finish(out, path);
}

void write_measure_csv(const std::filesystem::path& path, const EmpiricalMeasure& measure,
                       const HeaderFields& header) {
  auto out = open_for_write(path);
  write_header(out, header);
  out << (measure.dim == 1 ? "x,weight\n" : "x1,x2,weight\n");
  for (std::size_t i = 0; i < measure.size(); ++i) {
    const Vec2 p = measure.point(i);
    out << format_double(p[0]) << ',';
    if (measure.dim == 2) out << format_double(p[1]) << ',';
    out << format_double(measure.weights[i]) << '\n';
  }
  finish(out, path);
}

Json report_to_json(const analysis::ConvergenceReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"n", e.n},
                       {"cf_distance", optional_number(e.cf)},
                       {"ks_distance", optional_number(e.ks)},
                       {"levy_distance", optional_number(e.levy)},
                       {"moments", e.moments}});
  }
  return {{"walk", r.walk},
          {"reference", r.has_limit ? "limit" : "previous"},
          {"zeta_window", {{"half_width", r.window.half_width},
                           {"points", r.window.points},
                           {"points_2d", r.window.points_2d}}},
          {"entries", std::move(entries)},
          {"verdicts", {{"cf_nonincreasing", r.cf_nonincreasing},
                        {"cf_strictly_decreasing", r.cf_strictly_decreasing},
                        {"ks_nonincreasing", r.ks_nonincreasing}}},
          {"warnings", r.warnings}};
}

void write_report_csv(const std::filesystem::path& path,
                      const analysis::ConvergenceReport& report) {
  auto out = open_for_write(path);
  out << "n,metric,value\n";
  for (const auto& e : report.entries) {
    auto row = [&](const std::string& metric, double v) {
      out << e.n << ',' << metric << ',' << format_double(v) << '\n';
    };
    if (e.cf) row("cf_distance", *e.cf);
    if (e.ks) row("ks_distance", *e.ks);
    if (e.levy) row("levy_distance", *e.levy);
    for (std::size_t c = 0; c < e.moments.size(); ++c) {
      for (std::size_t k = 0; k < e.moments[c].size(); ++k) {
        row("m" + std::to_string(k + 1) + "_" + std::to_string(c), e.moments[c][k]);
      }
    }
  }
  finish(out, path);
}

void write_json(const std::filesystem::path& path, const Json& value) {
  auto out = open_for_write(path);
  out << value.dump(2) << '\n';
  finish(out, path);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  auto out = open_for_write(path);
  out << text;
  finish(out, path);
}

}  // namespace qwalk::emit
