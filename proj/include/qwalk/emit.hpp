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

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qwalk/limits_analysis.hpp"
#include "qwalk/measure.hpp"

/// File formats. Every CSV number is printed with 17 significant digits.
namespace qwalk::emit {

using Json = nlohmann::ordered_json;
using HeaderFields = std::vector<std::pair<std::string, std::string>>;

std::string format_double(double v);

/// "# k=v k=v ..." then "x,value" (or "x1,x2,value"), one row per grid point.
void write_density_csv(const std::filesystem::path& path, const DensityOnGrid& density,
                       const HeaderFields& header);

/// "# k=v ..." then "x,weight" (or "x1,x2,weight"), one row per atom.
void write_measure_csv(const std::filesystem::path& path, const EmpiricalMeasure& measure,
                       const HeaderFields& header);

Json report_to_json(const analysis::ConvergenceReport& report);
/// Rows "n,metric,value" for cf, ks, levy and the moments m<k>_<coordinate>.
void write_report_csv(const std::filesystem::path& path,
                      const analysis::ConvergenceReport& report);

void write_json(const std::filesystem::path& path, const Json& value);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace qwalk::emit
