// Copyright 2026 The dlab Authors
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
#include <string_view>
#include <vector>

#include "json.hpp"

namespace dlab {

/// Stamp written into every artifact: tool version, config hash, seed.
struct Provenance {
  std::string config_hash;
  std::uint64_t seed = 0;

  /// "# dlab <version> config=<hash> seed=<seed>"
  std::string csv_line() const;
  nlohmann::json to_json() const;
  std::string xml_comment() const;
};

/// Writes to a sibling temp file and renames it into place.
void write_atomic(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

/// Minimal deterministic SVG line/point chart.
struct PlotSeries {
  std::string label;
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<double> errors;  ///< symmetric error bars; empty for none
  bool line = true;
  bool dashed = false;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
  std::vector<std::string> notes;  ///< printed under the title
  /// Optional highlighted point.
  bool has_marker = false;
  double marker_x = 0.0;
  double marker_y = 0.0;
  std::string marker_label;
};

std::string render_svg(const PlotSpec& spec, const Provenance& prov);

struct ReportResult {
  std::vector<std::filesystem::path> written;
  std::vector<std::string> missing;  ///< required inputs that were absent
  std::vector<std::string> messages;
};

/**
 * Renders every figure family from a sweep directory into out_dir: one SVG
 * and the CSV behind it per family. Reads records.csv from in_dir. When
 * inputs are missing nothing is written and `missing` lists all of them;
 * an empty record set writes nothing and leaves a message.
 */
ReportResult render_reports(const std::filesystem::path& in_dir,
                            const std::filesystem::path& out_dir,
                            const Provenance& prov);

/// N_t(p) curve CSV (p,n_t) plus its SVG, minimum marked.
ReportResult render_nt_curve(const std::filesystem::path& out_dir,
                             const Provenance& prov, double p_lo = 0.1,
                             double p_hi = 0.69, int points = 60);

}  // namespace dlab
