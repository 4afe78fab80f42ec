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


#include "dlab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <tuple>

#include "dlab/bounds.hpp"
#include "dlab/experiments.hpp"
#include "dlab/pauli.hpp"

#ifndef DLAB_VERSION
#define DLAB_VERSION "0.0.0"
#endif

namespace dlab {
namespace fs = std::filesystem;

std::string Provenance::csv_line() const {
  return "# dlab " DLAB_VERSION " config=" + config_hash +
         " seed=" + std::to_string(seed);
}

nlohmann::json Provenance::to_json() const {
  return {{"tool", "dlab"},
          {"version", DLAB_VERSION},
          {"config_hash", config_hash},
          {"seed", seed}};
}

std::string Provenance::xml_comment() const {
  return "<!-- dlab " DLAB_VERSION " config=" + config_hash +
         " seed=" + std::to_string(seed) + " -->";
}

void write_atomic(const fs::path& path, std::string_view content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("rename to " + path.string() + ": " +
                             ec.message());
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 420;
constexpr double kLeft = 70;
constexpr double kRight = 170;
constexpr double kTop = 50;
constexpr double kBottom = 50;

const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                               "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(double v, const char* spec = "%.2f") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finish() {
    if (!(lo <= hi)) {
      lo = 0;
      hi = 1;
    }
    if (hi - lo < 1e-12) {
      double pad = std::max(std::abs(lo) * 0.1, 0.5);
      lo -= pad;
      hi += pad;
    } else {
      double pad = (hi - lo) * 0.05;
      lo -= pad;
      hi += pad;
    }
  }
};

}  // namespace

std::string render_svg(const PlotSpec& spec, const Provenance& prov) {
  Range xr, yr;
  for (const auto& s : spec.series) {
    for (std::size_t i = 0; i < s.xs.size(); ++i) {
      xr.add(s.xs[i]);
      double e = i < s.errors.size() ? s.errors[i] : 0.0;
      yr.add(s.ys[i] - e);
      yr.add(s.ys[i] + e);
    }
  }
  if (spec.has_marker) {
    xr.add(spec.marker_x);
    yr.add(spec.marker_y);
  }
  xr.finish();
  yr.finish();
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto py = [&](double y) {
    return kTop + ph - (y - yr.lo) / (yr.hi - yr.lo) * ph;
  };

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << prov.xml_comment() << "\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
    << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
    << kHeight << "\" font-family=\"sans-serif\" font-size=\"11\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<text x=\"" << kLeft << "\" y=\"20\" font-size=\"14\">"
    << escape(spec.title) << "</text>\n";
  for (std::size_t i = 0; i < spec.notes.size(); ++i)
    o << "<text x=\"" << kLeft << "\" y=\"" << 34 + 12 * i
      << "\" fill=\"#444\">" << escape(spec.notes[i]) << "</text>\n";

  // Axes and ticks.
  o << "<g stroke=\"black\" fill=\"none\">\n"
    << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw
    << "\" height=\"" << ph << "\"/>\n</g>\n";
  for (int t = 0; t <= 4; ++t) {
    double xv = xr.lo + (xr.hi - xr.lo) * t / 4.0;
    double yv = yr.lo + (yr.hi - yr.lo) * t / 4.0;
    o << "<line x1=\"" << fmt(px(xv)) << "\" y1=\"" << fmt(kTop + ph)
      << "\" x2=\"" << fmt(px(xv)) << "\" y2=\"" << fmt(kTop + ph + 4)
      << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << fmt(px(xv)) << "\" y=\"" << fmt(kTop + ph + 16)
      << "\" text-anchor=\"middle\">" << fmt(xv, "%.3g") << "</text>\n"
      << "<line x1=\"" << fmt(kLeft - 4) << "\" y1=\"" << fmt(py(yv))
      << "\" x2=\"" << fmt(kLeft) << "\" y2=\"" << fmt(py(yv))
      << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << fmt(kLeft - 6) << "\" y=\"" << fmt(py(yv) + 4)
      << "\" text-anchor=\"end\">" << fmt(yv, "%.3g") << "</text>\n";
  }
  o << "<text x=\"" << fmt(kLeft + pw / 2) << "\" y=\"" << fmt(kHeight - 12)
    << "\" text-anchor=\"middle\">" << escape(spec.x_label) << "</text>\n"
    << "<text x=\"16\" y=\"" << fmt(kTop + ph / 2)
    << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
    << fmt(kTop + ph / 2) << ")\">" << escape(spec.y_label) << "</text>\n";

  for (std::size_t si = 0; si < spec.series.size(); ++si) {
    const auto& s = spec.series[si];
    const char* color = kColors[si % std::size(kColors)];
    if (s.line && s.xs.size() > 1) {
      o << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\""
        << (s.dashed ? " stroke-dasharray=\"5,3\"" : "") << " points=\"";
      for (std::size_t i = 0; i < s.xs.size(); ++i)
        o << (i ? " " : "") << fmt(px(s.xs[i])) << ',' << fmt(py(s.ys[i]));
      o << "\"/>\n";
    }
    for (std::size_t i = 0; i < s.xs.size(); ++i) {
      if (i < s.errors.size() && s.errors[i] > 0) {
        double x = px(s.xs[i]);
        double y0 = py(s.ys[i] - s.errors[i]);
        double y1 = py(s.ys[i] + s.errors[i]);
        o << "<path stroke=\"" << color << "\" d=\"M" << fmt(x) << ' '
          << fmt(y0) << "V" << fmt(y1) << "M" << fmt(x - 3) << ' ' << fmt(y0)
          << "h6M" << fmt(x - 3) << ' ' << fmt(y1) << "h6\"/>\n";
      }
      if (!s.dashed)
        o << "<circle cx=\"" << fmt(px(s.xs[i])) << "\" cy=\""
          << fmt(py(s.ys[i])) << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
    }
    double ly = kTop + 10 + 16 * static_cast<double>(si);
    o << "<line x1=\"" << fmt(kLeft + pw + 10) << "\" y1=\"" << fmt(ly)
      << "\" x2=\"" << fmt(kLeft + pw + 30) << "\" y2=\"" << fmt(ly)
      << "\" stroke=\"" << color << "\" stroke-width=\"2\""
      << (s.dashed ? " stroke-dasharray=\"5,3\"" : "") << "/>\n"
      << "<text x=\"" << fmt(kLeft + pw + 34) << "\" y=\"" << fmt(ly + 4)
      << "\">" << escape(s.label) << "</text>\n";
  }
  if (spec.has_marker) {
    o << "<circle cx=\"" << fmt(px(spec.marker_x)) << "\" cy=\""
      << fmt(py(spec.marker_y))
      << "\" r=\"5\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n"
      << "<text x=\"" << fmt(px(spec.marker_x) + 8) << "\" y=\""
      << fmt(py(spec.marker_y) - 8) << "\">" << escape(spec.marker_label)
      << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

namespace {

std::string num(double v) { return format_double(v); }

std::string group_label(Boundary b, Algorithm a) {
  return std::string(to_string(b)) + "/" + std::string(to_string(a));
}

std::string stat_cells(const SampleStats& s) {
  if (s.count == 0) return ",,0";
  return num(s.mean) + ',' + num(s.stddev) + ',' + std::to_string(s.count);
}

// Groups in (boundary, algorithm) order, each with stats sorted by n.
using GroupKey = std::pair<Boundary, Algorithm>;

std::map<GroupKey, std::vector<const GroupStats*>> by_group(
    const SweepSummary& summary) {
  std::map<GroupKey, std::vector<const GroupStats*>> out;
  for (const auto& g : summary.groups)
    out[{g.boundary, g.algorithm}].push_back(&g);
  for (auto& [k, v] : out)
    std::sort(v.begin(), v.end(),
              [](const GroupStats* a, const GroupStats* b) { return a->n < b->n; });
  return out;
}

PlotSeries stat_series(const std::string& label,
                       const std::vector<const GroupStats*>& groups,
                       SampleStats GroupStats::*field) {
  PlotSeries s;
  s.label = label;
  for (const auto* g : groups) {
    const SampleStats& st = g->*field;
    if (st.count == 0) continue;
    s.xs.push_back(g->n);
    s.ys.push_back(st.mean);
    s.errors.push_back(st.stddev);
  }
  return s;
}

void emit(const fs::path& out_dir, const std::string& stem,
          const std::string& csv_body, const PlotSpec& plot,
          const Provenance& prov, ReportResult& result) {
  auto csv_path = out_dir / (stem + ".csv");
  auto svg_path = out_dir / (stem + ".svg");
  write_atomic(csv_path, prov.csv_line() + "\n" + csv_body);
  write_atomic(svg_path, render_svg(plot, prov));
  result.written.push_back(csv_path);
  result.written.push_back(svg_path);
}

}  // namespace

ReportResult render_nt_curve(const fs::path& out_dir, const Provenance& prov,
                             double p_lo, double p_hi, int points) {
  ReportResult result;
  auto grid = linspace(p_lo, p_hi, points);
  auto curve = nt_curve(grid);
  auto best = optimal_p();
  std::string csv = "p,n_t\n";
  PlotSeries s;
  s.label = "N_t(p)";
  for (const auto& pt : curve) {
    csv += num(pt.p) + ',' + num(pt.n_t) + '\n';
    s.xs.push_back(pt.p);
    s.ys.push_back(pt.n_t);
  }
  PlotSpec plot;
  plot.title = "Trainable-parameter budget N_t versus p";
  plot.x_label = "p";
  plot.y_label = "N_t";
  plot.series.push_back(std::move(s));
  plot.has_marker = true;
  plot.marker_x = best.p_star;
  plot.marker_y = best.n_star;
  plot.marker_label = "min (" + fmt(best.p_star, "%.4f") + ", " +
                      fmt(best.n_star, "%.4f") + ")";
  emit(out_dir, "nt_curve", csv, plot, prov, result);
  return result;
}

ReportResult render_reports(const fs::path& in_dir, const fs::path& out_dir,
                            const Provenance& prov) {
  ReportResult result;
  const fs::path records_path = in_dir / "records.csv";
  if (!fs::is_regular_file(records_path))
    result.missing.push_back(records_path.string());
  if (!result.missing.empty()) return result;

  std::string thetas;
  if (fs::is_regular_file(in_dir / "theta.csv"))
    thetas = read_file(in_dir / "theta.csv");
  auto records = records_from_csv(read_file(records_path), thetas);
  if (records.empty()) {
    result.messages.push_back("no records in " + records_path.string() +
                              "; no figures rendered");
    return result;
  }
  auto summary = summarize(records);
  auto groups = by_group(summary);

  result.written = render_nt_curve(out_dir, prov).written;

  // Generalization gap with fitted lines.
  {
    std::string csv =
        "boundary,algo,n,mean_positive_gap,sd_positive_gap,positive_runs,"
        "mean_gap_rmse,sd_gap_rmse,runs\n";
    std::string fit_csv =
        "boundary,algo,slope,intercept,r_squared,per_run_slope,"
        "per_run_intercept,per_run_r_squared\n";
    PlotSpec plot;
    plot.title = "Generalization gap (positive runs) versus n";
    plot.x_label = "qubits n";
    plot.y_label = "test RMSE - train RMSE";
    for (const auto& [key, gs] : groups) {
      std::string label = group_label(key.first, key.second);
      for (const auto* g : gs)
        csv += std::string(to_string(g->boundary)) + ',' +
               std::string(to_string(g->algorithm)) + ',' +
               std::to_string(g->n) + ',' + stat_cells(g->positive_gap) + ',' +
               stat_cells(g->gap_rmse) + '\n';
      plot.series.push_back(
          stat_series(label, gs, &GroupStats::positive_gap));
      plot.series.back().line = false;
      for (const auto& f : summary.fits) {
        if (f.boundary != key.first || f.algorithm != key.second) continue;
        fit_csv += std::string(to_string(f.boundary)) + ',' +
                   std::string(to_string(f.algorithm));
        if (f.mean_fit)
          fit_csv += ',' + num(f.mean_fit->slope) + ',' +
                     num(f.mean_fit->intercept) + ',' +
                     num(f.mean_fit->r_squared);
        else
          fit_csv += ",,,";
        if (f.per_run_fit)
          fit_csv += ',' + num(f.per_run_fit->slope) + ',' +
                     num(f.per_run_fit->intercept) + ',' +
                     num(f.per_run_fit->r_squared);
        else
          fit_csv += ",,,";
        fit_csv += '\n';
        if (f.mean_fit && !f.ns.empty()) {
          PlotSeries line;
          line.label = label + " fit";
          line.dashed = true;
          for (double n : {f.ns.front(), f.ns.back()}) {
            line.xs.push_back(n);
            line.ys.push_back(f.mean_fit->intercept + f.mean_fit->slope * n);
          }
          plot.series.push_back(std::move(line));
          plot.notes.push_back(label + ": slope " +
                               fmt(f.mean_fit->slope, "%.4g") + ", R^2 " +
                               fmt(f.mean_fit->r_squared, "%.3f"));
        }
      }
    }
    emit(out_dir, "gap_vs_n", csv, plot, prov, result);
    auto fit_path = out_dir / "gap_fit.csv";
    write_atomic(fit_path, prov.csv_line() + "\n" + fit_csv);
    result.written.push_back(fit_path);
  }

  // Train and test RMSE.
  {
    std::string csv =
        "boundary,algo,n,train_mean,train_sd,train_runs,test_mean,test_sd,"
        "test_runs\n";
    PlotSpec plot;
    plot.title = "Train and test RMSE versus n";
    plot.x_label = "qubits n";
    plot.y_label = "RMSE";
    for (const auto& [key, gs] : groups) {
      std::string label = group_label(key.first, key.second);
      for (const auto* g : gs)
        csv += std::string(to_string(g->boundary)) + ',' +
               std::string(to_string(g->algorithm)) + ',' +
               std::to_string(g->n) + ',' + stat_cells(g->train_rmse) + ',' +
               stat_cells(g->test_rmse) + '\n';
      plot.series.push_back(
          stat_series(label + " train", gs, &GroupStats::train_rmse));
      auto test = stat_series(label + " test", gs, &GroupStats::test_rmse);
      test.dashed = true;
      plot.series.push_back(std::move(test));
    }
    emit(out_dir, "rmse_vs_n", csv, plot, prov, result);
  }

  // Compression ratio.
  {
    std::string csv = "boundary,algo,n,cr_mean,cr_sd,runs\n";
    PlotSpec plot;
    plot.title = "Compression ratio versus n";
    plot.x_label = "qubits n";
    plot.y_label = "CR";
    for (const auto& [key, gs] : groups) {
      for (const auto* g : gs)
        csv += std::string(to_string(g->boundary)) + ',' +
               std::string(to_string(g->algorithm)) + ',' +
               std::to_string(g->n) + ',' + stat_cells(g->cr) + '\n';
      plot.series.push_back(stat_series(group_label(key.first, key.second), gs,
                                        &GroupStats::cr));
    }
    emit(out_dir, "cr_vs_n", csv, plot, prov, result);
  }

  // p_max and N_max.
  {
    std::string csv =
        "boundary,algo,n,p_max_mean,p_max_sd,p_max_runs,n_max_mean,n_max_sd,"
        "n_max_runs\n";
    PlotSpec plot;
    plot.title = "p_max and N_max versus n";
    plot.x_label = "qubits n";
    plot.y_label = "p_max (solid), N_max (dashed)";
    for (const auto& [key, gs] : groups) {
      std::string label = group_label(key.first, key.second);
      for (const auto* g : gs)
        csv += std::string(to_string(g->boundary)) + ',' +
               std::string(to_string(g->algorithm)) + ',' +
               std::to_string(g->n) + ',' + stat_cells(g->p_max) + ',' +
               stat_cells(g->n_max) + '\n';
      plot.series.push_back(
          stat_series(label + " p_max", gs, &GroupStats::p_max));
      auto nm = stat_series(label + " N_max", gs, &GroupStats::n_max);
      nm.dashed = true;
      plot.series.push_back(std::move(nm));
    }
    emit(out_dir, "pmax_nmax_vs_n", csv, plot, prov, result);
  }
  return result;
}

}  // namespace dlab
