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

#include "dlab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <boost/math/distributions/students_t.hpp>
#include <charconv>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <numbers>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "dlab/bounds.hpp"
#include "dlab/dense.hpp"
#include "dlab/errors.hpp"
#include "json.hpp"

namespace dlab {

namespace {

constexpr double kLn2 = std::numbers::ln2;

// N_t < N_t*(p) with the limiting conventions at p = 0 and p >= ln 2.
bool within_budget(double p, std::size_t n_t) {
  if (p == 0.0) return true;
  if (p >= kLn2) return false;
  return static_cast<double>(n_t) < max_trainable_params(p);
}

std::string group_label(Boundary b, Algorithm a) {
  return std::string(to_string(a)) + "/" + std::string(to_string(b));
}

}  // namespace

double compute_cr(std::span<const double> theta, double h_norm) {
  if (theta.empty()) throw std::invalid_argument("compute_cr: empty theta");
  std::size_t hits = 0;
  for (double t : theta) hits += within_budget(std::abs(t) * h_norm, theta.size());
  return static_cast<double>(hits) / static_cast<double>(theta.size());
}

double compute_cr(std::span<const double> theta, const PauliSum& h) {
  return compute_cr(theta, operator_norm(h));
}

PmaxNmax compute_pmax_nmax(std::span<const double> theta, double h_norm) {
  if (theta.empty()) throw std::invalid_argument("compute_pmax_nmax: empty theta");
  PmaxNmax out;
  for (double t : theta) out.p_max = std::max(out.p_max, std::abs(t) * h_norm);
  if (out.p_max == 0.0) {
    out.reason = "p_max = 0: budget unbounded";
  } else if (out.p_max >= kLn2) {
    out.reason = "p_max >= ln 2: budget inapplicable";
  } else {
    out.n_max = max_trainable_params(out.p_max);
  }
  return out;
}

PmaxNmax compute_pmax_nmax(std::span<const double> theta, const PauliSum& h) {
  return compute_pmax_nmax(theta, operator_norm(h));
}

LinearFit linear_fit(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("linear_fit: length mismatch");
  if (xs.size() < 2) throw std::invalid_argument("linear_fit: need >= 2 points");
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, ss_tot = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    ss_tot += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("linear_fit: need >= 2 distinct x");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss_res += r * r;
  }
  if (ss_tot == 0.0) {
    fit.r_squared = ss_res == 0.0 ? 1.0 : 0.0;
  } else {
    fit.r_squared = 1.0 - ss_res / ss_tot;
  }
  return fit;
}

SampleStats sample_stats(std::span<const double> values) {
  SampleStats s;
  s.count = static_cast<int>(values.size());
  if (values.empty()) return s;
  for (double v : values) s.mean += v;
  s.mean /= static_cast<double>(values.size());
  if (values.size() >= 2) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return s;
}

double t_test_two_sample(std::span<const double> a, std::span<const double> b,
                         bool welch) {
  if (a.size() < 2 || b.size() < 2) {
    throw DomainError("t-test: each sample needs at least 2 values");
  }
  const auto sa = sample_stats(a);
  const auto sb = sample_stats(b);
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double va = sa.stddev * sa.stddev;
  const double vb = sb.stddev * sb.stddev;

  double se = 0.0;
  double dof = 0.0;
  if (welch) {
    const double qa = va / na;
    const double qb = vb / nb;
    se = std::sqrt(qa + qb);
    dof = (qa + qb) * (qa + qb) /
          (qa * qa / (na - 1.0) + qb * qb / (nb - 1.0));
  } else {
    dof = na + nb - 2.0;
    const double pooled = ((na - 1.0) * va + (nb - 1.0) * vb) / dof;
    se = std::sqrt(pooled * (1.0 / na + 1.0 / nb));
  }
  if (!(se > 0.0)) throw DomainError("t-test: zero pooled variance");
  const double t = (sa.mean - sb.mean) / se;
  const boost::math::students_t dist(dof);
  return std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t))));
}

ExperimentRecord run_on_dataset(const Dataset& data, Boundary boundary,
                                Algorithm algorithm, std::uint64_t train_seed,
                                const ExperimentConfig& config, int dim_g) {
  ExperimentRecord rec;
  rec.n = data.n_qubits;
  rec.boundary = boundary;
  rec.algorithm = algorithm;
  rec.dataset_seed = data.seed;
  rec.train_seed = train_seed;
  rec.dim_g = dim_g >= 0 ? dim_g : dla_dimension(tfim_generators(data.n_qubits, boundary));

  const auto model = QnnModel::tfim(data.n_qubits, boundary, config.layers, config.reps);
  const double h_norm = operator_norm(model.hamiltonian());
  TrainConfig tc = config.train;
  tc.algorithm = algorithm;
  tc.seed = train_seed;
  if (config.clip_to_theta_max) tc.theta_clip = std::numbers::ln2 / h_norm;

  try {
    const auto result = train(model, data, tc);
    rec.theta_star = result.theta_star;
    rec.train_mse = empirical_risk(model, rec.theta_star, data.train);
    rec.test_mse = empirical_risk(model, rec.theta_star, data.test);
    if (!std::isfinite(rec.train_mse) || !std::isfinite(rec.test_mse)) {
      throw NumericalError("non-finite risk after training");
    }
  } catch (const NumericalError& e) {
    rec.status = std::string("failed: ") + e.what();
    return rec;
  }
  rec.train_rmse = std::sqrt(rec.train_mse);
  rec.test_rmse = std::sqrt(rec.test_mse);
  rec.gap_rmse = rec.test_rmse - rec.train_rmse;
  rec.gap_mse = rec.test_mse - rec.train_mse;
  rec.cr = compute_cr(rec.theta_star, h_norm);
  const auto pn = compute_pmax_nmax(rec.theta_star, h_norm);
  rec.p_max = pn.p_max;
  rec.n_max = pn.n_max;
  return rec;
}

ExperimentRecord run_single(int n, Boundary boundary, Algorithm algorithm,
                            std::uint64_t dataset_seed, std::uint64_t train_seed,
                            const ExperimentConfig& config, int dim_g) {
  const auto data = generate_dataset(n, dataset_seed, config.m_train, config.m_test);
  return run_on_dataset(data, boundary, algorithm, train_seed, config, dim_g);
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL + (b << 6) + (b >> 2);
  z ^= b * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SweepSpec::dataset_seed(int n, int index) const {
  return mix_seed(mix_seed(master_seed, static_cast<std::uint64_t>(n)),
                  static_cast<std::uint64_t>(index));
}

std::uint64_t SweepSpec::train_seed(int n, Boundary b, Algorithm a,
                                    int index) const {
  const std::uint64_t cond = static_cast<std::uint64_t>(n) * 4 +
                             (b == Boundary::Closed ? 2 : 0) +
                             (a == Algorithm::RAN ? 1 : 0);
  return mix_seed(mix_seed(master_seed ^ 0x5bd1e995ULL, cond),
                  static_cast<std::uint64_t>(index));
}

SweepSummary summarize(std::span<const ExperimentRecord> records, bool welch) {
  SweepSummary out;
  using Key = std::tuple<int, int, int>;
  std::map<Key, std::vector<const ExperimentRecord*>> by_group;
  for (const auto& r : records) {
    by_group[{r.n, static_cast<int>(r.boundary), static_cast<int>(r.algorithm)}]
        .push_back(&r);
    ++out.total_runs;
    if (!r.ok()) ++out.failed_runs;
  }

  for (const auto& [key, recs] : by_group) {
    GroupStats g;
    g.n = std::get<0>(key);
    g.boundary = static_cast<Boundary>(std::get<1>(key));
    g.algorithm = static_cast<Algorithm>(std::get<2>(key));
    g.runs = static_cast<int>(recs.size());
    std::vector<double> tr, te, gap, gmse, pos, cr, pm, nm;
    for (const auto* r : recs) {
      g.dim_g = r->dim_g;
      if (!r->ok()) {
        ++g.failed;
        continue;
      }
      tr.push_back(r->train_rmse);
      te.push_back(r->test_rmse);
      gap.push_back(r->gap_rmse);
      gmse.push_back(r->gap_mse);
      if (r->gap_rmse > 0.0) pos.push_back(r->gap_rmse);
      cr.push_back(r->cr);
      pm.push_back(r->p_max);
      if (r->n_max) nm.push_back(*r->n_max);
    }
    g.train_rmse = sample_stats(tr);
    g.test_rmse = sample_stats(te);
    g.gap_rmse = sample_stats(gap);
    g.gap_mse = sample_stats(gmse);
    g.positive_gap = sample_stats(pos);
    g.cr = sample_stats(cr);
    g.p_max = sample_stats(pm);
    g.n_max = sample_stats(nm);
    out.groups.push_back(g);
  }

  // Gap-vs-n fits per (boundary, algorithm).
  std::set<std::pair<int, int>> conditions;
  for (const auto& g : out.groups) {
    conditions.insert({static_cast<int>(g.boundary), static_cast<int>(g.algorithm)});
  }
  for (const auto& [b, a] : conditions) {
    GroupFit fit;
    fit.boundary = static_cast<Boundary>(b);
    fit.algorithm = static_cast<Algorithm>(a);
    for (const auto& g : out.groups) {
      if (g.boundary == fit.boundary && g.algorithm == fit.algorithm &&
          g.positive_gap.count > 0) {
        fit.ns.push_back(g.n);
        fit.mean_positive_gaps.push_back(g.positive_gap.mean);
      }
    }
    if (std::set<double>(fit.ns.begin(), fit.ns.end()).size() >= 2) {
      fit.mean_fit = linear_fit(fit.ns, fit.mean_positive_gaps);
    }
    std::vector<double> xs, ys;
    for (const auto& r : records) {
      if (r.ok() && r.boundary == fit.boundary && r.algorithm == fit.algorithm &&
          r.gap_rmse > 0.0) {
        xs.push_back(r.n);
        ys.push_back(r.gap_rmse);
      }
    }
    if (std::set<double>(xs.begin(), xs.end()).size() >= 2) {
      fit.per_run_fit = linear_fit(xs, ys);
    }
    out.fits.push_back(std::move(fit));
  }

  // Pairwise t-tests among the condition groups at each n.
  struct Metric {
    const char* name;
    double ExperimentRecord::*field;
  };
  const Metric metrics[] = {{"train_rmse", &ExperimentRecord::train_rmse},
                            {"test_rmse", &ExperimentRecord::test_rmse},
                            {"gap_rmse", &ExperimentRecord::gap_rmse}};
  std::map<int, std::vector<Key>> keys_by_n;
  for (const auto& [key, recs] : by_group) keys_by_n[std::get<0>(key)].push_back(key);
  for (const auto& metric : metrics) {
    for (const auto& [n, keys] : keys_by_n) {
      for (std::size_t i = 0; i < keys.size(); ++i) {
        for (std::size_t j = i + 1; j < keys.size(); ++j) {
          auto values = [&](const Key& k) {
            std::vector<double> v;
            for (const auto* r : by_group.at(k)) {
              if (r->ok()) v.push_back(r->*(metric.field));
            }
            return v;
          };
          TTestEntry e;
          e.metric = metric.name;
          e.n = n;
          e.group_a = group_label(static_cast<Boundary>(std::get<1>(keys[i])),
                                  static_cast<Algorithm>(std::get<2>(keys[i])));
          e.group_b = group_label(static_cast<Boundary>(std::get<1>(keys[j])),
                                  static_cast<Algorithm>(std::get<2>(keys[j])));
          try {
            e.p_value = t_test_two_sample(values(keys[i]), values(keys[j]), welch);
          } catch (const DomainError& err) {
            e.reason = err.what();
          }
          out.t_tests.push_back(std::move(e));
        }
      }
    }
  }
  return out;
}

SweepResult run_sweep(const SweepSpec& spec) {
  if (spec.n_list.empty() || spec.boundaries.empty() || spec.algorithms.empty() ||
      spec.n_datasets < 1) {
    throw std::invalid_argument("run_sweep: empty grid");
  }
  struct Task {
    int n;
    Boundary boundary;
    Algorithm algorithm;
    int index;
  };
  std::vector<Task> tasks;
  for (int n : spec.n_list) {
    for (auto b : spec.boundaries) {
      for (auto a : spec.algorithms) {
        for (int d = 0; d < spec.n_datasets; ++d) tasks.push_back({n, b, a, d});
      }
    }
  }

  // One closure per (n, boundary), computed up front.
  std::map<std::pair<int, Boundary>, int> dims;
  for (int n : spec.n_list) {
    for (auto b : spec.boundaries) dims[{n, b}] = dla_dimension(tfim_generators(n, b));
  }

  SweepResult out;
  out.records.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto& t = tasks[i];
      try {
        out.records[i] = run_single(
            t.n, t.boundary, t.algorithm, spec.dataset_seed(t.n, t.index),
            spec.train_seed(t.n, t.boundary, t.algorithm, t.index), spec.config,
            dims.at({t.n, t.boundary}));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  unsigned threads = spec.threads > 0 ? static_cast<unsigned>(spec.threads)
                                      : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(tasks.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  out.summary = summarize(out.records, spec.welch);
  return out;
}

// ---------------------------------------------------------------------------
// Persistence

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class T>
T parse_number(std::string_view s, const char* what) {
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument(std::string("csv: bad ") + what + " '" +
                                std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> data_lines(std::string_view text) {
  std::vector<std::string_view> out;
  for (auto line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    out.push_back(line);
  }
  return out;
}

std::string run_key(const ExperimentRecord& r) {
  return std::to_string(r.n) + "," + std::string(to_string(r.boundary)) + "," +
         std::string(to_string(r.algorithm)) + "," + std::to_string(r.dataset_seed) +
         "," + std::to_string(r.train_seed);
}

}  // namespace

std::string records_to_csv(std::span<const ExperimentRecord> records) {
  std::string out(kRecordsHeader);
  out += '\n';
  for (const auto& r : records) {
    out += run_key(r);
    out += ',' + std::to_string(r.dim_g);
    if (r.ok()) {
      for (double v : {r.train_rmse, r.test_rmse, r.gap_rmse, r.gap_mse, r.cr, r.p_max}) {
        out += ',' + format_double(v);
      }
      out += ',' + (r.n_max ? format_double(*r.n_max) : std::string());
    } else {
      out += ",,,,,,,";
    }
    out += ',' + r.status + '\n';
  }
  return out;
}

std::string thetas_to_csv(std::span<const ExperimentRecord> records) {
  std::size_t width = 0;
  for (const auto& r : records) width = std::max(width, r.theta_star.size());
  std::string out = "n,boundary,algo,dataset_seed,train_seed";
  for (std::size_t k = 0; k < width; ++k) out += ",theta_" + std::to_string(k);
  out += '\n';
  for (const auto& r : records) {
    out += run_key(r);
    for (std::size_t k = 0; k < width; ++k) {
      out += ',';
      if (k < r.theta_star.size()) out += format_double(r.theta_star[k]);
    }
    out += '\n';
  }
  return out;
}

std::vector<ExperimentRecord> records_from_csv(std::string_view records_csv,
                                               std::string_view thetas_csv) {
  const auto lines = data_lines(records_csv);
  if (lines.empty() || lines.front() != kRecordsHeader) {
    throw std::invalid_argument("records csv: missing or unexpected header");
  }
  std::vector<ExperimentRecord> out;
  std::map<std::string, std::size_t> index;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto f = split(lines[li], ',');
    if (f.size() != 14) throw std::invalid_argument("records csv: expected 14 columns");
    ExperimentRecord r;
    r.n = parse_number<int>(f[0], "n");
    r.boundary = parse_boundary(f[1]);
    r.algorithm = parse_algorithm(f[2]);
    r.dataset_seed = parse_number<std::uint64_t>(f[3], "dataset_seed");
    r.train_seed = parse_number<std::uint64_t>(f[4], "train_seed");
    r.dim_g = parse_number<int>(f[5], "dim_g");
    r.status = std::string(f[13]);
    if (r.ok()) {
      r.train_rmse = parse_number<double>(f[6], "train_rmse");
      r.test_rmse = parse_number<double>(f[7], "test_rmse");
      r.gap_rmse = parse_number<double>(f[8], "gap_rmse");
      r.gap_mse = parse_number<double>(f[9], "gap_mse");
      r.cr = parse_number<double>(f[10], "cr");
      r.p_max = parse_number<double>(f[11], "p_max");
      if (!f[12].empty()) r.n_max = parse_number<double>(f[12], "n_max");
    }
    index[run_key(r)] = out.size();
    out.push_back(std::move(r));
  }
  if (!thetas_csv.empty()) {
    const auto tl = data_lines(thetas_csv);
    for (std::size_t li = 1; li < tl.size(); ++li) {
      const auto f = split(tl[li], ',');
      if (f.size() < 5) throw std::invalid_argument("theta csv: short row");
      std::string key;
      for (int k = 0; k < 5; ++k) key += (k ? "," : "") + std::string(f[k]);
      const auto it = index.find(key);
      if (it == index.end()) throw std::invalid_argument("theta csv: unknown run " + key);
      auto& theta = out[it->second].theta_star;
      for (std::size_t k = 5; k < f.size(); ++k) {
        if (!f[k].empty()) theta.push_back(parse_number<double>(f[k], "theta"));
      }
    }
  }
  return out;
}

std::string summary_to_json(const SweepSummary& summary, int indent) {
  using nlohmann::json;
  auto stats = [](const SampleStats& s) {
    return json{{"count", s.count}, {"mean", s.mean}, {"std", s.stddev}};
  };
  auto fit_json = [](const std::optional<LinearFit>& f) -> json {
    if (!f) return nullptr;
    return {{"slope", f->slope}, {"intercept", f->intercept}, {"r_squared", f->r_squared}};
  };
  json doc;
  doc["total_runs"] = summary.total_runs;
  doc["failed_runs"] = summary.failed_runs;
  json groups = json::array();
  for (const auto& g : summary.groups) {
    groups.push_back({{"n", g.n},
                      {"boundary", to_string(g.boundary)},
                      {"algo", to_string(g.algorithm)},
                      {"dim_g", g.dim_g},
                      {"runs", g.runs},
                      {"failed", g.failed},
                      {"train_rmse", stats(g.train_rmse)},
                      {"test_rmse", stats(g.test_rmse)},
                      {"gap_rmse", stats(g.gap_rmse)},
                      {"gap_mse", stats(g.gap_mse)},
                      {"positive_gap_rmse", stats(g.positive_gap)},
                      {"cr", stats(g.cr)},
                      {"p_max", stats(g.p_max)},
                      {"n_max", stats(g.n_max)}});
  }
  doc["groups"] = std::move(groups);
  json fits = json::array();
  for (const auto& f : summary.fits) {
    fits.push_back({{"boundary", to_string(f.boundary)},
                    {"algo", to_string(f.algorithm)},
                    {"n", f.ns},
                    {"mean_positive_gap", f.mean_positive_gaps},
                    {"mean_fit", fit_json(f.mean_fit)},
                    {"per_run_fit", fit_json(f.per_run_fit)}});
  }
  doc["gap_fits"] = std::move(fits);
  json tests = json::array();
  for (const auto& t : summary.t_tests) {
    json jt{{"metric", t.metric}, {"n", t.n}, {"a", t.group_a}, {"b", t.group_b}};
    jt["p_value"] = t.p_value ? json(*t.p_value) : json(nullptr);
    if (!t.reason.empty()) jt["reason"] = t.reason;
    tests.push_back(std::move(jt));
  }
  doc["t_tests"] = std::move(tests);
  return doc.dump(indent) + "\n";
}

}  // namespace dlab
