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


#include "dlab/cli.hpp"

#include <cmath>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "dlab/bounds.hpp"
#include "dlab/dataset.hpp"
#include "dlab/dla.hpp"
#include "dlab/errors.hpp"
#include "dlab/experiments.hpp"
#include "dlab/pauli.hpp"
#include "dlab/simulator.hpp"
#include "dlab/training.hpp"

namespace dlab::cli {
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::int64_t get_int(const RunConfig& c, const std::string& k) {
  return c.params.at(k).get<std::int64_t>();
}
double get_real(const RunConfig& c, const std::string& k) {
  return c.params.at(k).get<double>();
}
std::string get_str(const RunConfig& c, const std::string& k) {
  return c.params.at(k).get<std::string>();
}
bool get_bool(const RunConfig& c, const std::string& k) {
  return c.has(k) && c.params.at(k).get<bool>();
}

// Writes `content` to the path in `key` if set, else to `out`.
void emit(const RunConfig& c, const std::string& key, const std::string& content,
          std::ostream& out) {
  if (c.has(key)) {
    write_atomic(get_str(c, key), content);
    out << "wrote " << get_str(c, key) << "\n";
  } else {
    out << content;
  }
}

std::string with_provenance(const std::string& json_text,
                            const Provenance& prov) {
  json j = json::parse(json_text);
  j["provenance"] = prov.to_json();
  return j.dump(2) + "\n";
}

TrainConfig train_config(const RunConfig& c, Algorithm algo,
                         std::uint64_t seed) {
  TrainConfig t;
  t.algorithm = algo;
  t.epochs = static_cast<int>(get_int(c, "train.epochs"));
  t.seed = seed;
  t.init_low = get_real(c, "train.init_low");
  t.init_high = get_real(c, "train.init_high");
  t.gains.a0 = get_real(c, "train.a0");
  t.gains.c0 = get_real(c, "train.c0");
  t.gains.big_a = get_real(c, "train.big_a");
  t.gains.alpha = get_real(c, "train.alpha");
  t.gains.gamma = get_real(c, "train.gamma");
  t.ran_step = get_real(c, "train.ran_step");
  std::string clip = get_str(c, "train.theta_clip");
  if (clip != "off" && clip != "auto") t.theta_clip = std::stod(clip);
  return t;
}

bool clip_auto(const RunConfig& c) {
  return get_str(c, "train.theta_clip") == "auto";
}

int run_dla(const RunConfig& c, std::ostream& out) {
  GeneratorSet gens;
  std::optional<Boundary> boundary;
  if (c.has("dla.generators")) {
    fs::path path = get_str(c, "dla.generators");
    gens = GeneratorSet::from_text(read_file(path), path.filename().string());
  } else {
    boundary = parse_boundary(get_str(c, "dla.boundary"));
    gens = tfim_generators(static_cast<int>(get_int(c, "dla.n")), *boundary);
  }
  const int max_dim = static_cast<int>(get_int(c, "dla.max_dim"));
  DlaBasis basis = lie_closure(gens, max_dim);
  out << "qubits: " << gens.n_qubits << "\n"
      << "generators: " << gens.generators.size() << "\n"
      << "dim(g) = " << basis.dim << "\n";
  if (basis.truncated)
    out << "warning: closure stopped at the basis cap of " << basis.dim
        << "; the dimension is a lower bound\n";
  if (boundary) {
    const int n = gens.n_qubits;
    const int quoted = tfim_quoted_dimension(n, *boundary);
    out << "model: tfim " << to_string(*boundary) << "\n"
        << "quoted dimension: " << quoted
        << (*boundary == Boundary::Open ? " (n^2)" : " (n)") << "\n"
        << "agreement: " << (quoted == basis.dim ? "yes" : "no") << "\n";
  }
  if (get_bool(c, "dla.oracle")) {
    if (gens.n_qubits > kDenseOracleMaxQubits)
      throw DomainError("dense oracle supports at most " +
                        std::to_string(kDenseOracleMaxQubits) + " qubits");
    const int dense = closure_oracle_dense(gens, max_dim);
    out << "dense oracle dim = " << dense << "\n"
        << "oracle agreement: " << (dense == basis.dim ? "yes" : "no")
        << "\n";
  }
  if (c.has("dla.basis_out")) {
    GeneratorSet bset{gens.n_qubits, basis.basis, "basis"};
    write_atomic(get_str(c, "dla.basis_out"),
                 provenance_for(c).csv_line() + "\n" + bset.to_text());
    out << "wrote " << get_str(c, "dla.basis_out") << "\n";
  }
  return kExitOk;
}

int run_bound_eval(const RunConfig& c, std::ostream& out) {
  BoundInputs in = BoundInputs::for_qubits(
      get_int(c, "bounds.m"), get_int(c, "bounds.nt"),
      get_int(c, "bounds.dimg"), static_cast<int>(get_int(c, "bounds.n_qubits")),
      get_real(c, "bounds.o_norm"), get_real(c, "bounds.c"),
      get_real(c, "bounds.delta"));
  in.radius = get_real(c, "bounds.radius");
  BoundReport r = generalization_bound(in);
  if (get_bool(c, "output.json")) {
    json j = {{"inputs",
               {{"m", in.m},
                {"n_t", in.n_t},
                {"dim_g", in.dim_g},
                {"n_eigen", in.n_eigen},
                {"o_norm", in.o_norm},
                {"c", in.c},
                {"delta", in.delta},
                {"radius", in.radius}}},
              {"report",
               {{"D", r.D},
                {"alpha", r.alpha},
                {"dudley_term", r.dudley_term},
                {"rademacher_bound", r.rademacher_bound},
                {"gap_bound", r.gap_bound}}},
              {"provenance", provenance_for(c).to_json()}};
    out << j.dump(2) << "\n";
  } else {
    out << "D                = " << format_double(r.D) << "\n"
        << "alpha            = " << format_double(r.alpha) << "\n"
        << "dudley_term      = " << format_double(r.dudley_term) << "\n"
        << "rademacher_bound = " << format_double(r.rademacher_bound) << "\n"
        << "gap_bound        = " << format_double(r.gap_bound) << "\n";
  }
  return kExitOk;
}

int run_bound_budget(const RunConfig& c, std::ostream& out,
                     std::ostream& err) {
  const auto best = optimal_p();
  if (c.has("bounds.p")) {
    const double p = get_real(c, "bounds.p");
    const double eps = epsilon_max(p);
    out << "p            = " << format_double(p) << "\n"
        << "N_t bound    = " << format_double(max_trainable_params(p)) << "\n"
        << "epsilon_max  = " << format_double(eps) << "\n";
    err << "warning: epsilon_max(p) = (2 - e^p) p = " << format_double(eps)
        << "; the unit-radius normalization gives half of it, "
        << format_double(epsilon_max_unit_radius(p))
        << ", which is reported for reference only\n";
  } else {
    const double eps = get_real(c, "bounds.eps");
    out << "epsilon      = " << format_double(eps) << "\n"
        << "N_t bound    = " << format_double(max_params_from_epsilon(eps))
        << "\n";
  }
  out << "optimal p    = " << format_double(best.p_star) << "\n"
      << "minimum N_t  = " << format_double(best.n_star) << "\n";
  return kExitOk;
}

int run_bound_curve(const RunConfig& c, std::ostream& out) {
  auto grid = linspace(get_real(c, "bounds.p_lo"), get_real(c, "bounds.p_hi"),
                       static_cast<int>(get_int(c, "bounds.points")));
  std::string csv = provenance_for(c).csv_line() + "\np,n_t\n";
  for (const auto& pt : nt_curve(grid))
    csv += format_double(pt.p) + ',' + format_double(pt.n_t) + '\n';
  emit(c, "run.out", csv, out);
  return kExitOk;
}

int run_data_gen(const RunConfig& c, std::ostream& out) {
  Dataset d = generate_dataset(static_cast<int>(get_int(c, "data.n")),
                               c.seed(),
                               static_cast<int>(get_int(c, "data.m_train")),
                               static_cast<int>(get_int(c, "data.m_test")));
  emit(c, "run.out", with_provenance(d.to_json(), provenance_for(c)), out);
  return kExitOk;
}

int run_train(const RunConfig& c, std::ostream& out) {
  Dataset data;
  if (c.has("data.path")) {
    data = Dataset::from_json(read_file(get_str(c, "data.path")));
    if (c.has("model.n") && get_int(c, "model.n") != data.n_qubits)
      throw DomainError("--n disagrees with the dataset's qubit count");
  } else {
    const std::uint64_t ds =
        c.has("data.seed")
            ? static_cast<std::uint64_t>(get_int(c, "data.seed"))
            : c.seed();
    data = generate_dataset(static_cast<int>(get_int(c, "model.n")), ds,
                            static_cast<int>(get_int(c, "data.m_train")),
                            static_cast<int>(get_int(c, "data.m_test")));
  }
  if (data.train.empty()) throw DomainError("training set is empty");
  const Boundary b = parse_boundary(get_str(c, "model.boundary"));
  const Algorithm algo = parse_algorithm(get_str(c, "train.algo"));
  QnnModel model =
      QnnModel::tfim(data.n_qubits, b, static_cast<int>(get_int(c, "model.layers")),
                     static_cast<int>(get_int(c, "model.reps")));
  TrainConfig tc = train_config(c, algo, c.seed());
  if (clip_auto(c)) tc.theta_clip = theta_max(model.hamiltonian());
  TrainResult r = train(model, data, tc);

  json j = json::parse(r.to_json());
  j["n"] = data.n_qubits;
  j["boundary"] = to_string(b);
  j["algo"] = to_string(algo);
  j["dataset_seed"] = data.seed;
  j["train_seed"] = tc.seed;
  const double train_rmse = std::sqrt(empirical_risk(model, r.theta_star, data.train));
  j["train_rmse"] = train_rmse;
  if (!data.test.empty()) {
    const double test_rmse =
        std::sqrt(empirical_risk(model, r.theta_star, data.test));
    j["test_rmse"] = test_rmse;
    j["gap_rmse"] = test_rmse - train_rmse;
  }
  j["provenance"] = provenance_for(c).to_json();
  emit(c, "run.out", j.dump(2) + "\n", out);
  return kExitOk;
}

int run_sweep_cmd(const RunConfig& c, std::ostream& out) {
  SweepSpec spec;
  spec.n_list.clear();
  for (const auto& v : c.params.at("sweep.n"))
    spec.n_list.push_back(static_cast<int>(v.get<std::int64_t>()));
  spec.boundaries.clear();
  for (const auto& v : c.params.at("sweep.boundaries"))
    spec.boundaries.push_back(parse_boundary(v.get<std::string>()));
  spec.algorithms.clear();
  for (const auto& v : c.params.at("sweep.algos"))
    spec.algorithms.push_back(parse_algorithm(v.get<std::string>()));
  spec.n_datasets = static_cast<int>(get_int(c, "sweep.datasets"));
  spec.master_seed = c.seed();
  spec.threads = static_cast<int>(get_int(c, "sweep.threads"));
  spec.welch = get_bool(c, "sweep.welch");
  spec.config.train = train_config(c, Algorithm::SPS, 0);
  spec.config.layers = static_cast<int>(get_int(c, "model.layers"));
  spec.config.reps = static_cast<int>(get_int(c, "model.reps"));
  spec.config.m_train = static_cast<int>(get_int(c, "data.m_train"));
  spec.config.m_test = static_cast<int>(get_int(c, "data.m_test"));
  spec.config.clip_to_theta_max = clip_auto(c);

  SweepResult res = run_sweep(spec);
  const Provenance prov = provenance_for(c);
  const fs::path dir = c.out_dir();
  const std::string head = prov.csv_line() + "\n";
  write_atomic(dir / "records.csv", head + records_to_csv(res.records));
  write_atomic(dir / "theta.csv", head + thetas_to_csv(res.records));
  write_atomic(dir / "summary.json",
               with_provenance(summary_to_json(res.summary), prov));
  write_atomic(dir / "config.json", c.to_json());

  out << "runs: " << res.summary.total_runs
      << " failed: " << res.summary.failed_runs << "\n";
  for (const auto& f : res.summary.fits) {
    out << to_string(f.boundary) << "/" << to_string(f.algorithm)
        << " gap slope: ";
    if (f.mean_fit)
      out << format_double(f.mean_fit->slope)
          << " R^2: " << format_double(f.mean_fit->r_squared);
    else
      out << "n/a";
    out << "\n";
  }
  out << "wrote records.csv, theta.csv, summary.json, config.json to "
      << dir.string() << "\n";
  return kExitOk;
}

int run_report(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const fs::path out_dir = c.out_dir();
  const fs::path in_dir =
      c.has("report.in") ? fs::path(get_str(c, "report.in")) : out_dir;
  ReportResult r = render_reports(in_dir, out_dir, provenance_for(c));
  if (!r.missing.empty()) {
    json j = {{"error", "missing report inputs"},
              {"kind", "runtime"},
              {"missing", r.missing},
              {"exit_code", kExitRuntime}};
    err << j.dump() << "\n";
    return kExitRuntime;
  }
  for (const auto& m : r.messages) out << m << "\n";
  for (const auto& p : r.written) out << "wrote " << p.string() << "\n";
  return kExitOk;
}

void report_error(std::ostream& err, const std::string& kind,
                  const std::string& what, int code) {
  json j = {{"error", what}, {"kind", kind}, {"exit_code", code}};
  err << j.dump() << "\n";
}

}  // namespace

Provenance provenance_for(const RunConfig& config) {
  return Provenance{config.hash(), config.seed()};
}

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    const std::string& cmd = c.command;
    if (cmd == "dla") return run_dla(c, out);
    if (cmd == "bound eval") return run_bound_eval(c, out);
    if (cmd == "bound budget") return run_bound_budget(c, out, err);
    if (cmd == "bound curve") return run_bound_curve(c, out);
    if (cmd == "data gen") return run_data_gen(c, out);
    if (cmd == "train") return run_train(c, out);
    if (cmd == "sweep") return run_sweep_cmd(c, out);
    if (cmd == "report") return run_report(c, out, err);
    report_error(err, "usage", "unknown command '" + cmd + "'", kExitUsage);
    return kExitUsage;
  } catch (const DomainError& e) {
    report_error(err, "domain", e.what(), kExitDomain);
    return kExitDomain;
  } catch (const CapacityError& e) {
    report_error(err, "domain", e.what(), kExitDomain);
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    report_error(err, "domain", e.what(), kExitDomain);
    return kExitDomain;
  } catch (const std::exception& e) {
    report_error(err, "runtime", e.what(), kExitRuntime);
    return kExitRuntime;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  ParseOutcome parsed = parse_config(args);
  if (!parsed.help.empty()) {
    out << parsed.help;
    return kExitOk;
  }
  if (!parsed.config) {
    json j = {{"error", "invalid arguments"},
              {"kind", parsed.exit_code == kExitDomain ? "domain" : "usage"},
              {"details", parsed.errors},
              {"exit_code", parsed.exit_code}};
    err << j.dump() << "\n";
    return parsed.exit_code;
  }
  for (const auto& note : parsed.config->provenance)
    err << "note: " << note << "\n";
  return dispatch(*parsed.config, out, err);
}

int run_cli(int argc, const char* const* argv) {
  return run_cli(argc, argv, std::cout, std::cerr);
}

}  // namespace dlab::cli
