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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dlab/dataset.hpp"
#include "dlab/dla.hpp"
#include "dlab/training.hpp"

namespace dlab {

// ---------------------------------------------------------------------------
// Per-parameter budget indices

/// Fraction of parameters whose p_k = |theta_k| ||H||_op admits the budget
/// N_t < 2/((2 - e^p) p) + 1, with N_t = theta.size(). p_k = 0 counts as
/// satisfied; p_k >= ln 2 counts as violated.
double compute_cr(std::span<const double> theta, double h_norm);
double compute_cr(std::span<const double> theta, const PauliSum& h);

struct PmaxNmax {
  double p_max = 0.0;
  /// Empty when p_max is 0 or >= ln 2.
  std::optional<double> n_max;
  std::string reason;
};

PmaxNmax compute_pmax_nmax(std::span<const double> theta, double h_norm);
PmaxNmax compute_pmax_nmax(std::span<const double> theta, const PauliSum& h);

// ---------------------------------------------------------------------------
// Statistics

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares. Requires at least two distinct x values.
LinearFit linear_fit(std::span<const double> xs, std::span<const double> ys);

/// Two-sided p-value of the two-sample t-test: pooled-variance Student by
/// default, Welch when `welch` is set. Throws DomainError for samples
/// smaller than 2 or zero variance.
double t_test_two_sample(std::span<const double> a, std::span<const double> b,
                         bool welch = false);

struct SampleStats {
  int count = 0;
  double mean = 0.0;
  /// Sample standard deviation (n - 1); 0 below two points.
  double stddev = 0.0;
};

SampleStats sample_stats(std::span<const double> values);

// ---------------------------------------------------------------------------
// Experiment runs

struct ExperimentConfig {
  TrainConfig train;
  int layers = 2;
  int reps = 10;
  int m_train = kDefaultTrainSize;
  int m_test = kDefaultTestSize;
  /// Clamp parameters to theta_max(H) during training.
  bool clip_to_theta_max = false;
};

struct ExperimentRecord {
  int n = 0;
  Boundary boundary = Boundary::Open;
  Algorithm algorithm = Algorithm::SPS;
  std::uint64_t dataset_seed = 0;
  std::uint64_t train_seed = 0;
  int dim_g = 0;
  std::vector<double> theta_star;
  double train_rmse = 0.0;
  double test_rmse = 0.0;
  double gap_rmse = 0.0;
  double train_mse = 0.0;
  double test_mse = 0.0;
  double gap_mse = 0.0;
  double cr = 0.0;
  double p_max = 0.0;
  std::optional<double> n_max;
  /// "ok", or "failed: <reason>" for a diverged run.
  std::string status = "ok";

  bool ok() const { return status == "ok"; }
};

/// Builds the L x K TFIM ansatz, trains on a fresh dataset and scores it.
/// `dim_g` is taken from the caller so one closure serves many runs; pass a
/// negative value to compute it here.
ExperimentRecord run_single(int n, Boundary boundary, Algorithm algorithm,
                            std::uint64_t dataset_seed,
                            std::uint64_t train_seed,
                            const ExperimentConfig& config, int dim_g = -1);

/// Same as run_single on an existing dataset.
ExperimentRecord run_on_dataset(const Dataset& data, Boundary boundary,
                                Algorithm algorithm, std::uint64_t train_seed,
                                const ExperimentConfig& config, int dim_g = -1);

/// splitmix64 finalizer, used to derive per-run seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

struct SweepSpec {
  std::vector<int> n_list = {2, 3, 4, 5, 6};
  std::vector<Boundary> boundaries = {Boundary::Open, Boundary::Closed};
  std::vector<Algorithm> algorithms = {Algorithm::SPS, Algorithm::RAN};
  int n_datasets = 20;
  std::uint64_t master_seed = 0;
  ExperimentConfig config;
  /// 0 selects std::thread::hardware_concurrency().
  int threads = 0;
  bool welch = false;

  /// Dataset seeds depend on (master, n, index) so every condition at a
  /// given n sees the same datasets.
  std::uint64_t dataset_seed(int n, int index) const;
  std::uint64_t train_seed(int n, Boundary b, Algorithm a, int index) const;
};

struct GroupStats {
  int n = 0;
  Boundary boundary = Boundary::Open;
  Algorithm algorithm = Algorithm::SPS;
  int dim_g = 0;
  int runs = 0;
  int failed = 0;
  SampleStats train_rmse;
  SampleStats test_rmse;
  SampleStats gap_rmse;
  SampleStats gap_mse;
  /// Only strictly positive RMSE gaps.
  SampleStats positive_gap;
  SampleStats cr;
  SampleStats p_max;
  SampleStats n_max;
};

struct GroupFit {
  Boundary boundary = Boundary::Open;
  Algorithm algorithm = Algorithm::SPS;
  /// Per-n means of positive gaps.
  std::optional<LinearFit> mean_fit;
  /// Every positive gap as its own point.
  std::optional<LinearFit> per_run_fit;
  std::vector<double> ns;
  std::vector<double> mean_positive_gaps;
};

struct TTestEntry {
  std::string metric;
  int n = 0;
  std::string group_a;
  std::string group_b;
  std::optional<double> p_value;
  std::string reason;
};

struct SweepSummary {
  std::vector<GroupStats> groups;
  std::vector<GroupFit> fits;
  std::vector<TTestEntry> t_tests;
  int total_runs = 0;
  int failed_runs = 0;
};

struct SweepResult {
  std::vector<ExperimentRecord> records;
  SweepSummary summary;
};

/// Aggregation over records in their stored order; raw records are never
/// filtered, positive-gap selection happens only inside the statistics.
SweepSummary summarize(std::span<const ExperimentRecord> records,
                       bool welch = false);

/// Runs every (n, boundary, algorithm, dataset) tuple, in parallel when
/// threads allow. Output order is fixed: n, boundary, algorithm, dataset.
SweepResult run_sweep(const SweepSpec& spec);

// ---------------------------------------------------------------------------
// Persistence

/// Column line of records.csv.
inline constexpr std::string_view kRecordsHeader =
    "n,boundary,algo,dataset_seed,train_seed,dim_g,train_rmse,test_rmse,"
    "gap_rmse,gap_mse,cr,p_max,n_max,status";

/// CSV rows (with header line, no provenance). Reals use shortest round-trip
/// form; n_max is empty when inapplicable; failed rows leave metrics empty.
std::string records_to_csv(std::span<const ExperimentRecord> records);
/// theta.csv: run key columns followed by theta_0..theta_{N_t-1}.
std::string thetas_to_csv(std::span<const ExperimentRecord> records);

/// Inverse of records_to_csv (+ thetas_to_csv when given). Lines starting
/// with '#' are skipped.
std::vector<ExperimentRecord> records_from_csv(std::string_view records_csv,
                                               std::string_view thetas_csv = {});

std::string summary_to_json(const SweepSummary& summary, int indent = 2);

}  // namespace dlab
