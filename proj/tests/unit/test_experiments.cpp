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


#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>

#include "dlab/bounds.hpp"
#include "dlab/dataset.hpp"
#include "dlab/dense.hpp"
#include "dlab/errors.hpp"
#include "dlab/experiments.hpp"
#include "dlab/report.hpp"
#include "test_support.hpp"

namespace dlab {
namespace {

using std::numbers::ln2;
using std::numbers::pi;
using testing::golden_list;
using testing::golden_value;

TEST(Dataset, ShapeAndLabels) {
  auto d = generate_dataset(3, 17);
  EXPECT_EQ(d.train.size(), 10u);
  EXPECT_EQ(d.test.size(), 100u);
  auto v = target_unitary(3, d.v_params);
  for (const auto* part : {&d.train, &d.test}) {
    for (const auto& s : *part) {
      ASSERT_EQ(s.x.size(), 3u);
      for (double x : s.x) {
        ASSERT_GE(x, 0.0);
        ASSERT_LT(x, 2 * pi);
      }
      ASSERT_LE(std::abs(s.y), 1.0);
      ASSERT_EQ(s.y, target_label(s.x, v));
    }
  }
}

TEST(Dataset, DeterministicAndSerializable) {
  auto a = generate_dataset(2, 5, 4, 6);
  auto b = generate_dataset(2, 5, 4, 6);
  EXPECT_EQ(a.to_json(), b.to_json());
  EXPECT_NE(a.to_json(), generate_dataset(2, 6, 4, 6).to_json());
  auto back = Dataset::from_json(a.to_json());
  EXPECT_EQ(back.to_json(), a.to_json());
  EXPECT_THROW(generate_dataset(0, 1), std::invalid_argument);
}

TEST(Indices, CompressionRatio) {
  const double h = 2.5;
  std::vector<double> zeros(20, 0.0);
  EXPECT_EQ(compute_cr(zeros, h), 1.0);

  // Per-entry budgets: p = 0.01 and 0.1 exceed 20, p = 0.2 and 0.5 do not,
  // p = 0.8 lies outside the budget domain.
  std::vector<double> theta;
  for (int k = 0; k < 8; ++k) theta.push_back(0.01 / h);
  for (int k = 0; k < 4; ++k) theta.push_back(-0.1 / h);
  for (int k = 0; k < 4; ++k) theta.push_back(0.2 / h);
  for (int k = 0; k < 2; ++k) theta.push_back(0.5 / h);
  for (int k = 0; k < 2; ++k) theta.push_back(-0.8 / h);
  EXPECT_DOUBLE_EQ(compute_cr(theta, h), 12.0 / 20.0);

  std::vector<double> big(20, 1.0 / h);
  EXPECT_EQ(compute_cr(big, h), 0.0);
  std::vector<double> empty;
  EXPECT_THROW(compute_cr(empty, h), std::invalid_argument);
}

TEST(Indices, PmaxNmax) {
  std::vector<double> zeros(20, 0.0);
  auto z = compute_pmax_nmax(zeros, 3.0);
  EXPECT_EQ(z.p_max, 0.0);
  EXPECT_FALSE(z.n_max);
  EXPECT_FALSE(z.reason.empty());

  std::vector<double> one{0.0, -0.1 / 3.0, 0.02};
  auto r = compute_pmax_nmax(one, 3.0);
  EXPECT_NEAR(r.p_max, 0.1, 1e-15);
  ASSERT_TRUE(r.n_max);
  EXPECT_NEAR(*r.n_max, 23.35, 0.01);

  std::vector<double> over{0.8 / 3.0};
  EXPECT_FALSE(compute_pmax_nmax(over, 3.0).n_max);
}

TEST(Indices, TfimNormsGrowWithQubits) {
  for (Boundary b : {Boundary::Open, Boundary::Closed}) {
    double prev = 0.0;
    for (int n = 2; n <= 6; ++n) {
      const double norm = operator_norm(tfim_hamiltonian(n, b));
      const std::string key =
          "tfim_norm_" + std::string(to_string(b)) + "_n" + std::to_string(n);
      EXPECT_NEAR(norm, golden_value(key), 1e-10) << key;
      EXPECT_GE(norm, prev);
      prev = norm;
    }
  }
}

TEST(Statistics, LinearFit) {
  std::vector<double> xs{0, 1, 2, 3}, ys{1, 3, 5, 7};
  auto f = linear_fit(xs, ys);
  EXPECT_NEAR(f.slope, 2.0, 1e-14);
  EXPECT_NEAR(f.intercept, 1.0, 1e-14);
  EXPECT_NEAR(f.r_squared, 1.0, 1e-14);

  std::vector<double> x3{0, 1, 2}, y3{0, 1, 0};
  auto g = linear_fit(x3, y3);
  EXPECT_NEAR(g.slope, 0.0, 1e-15);
  EXPECT_NEAR(g.intercept, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(g.r_squared, 0.0, 1e-15);

  std::vector<double> c{4, 4, 4};
  auto h = linear_fit(x3, c);
  EXPECT_EQ(h.slope, 0.0);
  EXPECT_EQ(h.r_squared, 1.0);

  std::vector<double> one{1}, same{2, 2};
  EXPECT_THROW(linear_fit(one, one), std::invalid_argument);
  EXPECT_THROW(linear_fit(same, same), std::invalid_argument);
}

TEST(Statistics, TTest) {
  auto a = golden_list("ttest_a");
  auto b = golden_list("ttest_b");
  EXPECT_NEAR(t_test_two_sample(a, b), golden_value("ttest_pooled_p"), 1e-6);
  EXPECT_NEAR(t_test_two_sample(a, b, true), golden_value("ttest_welch_p"), 1e-6);
  EXPECT_NEAR(t_test_two_sample(a, a), 1.0, 1e-12);

  std::vector<double> lo{0.0, 0.1, 0.2, 0.1, 0.05, 0.15, 0.0, 0.2, 0.1, 0.1};
  std::vector<double> hi;
  for (double v : lo) hi.push_back(v + 10.0);
  EXPECT_LT(t_test_two_sample(lo, hi), 1e-6);

  std::vector<double> flat{1, 1, 1}, short_s{1};
  EXPECT_THROW(t_test_two_sample(flat, flat), DomainError);
  EXPECT_THROW(t_test_two_sample(short_s, a), DomainError);
}

TEST(Statistics, SampleStats) {
  std::vector<double> v{1, 2, 3, 4};
  auto s = sample_stats(v);
  EXPECT_EQ(s.count, 4);
  EXPECT_DOUBLE_EQ(s.mean, 2.5);
  EXPECT_NEAR(s.stddev, std::sqrt(5.0 / 3.0), 1e-15);
}

ExperimentConfig quick(int epochs) {
  ExperimentConfig c;
  c.train.epochs = epochs;
  return c;
}

TEST(RunSingle, RecordInvariants) {
  for (Algorithm a : {Algorithm::SPS, Algorithm::RAN}) {
    auto r = run_single(3, Boundary::Closed, a, 101, 202, quick(40));
    ASSERT_TRUE(r.ok()) << r.status;
    EXPECT_EQ(r.theta_star.size(), 20u);
    EXPECT_EQ(r.gap_rmse, r.test_rmse - r.train_rmse);
    EXPECT_EQ(r.gap_mse, r.test_mse - r.train_mse);
    EXPECT_EQ(r.dim_g, dla_dimension(tfim_generators(3, Boundary::Closed)));
    const auto h = tfim_hamiltonian(3, Boundary::Closed);
    EXPECT_EQ(r.cr, compute_cr(r.theta_star, h));
    auto pn = compute_pmax_nmax(r.theta_star, h);
    EXPECT_EQ(r.p_max, pn.p_max);
    EXPECT_EQ(r.n_max, pn.n_max);
    EXPECT_GE(r.cr, 0.0);
    EXPECT_LE(r.cr, 1.0);
    EXPECT_EQ(r.n_max.has_value(), r.p_max > 0 && r.p_max < ln2);
  }
}

TEST(RunSingle, GoldenRegression) {
  auto r = run_single(2, Boundary::Open, Algorithm::SPS, 1234, 5678, quick(200));
  std::vector<ExperimentRecord> recs{r};
  const std::string got = records_to_csv(recs) + thetas_to_csv(recs);
  const std::string path =
      std::string(DLAB_FIXTURE_DIR) + "/regression_n2_open_sps.csv";
  if (std::getenv("DLAB_REGEN_FIXTURES") != nullptr) {
    write_atomic(path, got);
    GTEST_SKIP() << "fixture regenerated";
  }
  EXPECT_EQ(got, read_file(path));
}

TEST(Sweep, CardinalityAndDeterminism) {
  SweepSpec spec;
  spec.n_list = {2};
  spec.n_datasets = 1;
  spec.config = quick(1);
  auto a = run_sweep(spec);
  EXPECT_EQ(a.records.size(), 4u);
  spec.threads = 1;
  auto b = run_sweep(spec);
  EXPECT_EQ(records_to_csv(a.records), records_to_csv(b.records));
  EXPECT_EQ(summary_to_json(a.summary), summary_to_json(b.summary));
}

TEST(Sweep, SummaryShape) {
  SweepSpec spec;
  spec.n_list = {2, 3};
  spec.n_datasets = 3;
  spec.master_seed = 9;
  spec.config = quick(10);
  auto res = run_sweep(spec);
  EXPECT_EQ(res.records.size(), 2u * 2 * 2 * 3);
  EXPECT_EQ(res.summary.fits.size(), 4u);
  EXPECT_EQ(res.summary.groups.size(), 8u);
  EXPECT_EQ(res.summary.total_runs, 24);
  // Every (boundary, algorithm) group at a given n sees the same datasets.
  for (const auto& r : res.records) {
    bool found = false;
    for (int i = 0; i < spec.n_datasets; ++i)
      found |= r.dataset_seed == spec.dataset_seed(r.n, i);
    EXPECT_TRUE(found);
  }
  // Positive-gap filtering is aggregation only.
  int negatives = 0;
  for (const auto& r : res.records) negatives += r.gap_rmse <= 0 ? 1 : 0;
  auto back = records_from_csv(records_to_csv(res.records));
  int back_neg = 0;
  for (const auto& r : back) back_neg += r.gap_rmse <= 0 ? 1 : 0;
  EXPECT_EQ(negatives, back_neg);
}

TEST(Sweep, EmptyGridRejected) {
  SweepSpec spec;
  spec.n_list = {};
  EXPECT_THROW(run_sweep(spec), std::invalid_argument);
}

TEST(Persistence, RecordsRoundTripAndRecompute) {
  SweepSpec spec;
  spec.n_list = {2, 3};
  spec.n_datasets = 2;
  spec.config = quick(15);
  auto res = run_sweep(spec);
  const std::string rc = records_to_csv(res.records);
  const std::string tc = thetas_to_csv(res.records);
  auto back = records_from_csv("# header line\n" + rc, tc);
  ASSERT_EQ(back.size(), res.records.size());
  EXPECT_EQ(records_to_csv(back), rc);
  for (const auto& r : back) {
    const auto h = tfim_hamiltonian(r.n, r.boundary);
    EXPECT_EQ(r.cr, compute_cr(r.theta_star, h));
    auto pn = compute_pmax_nmax(r.theta_star, h);
    EXPECT_EQ(r.p_max, pn.p_max);
    EXPECT_EQ(r.n_max, pn.n_max);
  }
  EXPECT_THROW(records_from_csv("a,b\n1,2\n"), std::invalid_argument);
}

}  // namespace
}  // namespace dlab
