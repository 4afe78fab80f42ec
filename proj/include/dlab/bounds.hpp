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
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "dlab/pauli.hpp"

namespace dlab {

/// A quantity carried in log space; `value` is set when exp(log_value) is
/// finite in double precision.
struct LogValue {
  double log_value = 0.0;
  std::optional<double> value;
};

struct BoundInputs {
  std::int64_t m = 1;        ///< training-set size
  std::int64_t n_t = 1;      ///< trainable gate count
  std::int64_t dim_g = 1;    ///< DLA dimension
  double n_eigen = 1.0;      ///< eigenvalue count of the observable, 2^n
  double o_norm = 1.0;       ///< ||O||_op
  double c = 1.0;            ///< loss-range constant
  double delta = 0.05;       ///< confidence parameter
  double radius = std::numbers::pi;

  /// N = 2^n_qubits.
  static BoundInputs for_qubits(std::int64_t m, std::int64_t n_t,
                                std::int64_t dim_g, int n_qubits,
                                double o_norm = 1.0, double c = 1.0,
                                double delta = 0.05);

  /// Throws DomainError on the first violated constraint.
  void validate() const;

  /// 4 * radius * (N_t - 1) * sqrt(N) * ||O||_op.
  double dudley_scale() const;
};

struct BoundReport {
  double D = 0.0;
  double alpha = 0.0;
  /// alpha ln alpha + (1 + D) ln(1 + D) - (alpha + D) ln(alpha + D)
  double dudley_term = 0.0;
  /// 4 alpha + 12/sqrt(M) sqrt(N_t dim_g) dudley_term
  double rademacher_bound = 0.0;
  double gap_bound = 0.0;
};

/// (1 + 2 radius / eps)^dim_g.
LogValue ball_covering_bound(std::int64_t dim_g, double radius, double eps);

/// (1 + D / eps)^(N_t dim_g), D = inputs.dudley_scale().
LogValue hypothesis_covering_bound(const BoundInputs& inputs, double eps);

/// Exact value of the integral of ln(1 + D/e) over e in [alpha, 1].
double dudley_closed_form(double alpha, double D);

/// Uses alpha = 1/sqrt(M). The (1/sqrt(M)) ln(1/sqrt(M)) term is kept as is
/// even though it is negative for M > 1.
BoundReport generalization_bound(const BoundInputs& inputs);

/// 2 / ((2 - e^p) p) + 1 on 0 < p < ln 2; DomainError elsewhere.
double max_trainable_params(double p);

/// 2 / eps + 1.
double max_params_from_epsilon(double eps);

/// (2 - e^p) p on 0 < p < ln 2 (ball radius r = 2p).
double epsilon_max(double p);

/// Half of epsilon_max, the value obtained with radius r = p. Reported
/// alongside epsilon_max because both readings appear in circulation.
double epsilon_max_unit_radius(double p);

struct OptimalBudget {
  double p_star = 0.0;
  double n_star = 0.0;
};

/// Minimizer of max_trainable_params: root of e^p (1 + p) = 2, by bisection.
OptimalBudget optimal_p();

/// ln 2 / ||H||_op.
double theta_max(const PauliSum& h);

struct BudgetPoint {
  double p = 0.0;
  double n_t = 0.0;
};

std::vector<BudgetPoint> nt_curve(std::span<const double> p_grid);

/// `count` evenly spaced points on [lo, hi].
std::vector<double> linspace(double lo, double hi, int count);

}  // namespace dlab
