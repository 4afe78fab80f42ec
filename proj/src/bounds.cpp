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

#include "dlab/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "dlab/dense.hpp"
#include "dlab/errors.hpp"

namespace dlab {

namespace {

constexpr double kLn2 = std::numbers::ln2;

LogValue make_log_value(double log_value) {
  LogValue out{log_value, std::nullopt};
  if (log_value < std::log(std::numeric_limits<double>::max())) {
    out.value = std::exp(log_value);
  }
  return out;
}

void require_budget_domain(double p, const char* what) {
  if (!(p > 0.0 && p < kLn2)) {
    throw DomainError(std::string(what) + ": p must lie in (0, ln 2), got " +
                      std::to_string(p));
  }
}

// x ln x with the continuous extension 0 at x = 0.
double xlogx(double x) { return x == 0.0 ? 0.0 : x * std::log(x); }

}  // namespace

BoundInputs BoundInputs::for_qubits(std::int64_t m, std::int64_t n_t,
                                    std::int64_t dim_g, int n_qubits,
                                    double o_norm, double c, double delta) {
  BoundInputs in;
  in.m = m;
  in.n_t = n_t;
  in.dim_g = dim_g;
  in.n_eigen = std::ldexp(1.0, n_qubits);
  in.o_norm = o_norm;
  in.c = c;
  in.delta = delta;
  return in;
}

void BoundInputs::validate() const {
  if (m < 1) throw DomainError("M must be >= 1");
  if (n_t < 1) throw DomainError("N_t must be >= 1");
  if (dim_g < 1) throw DomainError("dim(g) must be >= 1");
  if (!(n_eigen >= 1.0)) throw DomainError("N must be >= 1");
  if (!(o_norm >= 0.0)) throw DomainError("||O||_op must be >= 0");
  if (!(c > 0.0)) throw DomainError("C must be > 0");
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("delta must lie in (0, 1)");
  if (!(radius > 0.0)) throw DomainError("radius must be > 0");
}

double BoundInputs::dudley_scale() const {
  return 4.0 * radius * static_cast<double>(n_t - 1) * std::sqrt(n_eigen) *
         o_norm;
}

LogValue ball_covering_bound(std::int64_t dim_g, double radius, double eps) {
  if (!(eps > 0.0)) throw DomainError("ball_covering_bound: eps must be > 0");
  if (!(radius > 0.0)) throw DomainError("ball_covering_bound: radius must be > 0");
  if (dim_g < 1) throw DomainError("ball_covering_bound: dim(g) must be >= 1");
  return make_log_value(static_cast<double>(dim_g) *
                        std::log1p(2.0 * radius / eps));
}

LogValue hypothesis_covering_bound(const BoundInputs& inputs, double eps) {
  inputs.validate();
  if (!(eps > 0.0)) {
    throw DomainError("hypothesis_covering_bound: eps must be > 0");
  }
  const double exponent =
      static_cast<double>(inputs.n_t) * static_cast<double>(inputs.dim_g);
  return make_log_value(exponent * std::log1p(inputs.dudley_scale() / eps));
}

double dudley_closed_form(double alpha, double D) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("dudley_closed_form: alpha must lie in (0, 1]");
  }
  if (!(D >= 0.0)) throw DomainError("dudley_closed_form: D must be >= 0");
  return xlogx(alpha) + xlogx(1.0 + D) - xlogx(alpha + D);
}

BoundReport generalization_bound(const BoundInputs& inputs) {
  inputs.validate();
  const double m = static_cast<double>(inputs.m);
  const double root_m = std::sqrt(m);
  const double complexity = std::sqrt(static_cast<double>(inputs.n_t) *
                                      static_cast<double>(inputs.dim_g));
  BoundReport r;
  r.D = inputs.dudley_scale();
  r.alpha = 1.0 / root_m;
  r.dudley_term = dudley_closed_form(r.alpha, r.D);
  r.rademacher_bound =
      4.0 * r.alpha + 12.0 / root_m * complexity * r.dudley_term;
  const double confidence =
      3.0 * inputs.c * std::sqrt(std::log(2.0 / inputs.delta) / (2.0 * m));
  r.gap_bound = 2.0 * r.rademacher_bound + confidence;
  return r;
}

double max_trainable_params(double p) {
  require_budget_domain(p, "max_trainable_params");
  return 2.0 / ((2.0 - std::exp(p)) * p) + 1.0;
}

double max_params_from_epsilon(double eps) {
  if (!(eps > 0.0)) throw DomainError("max_params_from_epsilon: eps must be > 0");
  return 2.0 / eps + 1.0;
}

double epsilon_max(double p) {
  require_budget_domain(p, "epsilon_max");
  return (2.0 - std::exp(p)) * p;
}

double epsilon_max_unit_radius(double p) { return 0.5 * epsilon_max(p); }

OptimalBudget optimal_p() {
  // g(p) = e^p (1 + p) - 2 is increasing, negative at 0 and positive at ln 2.
  double lo = 1e-6;
  double hi = kLn2 - 1e-6;
  auto g = [](double p) { return std::exp(p) * (1.0 + p) - 2.0; };
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  const double p = 0.5 * (lo + hi);
  return {p, max_trainable_params(p)};
}

double theta_max(const PauliSum& h) {
  const double norm = operator_norm(h);
  if (!(norm > 0.0)) throw DomainError("theta_max: zero operator");
  return kLn2 / norm;
}

std::vector<BudgetPoint> nt_curve(std::span<const double> p_grid) {
  std::vector<BudgetPoint> out;
  out.reserve(p_grid.size());
  for (double p : p_grid) out.push_back({p, max_trainable_params(p)});
  return out;
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> out;
  if (count <= 0) return out;
  if (count == 1) return {lo};
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out.push_back(lo + (hi - lo) * static_cast<double>(i) / (count - 1));
  }
  return out;
}

}  // namespace dlab
