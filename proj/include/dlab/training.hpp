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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dlab/dataset.hpp"
#include "dlab/simulator.hpp"

namespace dlab {

enum class Algorithm { SPS, RAN };

std::string_view to_string(Algorithm a);
/// Accepts "sps" / "ran" (case-insensitive).
Algorithm parse_algorithm(std::string_view s);

/// Standard SPSA gain schedule: a_k = a0 / (k + 1 + A)^alpha,
/// c_k = c0 / (k + 1)^gamma.
struct SpsaGains {
  double a0 = 0.1;
  double c0 = 0.1;
  double big_a = 20.0;
  double alpha = 0.602;
  double gamma = 0.101;
};

struct TrainConfig {
  Algorithm algorithm = Algorithm::SPS;
  int epochs = 200;
  std::uint64_t seed = 0;
  double init_low = -0.01;
  double init_high = 0.01;
  SpsaGains gains;
  double ran_step = 0.1;
  /// When set, every iterate is clamped to [-clip, clip].
  std::optional<double> theta_clip;

  /// Throws DomainError.
  void validate() const;
};

struct TrainResult {
  std::vector<double> theta_star;
  /// RMSE per epoch, epoch 0 included (epochs + 1 entries).
  std::vector<double> train_loss_trace;
  double final_train_rmse = 0.0;
  std::int64_t evaluations_used = 0;

  std::string to_json() const;
};

/// Mean squared error of a parameter vector.
using Objective = std::function<double(std::span<const double>)>;

double mse(std::span<const double> predictions, std::span<const double> labels);
double rmse(std::span<const double> predictions, std::span<const double> labels);

/**
 * SPSA. theta starts uniform in [init_low, init_high); each epoch draws a
 * Rademacher direction, takes the two-sided difference quotient at c_k and
 * steps by a_k. One extra evaluation per epoch records the trace.
 * Throws NumericalError on a non-finite loss.
 */
TrainResult train_sps(const Objective& loss, int n_params,
                      const TrainConfig& config);

/**
 * Random search from theta = 0: each epoch proposes
 * theta_best + U(-step, step)^n and keeps it only on a strict decrease.
 */
TrainResult train_ran(const Objective& loss, int n_params,
                      const TrainConfig& config);

/// Dispatches on config.algorithm.
TrainResult train(const Objective& loss, int n_params,
                  const TrainConfig& config);

/// Mean squared error of the model over `samples`.
double empirical_risk(const QnnModel& model, std::span<const double> theta,
                      std::span<const Sample> samples);

/// Loss functor with the encoder states precomputed.
Objective make_risk_objective(const QnnModel& model,
                              std::span<const Sample> samples);

TrainResult train_sps(const QnnModel& model, const Dataset& data,
                      const TrainConfig& config);
TrainResult train_ran(const QnnModel& model, const Dataset& data,
                      const TrainConfig& config);
TrainResult train(const QnnModel& model, const Dataset& data,
                  const TrainConfig& config);

}  // namespace dlab
