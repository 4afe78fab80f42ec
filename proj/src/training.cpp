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

#include "dlab/training.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "dlab/errors.hpp"
#include "json.hpp"

namespace dlab {

namespace {

double checked(double loss, int epoch) {
  if (!std::isfinite(loss)) {
    throw NumericalError("training diverged at epoch " + std::to_string(epoch) +
                         ": non-finite loss");
  }
  return loss;
}

void clamp_all(std::vector<double>& theta, const std::optional<double>& clip) {
  if (!clip) return;
  for (double& t : theta) t = std::clamp(t, -*clip, *clip);
}

}  // namespace

std::string_view to_string(Algorithm a) {
  return a == Algorithm::SPS ? "sps" : "ran";
}

Algorithm parse_algorithm(std::string_view s) {
  std::string lower(s);
  for (char& c : lower) c = static_cast<char>(std::tolower(c));
  if (lower == "sps" || lower == "spsa") return Algorithm::SPS;
  if (lower == "ran") return Algorithm::RAN;
  throw std::invalid_argument("algorithm must be 'sps' or 'ran', got '" +
                              std::string(s) + "'");
}

void TrainConfig::validate() const {
  if (epochs < 0) throw DomainError("epochs must be >= 0");
  if (!(init_low < init_high)) throw DomainError("init range is empty");
  if (!(gains.a0 > 0.0 && gains.c0 > 0.0)) {
    throw DomainError("SPSA gains a0 and c0 must be > 0");
  }
  if (!(gains.big_a >= 0.0)) throw DomainError("SPSA stability constant A must be >= 0");
  if (!(ran_step > 0.0)) throw DomainError("random-search step must be > 0");
  if (theta_clip && !(*theta_clip > 0.0)) {
    throw DomainError("theta_clip must be > 0");
  }
}

std::string TrainResult::to_json() const {
  nlohmann::json doc;
  doc["theta_star"] = theta_star;
  doc["train_loss_trace"] = train_loss_trace;
  doc["final_train_rmse"] = final_train_rmse;
  doc["evaluations_used"] = evaluations_used;
  return doc.dump(2) + "\n";
}

double mse(std::span<const double> predictions, std::span<const double> labels) {
  if (predictions.size() != labels.size()) {
    throw std::invalid_argument("mse: length mismatch");
  }
  if (predictions.empty()) throw std::invalid_argument("mse: empty input");
  double sum = 0.0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const double d = predictions[i] - labels[i];
    sum += d * d;
  }
  return sum / static_cast<double>(labels.size());
}

double rmse(std::span<const double> predictions, std::span<const double> labels) {
  return std::sqrt(mse(predictions, labels));
}

TrainResult train_sps(const Objective& loss, int n_params,
                      const TrainConfig& config) {
  config.validate();
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> init(config.init_low, config.init_high);

  TrainResult r;
  std::vector<double> theta(static_cast<std::size_t>(n_params));
  for (double& t : theta) t = init(rng);
  clamp_all(theta, config.theta_clip);

  r.train_loss_trace.reserve(static_cast<std::size_t>(config.epochs) + 1);
  r.train_loss_trace.push_back(std::sqrt(checked(loss(theta), 0)));
  r.evaluations_used = 1;

  const auto& g = config.gains;
  std::vector<double> delta(theta.size());
  std::vector<double> plus(theta.size());
  std::vector<double> minus(theta.size());
  for (int k = 0; k < config.epochs; ++k) {
    const double ak = g.a0 / std::pow(k + 1 + g.big_a, g.alpha);
    const double ck = g.c0 / std::pow(k + 1, g.gamma);
    for (std::size_t i = 0; i < theta.size(); ++i) {
      delta[i] = (rng() & 1U) ? 1.0 : -1.0;
      plus[i] = theta[i] + ck * delta[i];
      minus[i] = theta[i] - ck * delta[i];
    }
    const double diff = checked(loss(plus), k + 1) - checked(loss(minus), k + 1);
    for (std::size_t i = 0; i < theta.size(); ++i) {
      theta[i] -= ak * diff / (2.0 * ck * delta[i]);
    }
    clamp_all(theta, config.theta_clip);
    r.train_loss_trace.push_back(std::sqrt(checked(loss(theta), k + 1)));
    r.evaluations_used += 3;
  }
  r.theta_star = std::move(theta);
  r.final_train_rmse = r.train_loss_trace.back();
  return r;
}

TrainResult train_ran(const Objective& loss, int n_params,
                      const TrainConfig& config) {
  config.validate();
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> step(-config.ran_step, config.ran_step);

  TrainResult r;
  std::vector<double> best(static_cast<std::size_t>(n_params), 0.0);
  double best_loss = checked(loss(best), 0);
  r.train_loss_trace.reserve(static_cast<std::size_t>(config.epochs) + 1);
  r.train_loss_trace.push_back(std::sqrt(best_loss));
  r.evaluations_used = 1;

  std::vector<double> proposal(best.size());
  for (int k = 0; k < config.epochs; ++k) {
    for (std::size_t i = 0; i < best.size(); ++i) proposal[i] = best[i] + step(rng);
    clamp_all(proposal, config.theta_clip);
    const double l = checked(loss(proposal), k + 1);
    ++r.evaluations_used;
    if (l < best_loss) {
      best_loss = l;
      best = proposal;
    }
    r.train_loss_trace.push_back(std::sqrt(best_loss));
  }
  r.theta_star = std::move(best);
  r.final_train_rmse = r.train_loss_trace.back();
  return r;
}

TrainResult train(const Objective& loss, int n_params,
                  const TrainConfig& config) {
  return config.algorithm == Algorithm::SPS ? train_sps(loss, n_params, config)
                                            : train_ran(loss, n_params, config);
}

double empirical_risk(const QnnModel& model, std::span<const double> theta,
                      std::span<const Sample> samples) {
  if (samples.empty()) throw std::invalid_argument("empirical_risk: empty dataset");
  return make_risk_objective(model, samples)(theta);
}

Objective make_risk_objective(const QnnModel& model,
                              std::span<const Sample> samples) {
  if (samples.empty()) throw std::invalid_argument("empirical risk: empty dataset");
  std::vector<StateVector> encoded;
  std::vector<double> labels;
  encoded.reserve(samples.size());
  for (const auto& s : samples) {
    encoded.push_back(model.encode(s.x));
    labels.push_back(s.y);
  }
  return [&model, encoded = std::move(encoded),
          labels = std::move(labels)](std::span<const double> theta) {
    double sum = 0.0;
    for (std::size_t i = 0; i < encoded.size(); ++i) {
      const double d = model.output_from_encoded(encoded[i], theta) - labels[i];
      sum += d * d;
    }
    return sum / static_cast<double>(encoded.size());
  };
}

TrainResult train_sps(const QnnModel& model, const Dataset& data,
                      const TrainConfig& config) {
  return train_sps(make_risk_objective(model, data.train),
                   model.circuit.num_trainable(), config);
}

TrainResult train_ran(const QnnModel& model, const Dataset& data,
                      const TrainConfig& config) {
  return train_ran(make_risk_objective(model, data.train),
                   model.circuit.num_trainable(), config);
}

TrainResult train(const QnnModel& model, const Dataset& data,
                  const TrainConfig& config) {
  return config.algorithm == Algorithm::SPS ? train_sps(model, data, config)
                                            : train_ran(model, data, config);
}

}  // namespace dlab
