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

#include "dlab/dataset.hpp"

#include <numbers>
#include <random>
#include <stdexcept>

#include "json.hpp"

namespace dlab {

namespace {

nlohmann::json samples_to_json(const std::vector<Sample>& samples) {
  auto arr = nlohmann::json::array();
  for (const auto& s : samples) arr.push_back({{"x", s.x}, {"y", s.y}});
  return arr;
}

std::vector<Sample> samples_from_json(const nlohmann::json& arr, int n) {
  std::vector<Sample> out;
  for (const auto& js : arr) {
    Sample s{js.at("x").get<std::vector<double>>(), js.at("y").get<double>()};
    if (static_cast<int>(s.x.size()) != n) {
      throw std::invalid_argument("dataset json: sample width differs from n");
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::string Dataset::to_json() const {
  nlohmann::json doc;
  doc["n_qubits"] = n_qubits;
  doc["seed"] = seed;
  doc["v_params"] = {{"beta", v_params.betas},
                     {"gamma", v_params.gammas},
                     {"nu", v_params.nus}};
  doc["train"] = samples_to_json(train);
  doc["test"] = samples_to_json(test);
  return doc.dump(1) + "\n";
}

Dataset Dataset::from_json(std::string_view text) {
  const auto doc = nlohmann::json::parse(text);
  Dataset d;
  d.n_qubits = doc.at("n_qubits").get<int>();
  d.seed = doc.value("seed", std::uint64_t{0});
  const auto& v = doc.at("v_params");
  d.v_params.betas = v.at("beta").get<std::array<double, 2>>();
  d.v_params.gammas = v.at("gamma").get<std::array<double, 2>>();
  d.v_params.nus = v.at("nu").get<std::array<double, 2>>();
  d.train = samples_from_json(doc.at("train"), d.n_qubits);
  d.test = samples_from_json(doc.at("test"), d.n_qubits);
  if (d.train.empty()) throw std::invalid_argument("dataset json: empty train");
  return d;
}

Dataset generate_dataset(int n, std::uint64_t seed, int m_train, int m_test) {
  if (n < 1) throw std::invalid_argument("generate_dataset: n < 1");
  if (m_train < 1 || m_test < 0) {
    throw std::invalid_argument("generate_dataset: bad split sizes");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

  Dataset d;
  d.n_qubits = n;
  d.seed = seed;
  for (auto* family : {&d.v_params.betas, &d.v_params.gammas, &d.v_params.nus}) {
    for (double& a : *family) a = angle(rng);
  }
  const ParamCircuit v = target_unitary(n, d.v_params);
  auto draw = [&](int count, std::vector<Sample>& out) {
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
      Sample s;
      s.x.resize(static_cast<std::size_t>(n));
      for (double& xi : s.x) xi = angle(rng);
      s.y = target_label(s.x, v);
      out.push_back(std::move(s));
    }
  };
  draw(m_train, d.train);
  draw(m_test, d.test);
  return d;
}

}  // namespace dlab
