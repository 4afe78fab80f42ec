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
#include <string>
#include <string_view>
#include <vector>

#include "dlab/simulator.hpp"

namespace dlab {

struct Sample {
  std::vector<double> x;
  double y = 0.0;
};

/// Synthetic regression set: inputs in [0, 2pi)^n, labels from a random
/// target V read out through the same encoder and Z_0 observable.
struct Dataset {
  int n_qubits = 0;
  std::uint64_t seed = 0;
  TargetAngles v_params;
  std::vector<Sample> train;
  std::vector<Sample> test;

  std::string to_json() const;
  static Dataset from_json(std::string_view text);
};

inline constexpr int kDefaultTrainSize = 10;
inline constexpr int kDefaultTestSize = 100;

/// Deterministic in `seed`: V angles are drawn first, then the training
/// inputs, then the test inputs, all uniform on [0, 2pi).
Dataset generate_dataset(int n, std::uint64_t seed,
                         int m_train = kDefaultTrainSize,
                         int m_test = kDefaultTestSize);

}  // namespace dlab
