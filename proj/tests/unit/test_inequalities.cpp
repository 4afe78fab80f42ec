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

#include "dlab/dense.hpp"
#include "inequality_checks.hpp"
#include "test_support.hpp"

namespace dlab {
namespace {

using namespace dlab::testing;

TEST(MatrixInequalities, ExponentialBiLipschitz) {
  auto t = check_exponential_lipschitz(1000, 101);
  EXPECT_EQ(t.instances, 1000);
  EXPECT_EQ(t.violations, 0) << "worst excess " << t.worst;
}

TEST(MatrixInequalities, ExpectationDifference) {
  auto t = check_trace_distance(1000, 202);
  EXPECT_EQ(t.violations, 0) << "worst excess " << t.worst;
}

TEST(MatrixInequalities, ConjugationLipschitz) {
  auto t = check_conjugation_lipschitz(1000, 303);
  EXPECT_EQ(t.violations, 0) << "worst excess " << t.worst;
}

TEST(MatrixInequalities, FrobeniusVersusOperator) {
  auto t = check_frobenius(1000, 404);
  EXPECT_EQ(t.violations, 0) << "worst excess " << t.worst;
}

TEST(MatrixInequalities, ExponentialUpperBoundIsTightNearZero) {
  // For tiny commuting arguments exp is nearly the identity map.
  const Complex i(0, 1);
  DenseMatrix x = i * 1e-6 * DenseMatrix::Identity(2, 2);
  DenseMatrix y = DenseMatrix::Zero(2, 2);
  const double ratio = spectral_norm(DenseMatrix(x.exp()) - DenseMatrix(y.exp())) /
                       spectral_norm(x - y);
  EXPECT_NEAR(ratio, 1.0, 1e-6);
}

TEST(RandomUnitary, IsUnitary) {
  std::mt19937_64 rng(9);
  for (int dim = 1; dim <= 16; ++dim) {
    DenseMatrix u = random_unitary(dim, rng);
    ASSERT_LT((u.adjoint() * u - DenseMatrix::Identity(dim, dim)).norm(), 1e-12);
  }
}

}  // namespace
}  // namespace dlab
