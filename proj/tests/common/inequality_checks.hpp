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

#include <cmath>
#include <random>
#include <unsupported/Eigen/MatrixFunctions>

#include "dlab/dense.hpp"
#include "test_support.hpp"

// Randomized checks of the matrix inequalities behind the covering-number
// chain. Each returns the number of instances whose inequality fails by more
// than `slack`.
namespace dlab::testing {

struct InequalityTally {
  int instances = 0;
  int violations = 0;
  double worst = -1e300;  ///< max of (lhs - rhs) seen
};

inline int random_dim(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(1, 16);
  return d(rng);
}

inline DenseMatrix scaled_to(const DenseMatrix& h, double norm) {
  return h * (norm / spectral_norm(h));
}

/// (2 - e^p)||X - Y|| <= ||e^X - e^Y|| <= ||X - Y|| for skew-Hermitian X, Y
/// with ||X||, ||Y|| <= p < ln 2.
inline InequalityTally check_exponential_lipschitz(int count, std::uint64_t seed,
                                              double slack = 1e-10) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Complex i(0, 1);
  InequalityTally t;
  for (int k = 0; k < count; ++k) {
    const int dim = random_dim(rng);
    const double p = std::log(2.0) * (0.001 + 0.998 * u(rng));
    DenseMatrix x = i * scaled_to(random_hermitian(dim, rng), p * u(rng));
    DenseMatrix y;
    if (k % 2 == 0) {
      y = i * scaled_to(random_hermitian(dim, rng), p * u(rng));
    } else {
      // Nearby pair: the lower bound is tightest for small differences.
      DenseMatrix h = x / i + scaled_to(random_hermitian(dim, rng),
                                        p * 1e-3 * u(rng));
      double nh = spectral_norm(h);
      if (nh > p) h *= p / nh;
      y = i * h;
    }
    const double diff = spectral_norm(x - y);
    const double exp_diff = spectral_norm(DenseMatrix(x.exp()) -
                                          DenseMatrix(y.exp()));
    const double lower = (2.0 - std::exp(p)) * diff;
    const double m1 = lower - exp_diff;
    const double m2 = exp_diff - diff;
    t.worst = std::max({t.worst, m1, m2});
    if (m1 > slack || m2 > slack) ++t.violations;
    ++t.instances;
  }
  return t;
}

/// |Tr[X rho] - Tr[Y rho]| <= sqrt(N) ||X - Y|| for Hermitian X, Y.
inline InequalityTally check_trace_distance(int count, std::uint64_t seed,
                                       double slack = 1e-10) {
  std::mt19937_64 rng(seed);
  InequalityTally t;
  for (int k = 0; k < count; ++k) {
    const int dim = random_dim(rng);
    DenseMatrix x = random_hermitian(dim, rng);
    DenseMatrix y = random_hermitian(dim, rng);
    DenseMatrix rho = random_density_matrix(dim, rng());
    const double lhs = std::abs((x * rho).trace() - (y * rho).trace());
    const double rhs = std::sqrt(double(dim)) * spectral_norm(x - y);
    t.worst = std::max(t.worst, lhs - rhs);
    if (lhs - rhs > slack) ++t.violations;
    ++t.instances;
  }
  return t;
}

/// ||U^dag O U - V^dag O V|| <= 2 ||U - V|| ||O||.
inline InequalityTally check_conjugation_lipschitz(int count, std::uint64_t seed,
                                              double slack = 1e-10) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Complex i(0, 1);
  InequalityTally t;
  for (int k = 0; k < count; ++k) {
    const int dim = random_dim(rng);
    DenseMatrix uu = random_unitary(dim, rng);
    DenseMatrix vv;
    if (k % 2 == 0) {
      vv = random_unitary(dim, rng);
    } else {
      DenseMatrix gen = i * scaled_to(random_hermitian(dim, rng), 1e-2 * u(rng));
      vv = uu * DenseMatrix(gen.exp());
    }
    DenseMatrix o = random_hermitian(dim, rng);
    const double lhs = spectral_norm(uu.adjoint() * o * uu -
                                     vv.adjoint() * o * vv);
    const double rhs = 2.0 * spectral_norm(uu - vv) * spectral_norm(o);
    t.worst = std::max(t.worst, lhs - rhs);
    if (lhs - rhs > slack) ++t.violations;
    ++t.instances;
  }
  return t;
}

/// ||Z||_F <= sqrt(N) ||Z||_op.
inline InequalityTally check_frobenius(int count, std::uint64_t seed,
                                  double slack = 1e-10) {
  std::mt19937_64 rng(seed);
  InequalityTally t;
  for (int k = 0; k < count; ++k) {
    const int dim = random_dim(rng);
    DenseMatrix z = random_hermitian(dim, rng);
    const double lhs = frobenius_norm(z);
    const double rhs = std::sqrt(double(dim)) * spectral_norm(z);
    t.worst = std::max(t.worst, lhs - rhs);
    if (lhs - rhs > slack) ++t.violations;
    ++t.instances;
  }
  return t;
}

}  // namespace dlab::testing
