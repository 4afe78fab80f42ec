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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "dlab/pauli.hpp"

namespace dlab {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

inline constexpr int kDefaultDenseCap = 10;

/// Kronecker expansion of a Pauli string, phase included.
DenseMatrix to_dense(const PauliString& p);

/// Kronecker expansion of the sum; throws CapacityError above `cap` qubits.
DenseMatrix to_dense(const PauliSum& h, int cap = kDefaultDenseCap);

/// Largest singular value. Works for any square matrix.
double spectral_norm(const DenseMatrix& m);

/// Largest absolute eigenvalue of a Hermitian matrix.
double hermitian_norm(const DenseMatrix& m);

/// ||h||_op through dense materialization.
double operator_norm(const PauliSum& h, int cap = kDefaultDenseCap);

/// Frobenius norm sqrt(Tr[m^dagger m]).
double frobenius_norm(const DenseMatrix& m);

/// Ginibre construction G G^dagger / Tr; Hermitian, PSD, unit trace.
DenseMatrix random_density_matrix(int dim, std::uint64_t seed);

}  // namespace dlab
