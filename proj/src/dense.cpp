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

#include "dlab/dense.hpp"

#include <bit>
#include <random>
#include <stdexcept>
#include <string>

#include "dlab/errors.hpp"

namespace dlab {

namespace {

const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// Adds coeff * P into m, where P|c> = i^(phase + #Y) (-1)^|c & z| |c ^ x>.
void accumulate(DenseMatrix& m, const PauliWord& w, int phase_exp,
                Complex coeff) {
  const std::uint64_t dim = std::uint64_t{1} << w.num_qubits();
  const Complex base = coeff * kIPow[(phase_exp + w.y_count()) & 3];
  for (std::uint64_t c = 0; c < dim; ++c) {
    const std::uint64_t r = c ^ w.x_bits();
    const bool odd = std::popcount(c & w.z_bits()) & 1;
    m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) +=
        odd ? -base : base;
  }
}

}  // namespace

DenseMatrix to_dense(const PauliString& p) {
  if (p.num_qubits() > kDefaultDenseCap) {
    throw CapacityError("to_dense: " + std::to_string(p.num_qubits()) +
                        " qubits exceeds the dense cap");
  }
  const Eigen::Index dim = Eigen::Index{1} << p.num_qubits();
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  accumulate(m, p.word, p.phase_exp, 1.0);
  return m;
}

DenseMatrix to_dense(const PauliSum& h, int cap) {
  if (h.num_qubits() < 1) throw std::invalid_argument("to_dense: empty width");
  if (h.num_qubits() > cap) {
    throw CapacityError("to_dense: " + std::to_string(h.num_qubits()) +
                        " qubits exceeds the dense cap of " +
                        std::to_string(cap));
  }
  const Eigen::Index dim = Eigen::Index{1} << h.num_qubits();
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  for (const auto& [word, coeff] : h.terms()) accumulate(m, word, 0, coeff);
  return m;
}

double spectral_norm(const DenseMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<DenseMatrix> svd(m);
  return svd.singularValues()(0);
}

double hermitian_norm(const DenseMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw NumericalError("hermitian_norm: eigensolver did not converge");
  }
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double operator_norm(const PauliSum& h, int cap) {
  if (h.empty()) return 0.0;
  return hermitian_norm(to_dense(h, cap));
}

double frobenius_norm(const DenseMatrix& m) { return m.norm(); }

DenseMatrix random_density_matrix(int dim, std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("random_density_matrix: dim < 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  DenseMatrix g(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) g(i, j) = {normal(rng), normal(rng)};
  }
  DenseMatrix rho = g * g.adjoint();
  rho = (rho + rho.adjoint()) * 0.5;
  return rho / rho.trace().real();
}

}  // namespace dlab
