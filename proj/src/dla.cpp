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

#include "dlab/dla.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <stdexcept>

#include "dlab/dense.hpp"
#include "dlab/errors.hpp"

namespace dlab {

std::string_view to_string(Boundary b) {
  return b == Boundary::Open ? "open" : "closed";
}

Boundary parse_boundary(std::string_view s) {
  if (s == "open") return Boundary::Open;
  if (s == "closed") return Boundary::Closed;
  throw std::invalid_argument("boundary must be 'open' or 'closed', got '" +
                              std::string(s) + "'");
}

void GeneratorSet::validate() const {
  if (generators.empty()) {
    throw std::invalid_argument("generator set is empty");
  }
  for (const auto& g : generators) {
    if (g.num_qubits() != n_qubits) {
      throw std::invalid_argument(
          "generator width differs from the set's qubit count");
    }
  }
}

GeneratorSet GeneratorSet::from_text(std::string_view text,
                                     std::string label) {
  GeneratorSet out;
  out.label = std::move(label);
  std::string block;
  auto flush = [&] {
    const bool has_terms =
        block.find_first_not_of(" \t\r\n") != std::string::npos;
    if (has_terms) {
      auto g = PauliSum::from_text(block, out.n_qubits);
      if (out.n_qubits == 0) out.n_qubits = g.num_qubits();
      out.generators.push_back(std::move(g));
    }
    block.clear();
  };
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const auto line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    if (line.starts_with("---")) {
      flush();
    } else {
      block.append(line);
      block.push_back('\n');
    }
  }
  flush();
  out.validate();
  return out;
}

std::string GeneratorSet::to_text() const {
  std::string out;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (k > 0) out += "---\n";
    out += generators[k].to_text();
  }
  return out;
}

int default_max_dim(int n_qubits) {
  if (n_qubits >= 6) return 4095;
  return (1 << (2 * n_qubits)) - 1;
}

namespace {

// Projects out the span of an orthonormal basis, twice for stability.
PauliSum orthogonalize(PauliSum v, const std::vector<PauliSum>& basis) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) {
      const double overlap = hs_inner(b, v);
      if (overlap != 0.0) v -= overlap * b;
    }
  }
  return v;
}

bool try_admit(const PauliSum& candidate, std::vector<PauliSum>& basis) {
  auto residual = orthogonalize(candidate, basis);
  const double norm = residual.norm();
  if (norm <= kClosureTolerance) return false;
  residual *= 1.0 / norm;
  basis.push_back(std::move(residual));
  return true;
}

}  // namespace

DlaBasis lie_closure(const GeneratorSet& gens, int max_dim) {
  gens.validate();
  if (max_dim <= 0) max_dim = default_max_dim(gens.n_qubits);

  DlaBasis out;
  out.n_qubits = gens.n_qubits;
  auto& basis = out.basis;

  for (const auto& g : gens.generators) {
    if (static_cast<int>(basis.size()) >= max_dim) {
      out.truncated = true;
      break;
    }
    try_admit(g, basis);
  }
  if (static_cast<int>(basis.size()) >= max_dim) out.truncated = true;

  std::size_t frontier_begin = 0;
  std::size_t frontier_end = basis.size();
  while (!out.truncated && frontier_begin < frontier_end) {
    bool admitted = false;
    for (std::size_t i = frontier_begin; i < frontier_end && !out.truncated;
         ++i) {
      // basis grows while we iterate; indices stay valid, references do not.
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        auto bracket = commutator(basis[i], basis[j]);
        if (bracket.empty()) continue;
        if (try_admit(bracket, basis)) {
          admitted = true;
          if (static_cast<int>(basis.size()) >= max_dim) {
            out.truncated = true;
            break;
          }
        }
      }
    }
    if (admitted) ++out.depth_reached;
    frontier_begin = frontier_end;
    frontier_end = basis.size();
  }
  // Hitting the cap exactly at the fixed point is not a truncation.
  if (out.truncated && static_cast<int>(basis.size()) == max_dim) {
    bool closed = true;
    for (std::size_t i = 0; i < basis.size() && closed; ++i) {
      for (std::size_t j = i + 1; j < basis.size() && closed; ++j) {
        auto r = orthogonalize(commutator(basis[i], basis[j]), basis);
        closed = r.norm() <= kClosureTolerance;
      }
    }
    out.truncated = !closed;
  }
  out.dim = static_cast<int>(basis.size());
  return out;
}

int dla_dimension(const GeneratorSet& gens) { return lie_closure(gens).dim; }

GeneratorSet tfim_generators(int n, Boundary boundary) {
  if (n < 2) {
    throw DomainError("tfim_generators: need n >= 2, got " + std::to_string(n));
  }
  const int bonds = boundary == Boundary::Open ? n - 1 : n;
  PauliSum zz(n);
  for (int i = 0; i < bonds; ++i) {
    PauliWord w(n);
    w.set(i, Pauli::Z);
    w.set((i + 1) % n, Pauli::Z);
    zz.add_term(w, 1.0);
  }
  PauliSum x(n);
  for (int i = 0; i < n; ++i) x.add_term(PauliWord::single(n, i, Pauli::X), 1.0);

  GeneratorSet out;
  out.n_qubits = n;
  out.generators = {std::move(zz), std::move(x)};
  out.label = "tfim-" + std::string(to_string(boundary)) + "-" +
              std::to_string(n);
  return out;
}

PauliSum tfim_hamiltonian(int n, Boundary boundary) {
  const auto gens = tfim_generators(n, boundary);
  return gens.generators[0] + gens.generators[1];
}

int tfim_quoted_dimension(int n, Boundary boundary) {
  return boundary == Boundary::Open ? n * n : n;
}

int closure_oracle_dense(const GeneratorSet& gens, int max_dim) {
  gens.validate();
  if (gens.n_qubits > kDenseOracleMaxQubits) {
    throw CapacityError("closure_oracle_dense: at most 4 qubits");
  }
  if (max_dim <= 0) max_dim = default_max_dim(gens.n_qubits);

  constexpr double kSingularThreshold = 1e-6;
  const Eigen::Index dim = Eigen::Index{1} << gens.n_qubits;
  const Eigen::Index len = 2 * dim * dim;

  std::vector<DenseMatrix> elements;
  Eigen::MatrixXd span(len, 0);

  auto admit = [&](const DenseMatrix& m) {
    const double scale = m.norm();
    if (scale < 1e-12) return false;
    Eigen::VectorXd v(len);
    v << m.real().reshaped(), m.imag().reshaped();
    v /= scale;
    Eigen::MatrixXd stacked(len, span.cols() + 1);
    stacked << span, v;
    Eigen::BDCSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= kSingularThreshold) return false;
    span = svd.matrixU();
    elements.push_back(m / scale);
    return true;
  };

  for (const auto& g : gens.generators) {
    if (static_cast<Eigen::Index>(elements.size()) >= max_dim) break;
    admit(to_dense(g, kDenseOracleMaxQubits));
  }
  std::size_t begin = 0;
  std::size_t end = elements.size();
  while (begin < end && static_cast<int>(elements.size()) < max_dim) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < elements.size(); ++j) {
        if (static_cast<int>(elements.size()) >= max_dim) break;
        const DenseMatrix a = elements[i];
        const DenseMatrix b = elements[j];
        const DenseMatrix bracket = Complex(0, -1) * (a * b - b * a);
        admit(bracket);
      }
    }
    begin = end;
    end = elements.size();
  }
  return static_cast<int>(elements.size());
}

}  // namespace dlab
