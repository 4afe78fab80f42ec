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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dlab/pauli.hpp"

namespace dlab {

enum class Boundary { Open, Closed };

std::string_view to_string(Boundary b);
/// Accepts "open" / "closed".
Boundary parse_boundary(std::string_view s);

/// Finite set of traceless Hermitian generators {H_k}, all on the same width.
struct GeneratorSet {
  int n_qubits = 0;
  std::vector<PauliSum> generators;
  std::string label;

  /// Throws std::invalid_argument when empty, zero, or width-inconsistent.
  void validate() const;

  /// Generators in the Pauli text format, separated by lines of "---".
  static GeneratorSet from_text(std::string_view text, std::string label = {});
  std::string to_text() const;
};

/// Orthonormal (Hilbert-Schmidt) spanning set of a Lie closure.
struct DlaBasis {
  int n_qubits = 0;
  std::vector<PauliSum> basis;
  int dim = 0;
  /// Number of bracket sweeps that admitted at least one new element.
  int depth_reached = 0;
  bool truncated = false;
};

/// Residual-norm threshold for admitting a bracket into the basis.
inline constexpr double kClosureTolerance = 1e-10;

/// min(4^n - 1, 4095).
int default_max_dim(int n_qubits);

/**
 * Breadth-first Lie closure.
 *
 * Generators are orthogonalized into the basis first. Each sweep brackets
 * every element admitted in the previous sweep against the whole current
 * basis, Gram-Schmidt-projects the result (two passes) and admits it when
 * the residual norm exceeds kClosureTolerance. The fixed point is reached
 * when a sweep admits nothing. Admission order is deterministic.
 *
 * `max_dim <= 0` selects default_max_dim(n).
 */
DlaBasis lie_closure(const GeneratorSet& gens, int max_dim = 0);

int dla_dimension(const GeneratorSet& gens);

/// { sum_{i<n_f} Z_i Z_{i+1 mod n}, sum_i X_i } with n_f = n-1 (open) or n
/// (closed). For n = 2 closed the bond term appears twice (coefficient 2).
GeneratorSet tfim_generators(int n, Boundary boundary);

/// Sum of the TFIM generators with unit weights.
PauliSum tfim_hamiltonian(int n, Boundary boundary);

/// The dimension commonly quoted for the TFIM closure: n^2 (open), n
/// (closed). Reported next to computed values, never used in place of them.
int tfim_quoted_dimension(int n, Boundary boundary);

/// Largest width accepted by closure_oracle_dense.
inline constexpr int kDenseOracleMaxQubits = 4;

/**
 * Independent closure dimension from dense matrices.
 *
 * Brackets are formed as -i(AB - BA) on explicit 2^n x 2^n matrices, and a
 * candidate is admitted when the smallest singular value of
 * [orthonormal span | candidate] exceeds a fixed threshold. Shares no code
 * with lie_closure beyond generator materialization.
 */
int closure_oracle_dense(const GeneratorSet& gens, int max_dim = 0);

}  // namespace dlab
