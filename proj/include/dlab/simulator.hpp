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

#include <array>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dlab/dense.hpp"
#include "dlab/dla.hpp"
#include "dlab/pauli.hpp"

namespace dlab {

/// Amplitudes over 2^n basis states; qubit 0 is the most significant bit of
/// the basis index.
class StateVector {
 public:
  explicit StateVector(int n_qubits);  // |0...0>
  StateVector(int n_qubits, DenseVector amplitudes);

  static StateVector basis_state(int n_qubits, std::uint64_t index);

  int num_qubits() const { return n_; }
  const DenseVector& amplitudes() const { return amps_; }
  DenseVector& amplitudes() { return amps_; }
  double norm() const { return amps_.norm(); }

 private:
  DenseVector amps_;
  int n_ = 0;
};

/// exp(-i angle Y / 2) on `qubit`.
void apply_ry(StateVector& state, int qubit, double angle);
/// exp(-i angle Z / 2) on `qubit`.
void apply_rz(StateVector& state, int qubit, double angle);
void apply_cnot(StateVector& state, int control, int target);

/// Eigendecomposition H = V diag(lambda) V^dagger, computed once and shared.
struct HamEigen {
  Eigen::VectorXd eigenvalues;
  DenseMatrix eigenvectors;

  /// Throws NumericalError when the reconstruction error exceeds 1e-9.
  static HamEigen from_pauli_sum(const PauliSum& h);
  /// ||V diag(lambda) V^dagger - H||_op.
  double reconstruction_error(const DenseMatrix& h) const;
  int dimension() const { return static_cast<int>(eigenvalues.size()); }
};

/// state <- exp(i theta H) state.
void apply_ham_evolution(StateVector& state, const HamEigen& ham, double theta);

enum class GateKind { RY, RZ, CNOT, HamEvo };

std::string_view to_string(GateKind kind);

struct FixedAngle {
  double value = 0.0;
};
struct TrainableParam {
  int index = 0;
};
struct InputFeature {
  int index = 0;
};
using Binding = std::variant<std::monostate, FixedAngle, TrainableParam,
                             InputFeature>;

struct GateSpec {
  GateKind kind = GateKind::RY;
  std::vector<int> qubits;
  Binding binding;
  /// Index into ParamCircuit::hamiltonians for HamEvo gates.
  int hamiltonian = -1;
};

/**
 * Ordered gate list, applied front to back.
 *
 * Gates bound to a TrainableParam are the trainable set (N_t, indices
 * 0..N_t-1 each used once); every other gate counts as fixed (N_f),
 * including data-encoding gates fed by InputFeature.
 */
struct ParamCircuit {
  int n_qubits = 0;
  std::vector<GateSpec> gates;
  int layers = 1;
  int reps = 1;
  std::vector<PauliSum> hamiltonians;
  std::vector<std::shared_ptr<const HamEigen>> spectra;

  int num_trainable() const;
  int num_fixed() const;
  int num_inputs() const;

  /// Throws std::invalid_argument on bad qubits, bindings or indices.
  void validate() const;

  void apply(StateVector& state, std::span<const double> theta,
             std::span<const double> x) const;

  /// Registers a Hamiltonian and its eigendecomposition; returns its index.
  int add_hamiltonian(const PauliSum& h);
};

/// Two repetitions of (RY(x_j) on every qubit, then a CNOT ladder j -> j+1).
ParamCircuit encoding_circuit(int n);

struct TargetAngles {
  std::array<double, 2> betas{};
  std::array<double, 2> gammas{};
  std::array<double, 2> nus{};
};

/// V = A_1 A_2 with A_l = (RZ(beta_l) RY(gamma_l) RZ(nu_l))^{(x) n}.
/// Gates are listed in application order, so A_2 comes first.
ParamCircuit target_unitary(int n, const TargetAngles& angles);
ParamCircuit target_unitary(int n, std::span<const double> betas,
                            std::span<const double> gammas,
                            std::span<const double> nus);

/// L*K exp(i theta H) gates sharing the unit-weight TFIM Hamiltonian.
ParamCircuit ansatz(int n, Boundary boundary, int layers, int reps);

/// <Z_0> = sum |a|^2 (+1 if qubit 0 is |0>, -1 otherwise).
double expectation_z0(const StateVector& state);

/// U_E followed by a trainable ansatz, measured with Z_0.
struct QnnModel {
  int n_qubits = 0;
  Boundary boundary = Boundary::Open;
  ParamCircuit encoder;
  ParamCircuit circuit;

  static QnnModel tfim(int n, Boundary boundary, int layers = 2, int reps = 10);

  StateVector encode(std::span<const double> x) const;
  double output_from_encoded(const StateVector& encoded,
                             std::span<const double> theta) const;
  double output(std::span<const double> x, std::span<const double> theta) const;
  const PauliSum& hamiltonian() const { return circuit.hamiltonians.at(0); }
};

/// <0| U_E(x)^dagger U(theta)^dagger Z_0 U(theta) U_E(x) |0>.
double model_output(std::span<const double> x, std::span<const double> theta,
                    const QnnModel& model);

/// Same readout with the fixed target V in place of U(theta).
double target_label(std::span<const double> x, const ParamCircuit& target);

/// Gate list with kinds, qubits, bindings and Hamiltonians (Pauli text).
std::string circuit_to_json(const ParamCircuit& circuit);
ParamCircuit circuit_from_json(std::string_view text);

}  // namespace dlab
