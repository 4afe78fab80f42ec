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

#include "dlab/simulator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dlab/errors.hpp"
#include "json.hpp"

namespace dlab {

namespace {

void check_qubit(const StateVector& s, int q) {
  if (q < 0 || q >= s.num_qubits()) {
    throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " +
                            std::to_string(s.num_qubits()) + " qubits");
  }
}

Eigen::Index qubit_mask(int n, int q) { return Eigen::Index{1} << (n - 1 - q); }

}  // namespace

StateVector::StateVector(int n_qubits) : n_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 24) {
    throw CapacityError("StateVector: qubit count must be in [1, 24]");
  }
  amps_ = DenseVector::Zero(Eigen::Index{1} << n_qubits);
  amps_(0) = 1.0;
}

StateVector::StateVector(int n_qubits, DenseVector amplitudes)
    : amps_(std::move(amplitudes)), n_(n_qubits) {
  if (amps_.size() != (Eigen::Index{1} << n_qubits)) {
    throw std::invalid_argument("StateVector: amplitude count is not 2^n");
  }
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  s.amps_.setZero();
  s.amps_(static_cast<Eigen::Index>(index)) = 1.0;
  return s;
}

void apply_ry(StateVector& state, int qubit, double angle) {
  check_qubit(state, qubit);
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  const auto mask = qubit_mask(state.num_qubits(), qubit);
  auto& a = state.amplitudes();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (i & mask) continue;
    const Complex a0 = a(i);
    const Complex a1 = a(i | mask);
    a(i) = c * a0 - s * a1;
    a(i | mask) = s * a0 + c * a1;
  }
}

void apply_rz(StateVector& state, int qubit, double angle) {
  check_qubit(state, qubit);
  const Complex down = std::polar(1.0, -0.5 * angle);
  const Complex up = std::polar(1.0, 0.5 * angle);
  const auto mask = qubit_mask(state.num_qubits(), qubit);
  auto& a = state.amplitudes();
  for (Eigen::Index i = 0; i < a.size(); ++i) a(i) *= (i & mask) ? up : down;
}

void apply_cnot(StateVector& state, int control, int target) {
  check_qubit(state, control);
  check_qubit(state, target);
  if (control == target) {
    throw std::invalid_argument("apply_cnot: control equals target");
  }
  const auto cmask = qubit_mask(state.num_qubits(), control);
  const auto tmask = qubit_mask(state.num_qubits(), target);
  auto& a = state.amplitudes();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if ((i & cmask) && !(i & tmask)) std::swap(a(i), a(i | tmask));
  }
}

HamEigen HamEigen::from_pauli_sum(const PauliSum& h) {
  const DenseMatrix dense = to_dense(h);
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(dense);
  if (es.info() != Eigen::Success) {
    throw NumericalError("HamEigen: eigensolver did not converge");
  }
  HamEigen out{es.eigenvalues(), es.eigenvectors()};
  const double err = out.reconstruction_error(dense);
  if (err > 1e-9 * std::max(1.0, hermitian_norm(dense))) {
    throw NumericalError("HamEigen: reconstruction error " + std::to_string(err));
  }
  return out;
}

double HamEigen::reconstruction_error(const DenseMatrix& h) const {
  const DenseMatrix rebuilt = eigenvectors *
                              eigenvalues.cast<Complex>().asDiagonal() *
                              eigenvectors.adjoint();
  return spectral_norm(rebuilt - h);
}

void apply_ham_evolution(StateVector& state, const HamEigen& ham, double theta) {
  if (ham.dimension() != state.amplitudes().size()) {
    throw std::invalid_argument("apply_ham_evolution: dimension mismatch");
  }
  DenseVector coeffs = ham.eigenvectors.adjoint() * state.amplitudes();
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    coeffs(k) *= std::polar(1.0, theta * ham.eigenvalues(k));
  }
  state.amplitudes() = ham.eigenvectors * coeffs;
}

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::RY:
      return "RY";
    case GateKind::RZ:
      return "RZ";
    case GateKind::CNOT:
      return "CNOT";
    case GateKind::HamEvo:
      return "HAM_EVO";
  }
  return "?";
}

int ParamCircuit::num_trainable() const {
  int count = 0;
  for (const auto& g : gates) {
    count += std::holds_alternative<TrainableParam>(g.binding) ? 1 : 0;
  }
  return count;
}

int ParamCircuit::num_fixed() const {
  return static_cast<int>(gates.size()) - num_trainable();
}

int ParamCircuit::num_inputs() const {
  int count = 0;
  for (const auto& g : gates) {
    if (const auto* in = std::get_if<InputFeature>(&g.binding)) {
      count = std::max(count, in->index + 1);
    }
  }
  return count;
}

void ParamCircuit::validate() const {
  if (n_qubits < 1) throw std::invalid_argument("circuit: n_qubits < 1");
  std::vector<int> seen(static_cast<std::size_t>(num_trainable()), 0);
  for (const auto& g : gates) {
    const std::size_t arity = g.kind == GateKind::CNOT ? 2
                              : g.kind == GateKind::HamEvo ? 0
                                                            : 1;
    if (g.qubits.size() != arity) {
      throw std::invalid_argument("circuit: wrong qubit count for " +
                                  std::string(to_string(g.kind)));
    }
    for (int q : g.qubits) {
      if (q < 0 || q >= n_qubits) {
        throw std::invalid_argument("circuit: qubit index out of range");
      }
    }
    if (g.kind == GateKind::CNOT && g.qubits[0] == g.qubits[1]) {
      throw std::invalid_argument("circuit: CNOT control equals target");
    }
    if (g.kind == GateKind::HamEvo &&
        (g.hamiltonian < 0 ||
         g.hamiltonian >= static_cast<int>(spectra.size()))) {
      throw std::invalid_argument("circuit: HAM_EVO without a Hamiltonian");
    }
    if (g.kind != GateKind::CNOT &&
        std::holds_alternative<std::monostate>(g.binding)) {
      throw std::invalid_argument("circuit: rotation without a binding");
    }
    if (const auto* t = std::get_if<TrainableParam>(&g.binding)) {
      if (t->index < 0 || t->index >= static_cast<int>(seen.size()) ||
          seen[static_cast<std::size_t>(t->index)]++ != 0) {
        throw std::invalid_argument(
            "circuit: trainable indices must be 0..N_t-1, each used once");
      }
    }
  }
}

void ParamCircuit::apply(StateVector& state, std::span<const double> theta,
                         std::span<const double> x) const {
  if (state.num_qubits() != n_qubits) {
    throw std::invalid_argument("circuit: state width mismatch");
  }
  auto angle_of = [&](const Binding& b) -> double {
    if (const auto* f = std::get_if<FixedAngle>(&b)) return f->value;
    if (const auto* t = std::get_if<TrainableParam>(&b)) {
      if (t->index >= static_cast<int>(theta.size())) {
        throw std::invalid_argument("circuit: too few trainable parameters");
      }
      return theta[static_cast<std::size_t>(t->index)];
    }
    if (const auto* in = std::get_if<InputFeature>(&b)) {
      if (in->index >= static_cast<int>(x.size())) {
        throw std::invalid_argument("circuit: too few input features");
      }
      return x[static_cast<std::size_t>(in->index)];
    }
    throw std::invalid_argument("circuit: gate has no binding");
  };
  for (const auto& g : gates) {
    switch (g.kind) {
      case GateKind::RY:
        apply_ry(state, g.qubits[0], angle_of(g.binding));
        break;
      case GateKind::RZ:
        apply_rz(state, g.qubits[0], angle_of(g.binding));
        break;
      case GateKind::CNOT:
        apply_cnot(state, g.qubits[0], g.qubits[1]);
        break;
      case GateKind::HamEvo:
        apply_ham_evolution(state, *spectra.at(static_cast<std::size_t>(g.hamiltonian)),
                            angle_of(g.binding));
        break;
    }
  }
}

int ParamCircuit::add_hamiltonian(const PauliSum& h) {
  if (h.num_qubits() != n_qubits) {
    throw std::invalid_argument("circuit: Hamiltonian width mismatch");
  }
  hamiltonians.push_back(h);
  spectra.push_back(std::make_shared<const HamEigen>(HamEigen::from_pauli_sum(h)));
  return static_cast<int>(hamiltonians.size()) - 1;
}

ParamCircuit encoding_circuit(int n) {
  if (n < 1) throw std::invalid_argument("encoding_circuit: n < 1");
  ParamCircuit c;
  c.n_qubits = n;
  c.layers = 2;
  for (int rep = 0; rep < 2; ++rep) {
    for (int j = 0; j < n; ++j) {
      c.gates.push_back({GateKind::RY, {j}, InputFeature{j}, -1});
    }
    for (int j = 0; j + 1 < n; ++j) {
      c.gates.push_back({GateKind::CNOT, {j, j + 1}, std::monostate{}, -1});
    }
  }
  return c;
}

ParamCircuit target_unitary(int n, const TargetAngles& angles) {
  if (n < 1) throw std::invalid_argument("target_unitary: n < 1");
  ParamCircuit c;
  c.n_qubits = n;
  c.layers = 2;
  for (int l = 1; l >= 0; --l) {
    for (int j = 0; j < n; ++j) {
      c.gates.push_back({GateKind::RZ, {j}, FixedAngle{angles.nus[l]}, -1});
      c.gates.push_back({GateKind::RY, {j}, FixedAngle{angles.gammas[l]}, -1});
      c.gates.push_back({GateKind::RZ, {j}, FixedAngle{angles.betas[l]}, -1});
    }
  }
  return c;
}

ParamCircuit target_unitary(int n, std::span<const double> betas,
                            std::span<const double> gammas,
                            std::span<const double> nus) {
  if (betas.size() != 2 || gammas.size() != 2 || nus.size() != 2) {
    throw std::invalid_argument(
        "target_unitary: need exactly 2 values per angle family");
  }
  return target_unitary(n, TargetAngles{{betas[0], betas[1]},
                                        {gammas[0], gammas[1]},
                                        {nus[0], nus[1]}});
}

ParamCircuit ansatz(int n, Boundary boundary, int layers, int reps) {
  if (layers < 1 || reps < 1) {
    throw std::invalid_argument("ansatz: layers and reps must be >= 1");
  }
  ParamCircuit c;
  c.n_qubits = n;
  c.layers = layers;
  c.reps = reps;
  const int h = c.add_hamiltonian(tfim_hamiltonian(n, boundary));
  for (int k = 0; k < layers * reps; ++k) {
    c.gates.push_back({GateKind::HamEvo, {}, TrainableParam{k}, h});
  }
  return c;
}

double expectation_z0(const StateVector& state) {
  const auto& a = state.amplitudes();
  const Eigen::Index half = a.size() / 2;
  return a.head(half).squaredNorm() - a.tail(half).squaredNorm();
}

QnnModel QnnModel::tfim(int n, Boundary boundary, int layers, int reps) {
  return {n, boundary, encoding_circuit(n), ansatz(n, boundary, layers, reps)};
}

StateVector QnnModel::encode(std::span<const double> x) const {
  StateVector s(n_qubits);
  encoder.apply(s, {}, x);
  return s;
}

double QnnModel::output_from_encoded(const StateVector& encoded,
                                     std::span<const double> theta) const {
  StateVector s = encoded;
  circuit.apply(s, theta, {});
  return expectation_z0(s);
}

double QnnModel::output(std::span<const double> x,
                        std::span<const double> theta) const {
  return output_from_encoded(encode(x), theta);
}

double model_output(std::span<const double> x, std::span<const double> theta,
                    const QnnModel& model) {
  return model.output(x, theta);
}

double target_label(std::span<const double> x, const ParamCircuit& target) {
  StateVector s(target.n_qubits);
  encoding_circuit(target.n_qubits).apply(s, {}, x);
  target.apply(s, {}, {});
  return expectation_z0(s);
}

std::string circuit_to_json(const ParamCircuit& circuit) {
  using nlohmann::json;
  json doc;
  doc["n_qubits"] = circuit.n_qubits;
  doc["layers"] = circuit.layers;
  doc["reps"] = circuit.reps;
  doc["n_trainable"] = circuit.num_trainable();
  doc["n_fixed"] = circuit.num_fixed();
  json hams = json::array();
  for (const auto& h : circuit.hamiltonians) hams.push_back(h.to_text());
  doc["hamiltonians"] = hams;
  json gates = json::array();
  for (const auto& g : circuit.gates) {
    json jg;
    jg["kind"] = to_string(g.kind);
    jg["qubits"] = g.qubits;
    if (const auto* f = std::get_if<FixedAngle>(&g.binding)) {
      jg["binding"] = {{"type", "fixed"}, {"value", f->value}};
    } else if (const auto* t = std::get_if<TrainableParam>(&g.binding)) {
      jg["binding"] = {{"type", "trainable"}, {"index", t->index}};
    } else if (const auto* in = std::get_if<InputFeature>(&g.binding)) {
      jg["binding"] = {{"type", "input"}, {"index", in->index}};
    } else {
      jg["binding"] = {{"type", "none"}};
    }
    if (g.kind == GateKind::HamEvo) jg["hamiltonian"] = g.hamiltonian;
    gates.push_back(std::move(jg));
  }
  doc["gates"] = std::move(gates);
  return doc.dump(2) + "\n";
}

ParamCircuit circuit_from_json(std::string_view text) {
  using nlohmann::json;
  const json doc = json::parse(text);
  ParamCircuit c;
  c.n_qubits = doc.at("n_qubits").get<int>();
  c.layers = doc.value("layers", 1);
  c.reps = doc.value("reps", 1);
  for (const auto& h : doc.at("hamiltonians")) {
    c.add_hamiltonian(PauliSum::from_text(h.get<std::string>(), c.n_qubits));
  }
  for (const auto& jg : doc.at("gates")) {
    GateSpec g;
    const auto kind = jg.at("kind").get<std::string>();
    if (kind == "RY") {
      g.kind = GateKind::RY;
    } else if (kind == "RZ") {
      g.kind = GateKind::RZ;
    } else if (kind == "CNOT") {
      g.kind = GateKind::CNOT;
    } else if (kind == "HAM_EVO") {
      g.kind = GateKind::HamEvo;
    } else {
      throw std::invalid_argument("circuit json: unknown gate kind " + kind);
    }
    g.qubits = jg.at("qubits").get<std::vector<int>>();
    const auto& b = jg.at("binding");
    const auto type = b.at("type").get<std::string>();
    if (type == "fixed") {
      g.binding = FixedAngle{b.at("value").get<double>()};
    } else if (type == "trainable") {
      g.binding = TrainableParam{b.at("index").get<int>()};
    } else if (type == "input") {
      g.binding = InputFeature{b.at("index").get<int>()};
    } else if (type != "none") {
      throw std::invalid_argument("circuit json: unknown binding " + type);
    }
    g.hamiltonian = jg.value("hamiltonian", -1);
    c.gates.push_back(std::move(g));
  }
  c.validate();
  return c;
}

}  // namespace dlab
