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

#include <cmath>
#include <numbers>

#include "circuit_oracle.hpp"
#include "dlab/errors.hpp"
#include "dlab/simulator.hpp"
#include "test_support.hpp"

namespace dlab {
namespace {

using namespace dlab::testing;
using std::numbers::pi;

StateVector random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  DenseVector v(1 << n);
  for (auto& a : v) a = Complex(g(rng), g(rng));
  return StateVector(n, v / v.norm());
}

TEST(Gates, RotationExamples) {
  StateVector s(1);
  apply_ry(s, 0, pi);
  EXPECT_NEAR(std::abs(s.amplitudes()(0)), 0.0, 1e-15);
  EXPECT_NEAR(s.amplitudes()(1).real(), 1.0, 1e-15);

  StateVector z(1);
  apply_rz(z, 0, 0.7);
  EXPECT_NEAR(std::abs(z.amplitudes()(0) - std::exp(Complex(0, -0.35))), 0.0,
              1e-15);
}

TEST(Gates, RotationsMatchMatrixExponential) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> a(-7, 7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 3;
    const int q = trial % n;
    const double t = a(rng);
    StateVector s = random_state(n, rng);
    DenseVector in = s.amplitudes();
    apply_ry(s, q, t);
    ASSERT_LT((s.amplitudes() - embed(n, q, rot(pauli_y(), t)) * in).norm(), 1e-12);
    apply_rz(s, q, t);
    DenseVector mid = embed(n, q, rot(pauli_y(), t)) * in;
    ASSERT_LT((s.amplitudes() - embed(n, q, rot(pauli_z(), t)) * mid).norm(),
              1e-12);
  }
}

TEST(Gates, CnotExamples) {
  StateVector s = StateVector::basis_state(2, 0b10);
  apply_cnot(s, 0, 1);
  EXPECT_NEAR(std::abs(s.amplitudes()(0b11)), 1.0, 0.0);
  StateVector t(2);
  apply_cnot(t, 0, 1);
  EXPECT_NEAR(std::abs(t.amplitudes()(0)), 1.0, 0.0);
  EXPECT_THROW(apply_cnot(t, 1, 1), std::invalid_argument);
  EXPECT_THROW(apply_ry(t, 2, 0.1), std::out_of_range);
}

TEST(Gates, CnotIsInvolution) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    StateVector s = random_state(3, rng);
    DenseVector in = s.amplitudes();
    apply_cnot(s, 2, 0);
    apply_cnot(s, 2, 0);
    ASSERT_LT((s.amplitudes() - in).norm(), 1e-15);
  }
}

TEST(HamEvolution, Examples) {
  auto hx = HamEigen::from_pauli_sum(PauliSum::from_word("X"));
  StateVector s(1);
  apply_ham_evolution(s, hx, 0.0);
  EXPECT_NEAR(std::abs(s.amplitudes()(0) - 1.0), 0.0, 1e-14);
  apply_ham_evolution(s, hx, pi / 2);
  EXPECT_NEAR(std::abs(s.amplitudes()(1) - Complex(0, 1)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(s.amplitudes()(0)), 0.0, 1e-14);
}

TEST(HamEvolution, FlowAndInverse) {
  std::mt19937_64 rng(6);
  for (int n = 1; n <= 4; ++n) {
    auto h = tfim_hamiltonian(std::max(n, 2), Boundary::Closed);
    if (n == 1) h = PauliSum::from_word("X") + PauliSum::from_word("Z", 0.3);
    auto eig = HamEigen::from_pauli_sum(h);
    EXPECT_LT(eig.reconstruction_error(to_dense(h)), 1e-9);
    const int w = h.num_qubits();
    StateVector a = random_state(w, rng);
    StateVector b = a;
    apply_ham_evolution(a, eig, 0.3);
    apply_ham_evolution(a, eig, 0.45);
    apply_ham_evolution(b, eig, 0.75);
    ASSERT_LT((a.amplitudes() - b.amplitudes()).norm(), 1e-10);
    DenseVector start = b.amplitudes();
    apply_ham_evolution(b, eig, 1.3);
    apply_ham_evolution(b, eig, -1.3);
    ASSERT_LT((b.amplitudes() - start).norm(), 1e-10);
    ASSERT_NEAR(b.norm(), 1.0, 1e-10);
  }
}

TEST(HamEvolution, DimensionMismatch) {
  auto eig = HamEigen::from_pauli_sum(PauliSum::from_word("XX"));
  StateVector s(1);
  EXPECT_THROW(apply_ham_evolution(s, eig, 0.1), std::invalid_argument);
}

TEST(Encoding, SingleQubitIsDoubleAngle) {
  auto enc = encoding_circuit(1);
  for (int k = 0; k < 100; ++k) {
    const double x = 2 * pi * k / 100.0;
    StateVector s(1);
    std::vector<double> xs{x};
    enc.apply(s, {}, xs);
    ASSERT_NEAR(expectation_z0(s), std::cos(2 * x), 1e-12);
  }
}

TEST(Encoding, ZeroInputIsIdentity) {
  auto enc = encoding_circuit(2);
  StateVector s = StateVector::basis_state(2, 1);
  std::vector<double> xs{0.0, 0.0};
  enc.apply(s, {}, xs);
  EXPECT_NEAR(std::abs(s.amplitudes()(1)), 1.0, 1e-15);
}

TEST(Encoding, NormPreservedAndStructure) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0, 2 * pi);
  for (int n = 1; n <= 6; ++n) {
    auto enc = encoding_circuit(n);
    EXPECT_EQ(enc.num_trainable(), 0);
    EXPECT_EQ(enc.num_inputs(), n);
    EXPECT_EQ(static_cast<int>(enc.gates.size()), 2 * (n + (n - 1)));
    std::vector<double> x(n);
    for (auto& v : x) v = u(rng);
    StateVector s(n);
    enc.apply(s, {}, x);
    ASSERT_NEAR(s.norm(), 1.0, 1e-10);
  }
}

TEST(Target, Examples) {
  TargetAngles zero;
  auto v = target_unitary(2, zero);
  std::vector<double> x{0.0, 0.0};
  EXPECT_NEAR(target_label(x, v), 1.0, 1e-14);

  TargetAngles flip;
  flip.gammas = {pi, 0.0};
  std::vector<double> x1{0.0};
  EXPECT_NEAR(target_label(x1, target_unitary(1, flip)), -1.0, 1e-14);

  std::vector<double> two{1, 2}, one{1};
  EXPECT_THROW(target_unitary(1, two, two, one), std::invalid_argument);
}

TEST(Target, UnitaryForRandomAngles) {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> u(0, 2 * pi);
  for (int trial = 0; trial < 10; ++trial) {
    TargetAngles a{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
    auto v = target_unitary(3, a);
    DenseMatrix m = circuit_unitary(v, {}, {});
    ASSERT_LT((m.adjoint() * m - DenseMatrix::Identity(8, 8)).norm(), 1e-10);
  }
}

TEST(Target, GoldenLabel) {
  auto b = golden_list("target_n3_betas");
  auto g = golden_list("target_n3_gammas");
  auto nu = golden_list("target_n3_nus");
  auto x = golden_list("target_n3_x");
  const double want = golden_value("target_label_n3");
  EXPECT_NEAR(target_label(x, target_unitary(3, b, g, nu)), want, 1e-10);
}

TEST(Ansatz, Structure) {
  auto c = ansatz(4, Boundary::Open, 2, 10);
  EXPECT_EQ(c.num_trainable(), 20);
  EXPECT_EQ(c.num_fixed(), 0);
  EXPECT_EQ(c.layers * c.reps, 20);
  std::vector<double> zero(20, 0.0);
  DenseMatrix u = circuit_unitary(c, zero, {});
  EXPECT_LT((u - DenseMatrix::Identity(16, 16)).norm(), 1e-12);
  EXPECT_THROW(ansatz(2, Boundary::Open, 0, 10), std::invalid_argument);
}

TEST(Ansatz, OrderWithinLayerIsIrrelevant) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-1, 1);
  auto model = QnnModel::tfim(3, Boundary::Closed);
  std::vector<double> theta(20), x{0.3, 1.1, 2.5};
  for (auto& t : theta) t = u(rng);
  const double base = model.output(x, theta);
  std::shuffle(theta.begin(), theta.begin() + 10, rng);
  std::shuffle(theta.begin() + 10, theta.end(), rng);
  EXPECT_NEAR(model.output(x, theta), base, 1e-12);
}

TEST(Expectation, Examples) {
  EXPECT_EQ(expectation_z0(StateVector(3)), 1.0);
  EXPECT_EQ(expectation_z0(StateVector::basis_state(3, 0b100)), -1.0);
  DenseVector plus = DenseVector::Zero(4);
  plus(0) = plus(2) = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(expectation_z0(StateVector(2, plus)), 0.0, 1e-15);
}

TEST(Model, ZeroThetaReducesToEncoding) {
  auto model = QnnModel::tfim(1 + 1, Boundary::Open);
  std::vector<double> zero(20, 0.0), x{0.4, 1.9};
  StateVector s(2);
  model.encoder.apply(s, {}, x);
  EXPECT_NEAR(model_output(x, zero, model), expectation_z0(s), 1e-12);
}

TEST(Model, GoldenOutputs) {
  auto theta = golden_list("model_n2_theta");
  auto x = golden_list("model_n2_x");
  EXPECT_NEAR(model_output(x, theta, QnnModel::tfim(2, Boundary::Open)),
              golden_value("model_output_n2_open"), 1e-10);
  EXPECT_NEAR(model_output(x, theta, QnnModel::tfim(2, Boundary::Closed)),
              golden_value("model_output_n2_closed"), 1e-10);
  auto theta3 = golden_list("model_n3_theta");
  auto x3 = golden_list("model_n3_x");
  EXPECT_NEAR(model_output(x3, theta3, QnnModel::tfim(3, Boundary::Closed)),
              golden_value("model_output_n3_closed"), 1e-10);
}

TEST(Model, MatchesDenseChainOnRandomCircuits) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 3;
    std::vector<double> theta;
    auto c = random_circuit(n, 12, rng, theta);
    StateVector s(n);
    c.apply(s, theta, {});
    ASSERT_NEAR(s.norm(), 1.0, 1e-8);
    ASSERT_NEAR(expectation_z0(s), z0_expectation(n, circuit_unitary(c, theta, {})),
                1e-9);
  }
}

TEST(Model, OutputsBounded) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int n = 2; n <= 4; ++n) {
    auto model = QnnModel::tfim(n, Boundary::Open);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<double> theta(20), x(n);
      for (auto& t : theta) t = u(rng);
      for (auto& v : x) v = u(rng);
      double y = model.output(x, theta);
      ASSERT_LE(std::abs(y), 1.0 + 1e-12);
    }
  }
}

TEST(CircuitJson, RoundTrip) {
  auto c = ansatz(3, Boundary::Closed, 2, 3);
  auto back = circuit_from_json(circuit_to_json(c));
  EXPECT_EQ(circuit_to_json(back), circuit_to_json(c));
  auto enc = encoding_circuit(3);
  EXPECT_EQ(circuit_to_json(circuit_from_json(circuit_to_json(enc))),
            circuit_to_json(enc));
  EXPECT_THROW(circuit_from_json(R"({"n_qubits":1,"gates":[{"kind":"FOO"}]})"),
               std::exception);
}

TEST(StateVector, Limits) {
  EXPECT_THROW(StateVector(0), CapacityError);
  EXPECT_THROW(StateVector(25), CapacityError);
}

}  // namespace
}  // namespace dlab
