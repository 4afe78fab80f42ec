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
#include <unsupported/Eigen/KroneckerProduct>

#include "dlab/dense.hpp"
#include "dlab/errors.hpp"
#include "dlab/pauli.hpp"
#include "test_support.hpp"

namespace dlab {
namespace {

using testing::random_integer_sum;
using testing::random_real_sum;
using testing::random_word;

// Kronecker expansion built from literal 2x2 matrices, independent of the
// bit-mask encoding used by to_dense.
DenseMatrix kron_word(std::string_view letters) {
  const Complex i(0, 1);
  DenseMatrix out = DenseMatrix::Identity(1, 1);
  for (char c : letters) {
    Eigen::Matrix2cd p;
    switch (c) {
      case 'I': p << 1, 0, 0, 1; break;
      case 'X': p << 0, 1, 1, 0; break;
      case 'Y': p << 0, -i, i, 0; break;
      default: p << 1, 0, 0, -1; break;
    }
    DenseMatrix next = Eigen::kroneckerProduct(out, p).eval();
    out = next;
  }
  return out;
}

DenseMatrix kron_sum(const PauliSum& s) {
  const int dim = 1 << s.num_qubits();
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  for (const auto& [w, c] : s.terms()) m += c * kron_word(w.str());
  return m;
}

Complex phase(int e) {
  static const Complex table[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[e & 3];
}

TEST(PauliMul, SingleQubitTable) {
  auto xy = pauli_mul(PauliString::parse("X"), PauliString::parse("Y"));
  EXPECT_EQ(xy.word.str(), "Z");
  EXPECT_EQ(xy.phase_exp, 1);
  auto xx = pauli_mul(PauliString::parse("X"), PauliString::parse("X"));
  EXPECT_TRUE(xx.word.is_identity());
  EXPECT_EQ(xx.phase_exp, 0);
  auto yx = pauli_mul(PauliString::parse("Y"), PauliString::parse("X"));
  EXPECT_EQ(yx.word.str(), "Z");
  EXPECT_EQ(yx.phase_exp, 3);
}

TEST(PauliMul, TwoQubitProductMatchesDense) {
  auto p = pauli_mul(PauliString::parse("XZ"), PauliString::parse("YZ"));
  EXPECT_EQ(p.word.str(), "ZI");
  EXPECT_EQ(p.phase_exp, 1);
  DenseMatrix expect = kron_word("XZ") * kron_word("YZ");
  EXPECT_LT((phase(p.phase_exp) * kron_word(p.word.str()) - expect).norm(),
            1e-12);
}

TEST(PauliMul, MismatchedQubitsThrow) {
  EXPECT_THROW(pauli_mul(PauliString::parse("X"), PauliString::parse("XX")),
               std::invalid_argument);
}

TEST(PauliMul, RandomProductsMatchDense) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 4;
    PauliString a{random_word(n, rng), static_cast<int>(rng() % 4)};
    PauliString b{random_word(n, rng), static_cast<int>(rng() % 4)};
    auto p = pauli_mul(a, b);
    DenseMatrix lhs = phase(p.phase_exp) * kron_word(p.word.str());
    DenseMatrix rhs = phase(a.phase_exp) * kron_word(a.word.str()) *
                      phase(b.phase_exp) * kron_word(b.word.str());
    ASSERT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12) << a.str() << b.str();
    ASSERT_LT((to_dense(p) - lhs).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(PauliWord, ParseAndOrder) {
  EXPECT_EQ(PauliWord::parse("IXYZ").str(), "IXYZ");
  EXPECT_THROW(PauliWord::parse("XQ"), std::invalid_argument);
  EXPECT_THROW(PauliWord::parse("x"), std::invalid_argument);
  EXPECT_LT(PauliWord::parse("IZ"), PauliWord::parse("XI"));
  EXPECT_LT(PauliWord::parse("XY"), PauliWord::parse("XZ"));
  EXPECT_LT(PauliWord::parse("YZ"), PauliWord::parse("ZI"));
}

TEST(PauliWord, CommuteOrAnticommute) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 3;
    auto a = random_word(n, rng);
    auto b = random_word(n, rng);
    DenseMatrix ab = kron_word(a.str()) * kron_word(b.str());
    DenseMatrix ba = kron_word(b.str()) * kron_word(a.str());
    if (a.commutes_with(b))
      ASSERT_LT((ab - ba).norm(), 1e-12);
    else
      ASSERT_LT((ab + ba).norm(), 1e-12);
  }
}

TEST(Commutator, SuTwoRelation) {
  auto c = commutator(PauliSum::from_word("X"), PauliSum::from_word("Y"));
  EXPECT_EQ(c.size(), 1u);
  EXPECT_DOUBLE_EQ(c.coefficient(PauliWord::parse("Z")), 2.0);
  EXPECT_TRUE(commutator(PauliSum::from_word("X"), PauliSum::from_word("X"))
                  .empty());
}

TEST(Commutator, IsingExample) {
  PauliSum zz = PauliSum::from_word("ZZ");
  PauliSum xs = PauliSum::from_word("XI") + PauliSum::from_word("IX");
  auto c = commutator(zz, xs);
  EXPECT_EQ(c.size(), 2u);
  EXPECT_DOUBLE_EQ(c.coefficient(PauliWord::parse("YZ")), 2.0);
  EXPECT_DOUBLE_EQ(c.coefficient(PauliWord::parse("ZY")), 2.0);
  DenseMatrix a = kron_sum(zz), b = kron_sum(xs);
  DenseMatrix expect = (a * b - b * a) / Complex(0, 1);
  EXPECT_LT((kron_sum(c) - expect).norm(), 1e-12);
}

TEST(Commutator, RandomSumsMatchDense) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 3;
    auto a = random_real_sum(n, 4, rng);
    auto b = random_real_sum(n, 4, rng);
    DenseMatrix da = kron_sum(a), db = kron_sum(b);
    DenseMatrix expect = (da * db - db * da) / Complex(0, 1);
    ASSERT_LT((kron_sum(commutator(a, b)) - expect).cwiseAbs().maxCoeff(),
              1e-12);
  }
}

TEST(Commutator, SkewSymmetryJacobiBilinearity) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 4;
    auto a = random_integer_sum(n, 3, rng);
    auto b = random_integer_sum(n, 3, rng);
    auto c = random_integer_sum(n, 3, rng);
    ASSERT_EQ(commutator(a, b), -commutator(b, a));
    auto jacobi = commutator(a, commutator(b, c)) -
                  commutator(commutator(a, b), c) -
                  commutator(b, commutator(a, c));
    ASSERT_TRUE(jacobi.empty()) << jacobi.to_text();
    ASSERT_EQ(commutator(a + b, c), commutator(a, c) + commutator(b, c));
    ASSERT_EQ(commutator(a * 3.0, c), commutator(a, c) * 3.0);
  }
}

TEST(Commutator, MismatchThrows) {
  EXPECT_THROW(commutator(PauliSum::from_word("X"), PauliSum::from_word("XX")),
               std::invalid_argument);
}

TEST(HsInner, Examples) {
  auto x = PauliSum::from_word("X");
  auto z = PauliSum::from_word("Z");
  EXPECT_DOUBLE_EQ(hs_inner(x, x), 1.0);
  EXPECT_DOUBLE_EQ(hs_inner(x, z), 0.0);
  EXPECT_DOUBLE_EQ(hs_inner(2.0 * x + 3.0 * z, x - z), -1.0);
}

TEST(HsInner, MatchesDenseTrace) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 3;
    auto a = random_real_sum(n, 5, rng);
    auto b = random_real_sum(n, 5, rng);
    Complex tr = (kron_sum(a) * kron_sum(b)).trace() / double(1 << n);
    ASSERT_NEAR(hs_inner(a, b), tr.real(), 1e-12);
    ASSERT_NEAR(tr.imag(), 0.0, 1e-12);
  }
}

TEST(PauliSum, IdentityDroppedAndPruned) {
  PauliSum s(2);
  s.add_term(PauliWord::parse("II"), 5.0);
  EXPECT_TRUE(s.empty());
  s.add_term(PauliWord::parse("XZ"), 1e-13);
  EXPECT_TRUE(s.empty());
  s.add_term(PauliWord::parse("XZ"), 1.0);
  s.add_term(PauliWord::parse("XZ"), -1.0);
  EXPECT_TRUE(s.empty());
}

TEST(PauliSum, TextRoundTrip) {
  auto s = PauliSum::from_text("# comment\n1.0 ZZI\n\n-0.5 XIY\n+2 IIZ\n");
  EXPECT_EQ(s.num_qubits(), 3);
  EXPECT_EQ(s.to_text(), "2.0 IIZ\n-0.5 XIY\n1.0 ZZI\n");
  EXPECT_EQ(PauliSum::from_text(s.to_text()), s);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    auto r = random_real_sum(3, 6, rng);
    ASSERT_EQ(PauliSum::from_text(r.to_text(), 3), r);
  }
}

TEST(PauliSum, TextErrors) {
  EXPECT_THROW(PauliSum::from_text("abc XX\n"), std::invalid_argument);
  EXPECT_THROW(PauliSum::from_text("1.0 XX\n1.0 XXX\n"), std::invalid_argument);
  EXPECT_THROW(PauliSum::from_text("1.0\n"), std::invalid_argument);
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(1.0), "1.0");
  EXPECT_EQ(format_double(-0.5), "-0.5");
  EXPECT_EQ(format_double(0.1), "0.1");
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    double v = u(rng);
    ASSERT_EQ(std::stod(format_double(v)), v);
  }
}

TEST(ToDense, Examples) {
  DenseMatrix z = to_dense(PauliSum::from_word("Z"));
  EXPECT_EQ(z, kron_word("Z"));
  DenseMatrix x = to_dense(PauliSum::from_word("X"));
  EXPECT_EQ(x, kron_word("X"));
  DenseMatrix zz = to_dense(PauliSum::from_word("ZZ"));
  Eigen::Vector4cd d(1, -1, -1, 1);
  EXPECT_EQ(zz, DenseMatrix(d.asDiagonal()));
}

TEST(ToDense, RandomSumsHermitianAndKronecker) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 4;
    auto s = random_real_sum(n, 6, rng);
    DenseMatrix m = to_dense(s);
    ASSERT_LT((m - m.adjoint()).norm(), 1e-12);
    ASSERT_LT((m - kron_sum(s)).norm(), 1e-12);
  }
}

TEST(ToDense, CapEnforced) {
  PauliSum s = PauliSum::from_word(std::string(11, 'Z'));
  EXPECT_THROW(to_dense(s), CapacityError);
  EXPECT_THROW(to_dense(PauliSum::from_word("ZZZ"), 2), CapacityError);
}

TEST(OperatorNorm, Examples) {
  EXPECT_NEAR(operator_norm(PauliSum::from_word("X")), 1.0, 1e-12);
  EXPECT_NEAR(operator_norm(PauliSum::from_word("ZZ", 3.0)), 3.0, 1e-12);
  EXPECT_NEAR(operator_norm(PauliSum::from_word("X") + PauliSum::from_word("Z")),
              std::sqrt(2.0), 1e-12);
}

TEST(OperatorNorm, MatchesSpectralNorm) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    auto s = random_real_sum(1 + trial % 4, 5, rng);
    ASSERT_NEAR(operator_norm(s), spectral_norm(kron_sum(s)), 1e-10);
  }
}

TEST(DensityMatrix, Properties) {
  EXPECT_NEAR(std::abs(random_density_matrix(1, 3)(0, 0) - 1.0), 0.0, 1e-15);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int dim = 1 << (seed % 5);
    DenseMatrix rho = random_density_matrix(dim, seed);
    ASSERT_NEAR(rho.trace().real(), 1.0, 1e-12);
    ASSERT_LT((rho - rho.adjoint()).norm(), 1e-12);
    Eigen::SelfAdjointEigenSolver<DenseMatrix> es(rho);
    ASSERT_GE(es.eigenvalues().minCoeff(), -1e-12);
  }
  EXPECT_EQ(random_density_matrix(4, 9), random_density_matrix(4, 9));
}

}  // namespace
}  // namespace dlab
