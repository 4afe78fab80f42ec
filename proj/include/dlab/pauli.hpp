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

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace dlab {

/// Coefficients with magnitude below this are dropped after every operation.
inline constexpr double kPruneTolerance = 1e-12;

/// Widest word representable by the bit-packed encoding.
inline constexpr int kMaxWordQubits = 64;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);

/**
 * A phase-free tensor product of single-qubit Paulis.
 *
 * Stored in the symplectic (x|z) form: qubit q lives at bit (n - 1 - q) of
 * both masks, so qubit 0 is the most significant position. This matches the
 * basis-index convention of the dense simulator.
 *
 * Ordering is lexicographic over the letter string with I < X < Y < Z, which
 * is the canonical serialization order.
 */
class PauliWord {
 public:
  PauliWord() = default;
  explicit PauliWord(int num_qubits);

  /// Parses a word over {I, X, Y, Z}; length gives the qubit count.
  static PauliWord parse(std::string_view letters);
  static PauliWord single(int num_qubits, int qubit, Pauli p);

  int num_qubits() const { return n_; }
  Pauli at(int qubit) const;
  void set(int qubit, Pauli p);
  bool is_identity() const { return x_ == 0 && z_ == 0; }
  std::uint64_t x_bits() const { return x_; }
  std::uint64_t z_bits() const { return z_; }
  int y_count() const;

  bool commutes_with(const PauliWord& other) const;
  std::string str() const;

  friend bool operator==(const PauliWord&, const PauliWord&) = default;
  friend std::strong_ordering operator<=>(const PauliWord& a,
                                          const PauliWord& b);

 private:
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  std::uint8_t n_ = 0;
};

/// A Pauli word with a phase i^phase_exp, phase_exp in {0, 1, 2, 3}.
struct PauliString {
  PauliWord word;
  int phase_exp = 0;

  static PauliString parse(std::string_view letters) {
    return {PauliWord::parse(letters), 0};
  }
  int num_qubits() const { return word.num_qubits(); }
  /// "+XYZ", "-iIZ", ...
  std::string str() const;
  friend bool operator==(const PauliString&, const PauliString&) = default;
};

/// Product a*b with the accumulated phase. Throws on qubit-count mismatch.
PauliString pauli_mul(const PauliString& a, const PauliString& b);

/**
 * Real-weighted sum of traceless Pauli words, read as a Hermitian operator H.
 *
 * The associated Lie-algebra element is iH; it is never stored. Identity
 * terms are dropped on insertion and coefficients below kPruneTolerance are
 * pruned, so every stored sum is canonical.
 */
class PauliSum {
 public:
  using TermMap = std::map<PauliWord, double>;

  PauliSum() = default;
  explicit PauliSum(int num_qubits);
  PauliSum(const PauliWord& word, double coeff);

  /// Parses a whitespace-separated letter string, e.g. "ZZI".
  static PauliSum from_word(std::string_view letters, double coeff = 1.0);

  /// Parses the `<coefficient> <word>` line format. Blank lines and lines
  /// starting with '#' are skipped. `num_qubits` is required when the text
  /// may contain no terms.
  static PauliSum from_text(std::string_view text, int num_qubits = 0);

  /// One `<coefficient> <word>` line per term, lexicographic by word. The
  /// coefficient uses the shortest round-trip decimal form.
  std::string to_text() const;

  int num_qubits() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  double coefficient(const PauliWord& word) const;

  void add_term(const PauliWord& word, double coeff);

  /// sqrt(hs_inner(*this, *this)).
  double norm() const;
  /// Largest absolute coefficient, 0 for the empty sum.
  double max_abs_coefficient() const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(double scale);
  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, double s) { return a *= s; }
  friend PauliSum operator*(double s, PauliSum a) { return a *= s; }
  friend PauliSum operator-(PauliSum a) { return a *= -1.0; }

  friend bool operator==(const PauliSum&, const PauliSum&) = default;

 private:
  void check_compatible(const PauliSum& other) const;
  void prune();

  TermMap terms_;
  int n_ = 0;
};

/**
 * Hermitian representative C of the bracket, defined by [A, B] = i C.
 *
 * Only anticommuting word pairs contribute; each contributes a real
 * coefficient, so nested brackets stay in the real span. Up to an overall
 * sign this is also the representative of [iA, iB].
 */
PauliSum commutator(const PauliSum& a, const PauliSum& b);

/// Tr[a b] / 2^n, i.e. the dot product of coefficient vectors.
double hs_inner(const PauliSum& a, const PauliSum& b);

/// Shortest decimal string that parses back to the same double.
std::string format_double(double value);

}  // namespace dlab
