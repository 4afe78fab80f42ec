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

#include "dlab/pauli.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dlab/errors.hpp"

namespace dlab {

namespace {

std::uint64_t qubit_bit(int n, int qubit) {
  return std::uint64_t{1} << (n - 1 - qubit);
}

// Letter code used for ordering: I=0, X=1, Y=2, Z=3.
int letter_code(std::uint64_t x, std::uint64_t z, std::uint64_t bit) {
  const int xb = (x & bit) ? 1 : 0;
  const int zb = (z & bit) ? 1 : 0;
  return 2 * zb + (xb ^ zb);
}

Pauli parse_letter(char c) {
  switch (c) {
    case 'I':
      return Pauli::I;
    case 'X':
      return Pauli::X;
    case 'Y':
      return Pauli::Y;
    case 'Z':
      return Pauli::Z;
    default:
      throw std::invalid_argument(std::string("invalid Pauli letter '") + c +
                                  "'");
  }
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

char pauli_char(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

PauliWord::PauliWord(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxWordQubits) {
    throw CapacityError("Pauli word width must be in [1, 64], got " +
                        std::to_string(num_qubits));
  }
  n_ = static_cast<std::uint8_t>(num_qubits);
}

PauliWord PauliWord::parse(std::string_view letters) {
  letters = trim(letters);
  PauliWord w(static_cast<int>(letters.size()));
  for (int q = 0; q < w.num_qubits(); ++q) w.set(q, parse_letter(letters[q]));
  return w;
}

PauliWord PauliWord::single(int num_qubits, int qubit, Pauli p) {
  PauliWord w(num_qubits);
  w.set(qubit, p);
  return w;
}

Pauli PauliWord::at(int qubit) const {
  if (qubit < 0 || qubit >= n_) throw std::out_of_range("qubit index");
  return static_cast<Pauli>(letter_code(x_, z_, qubit_bit(n_, qubit)));
}

void PauliWord::set(int qubit, Pauli p) {
  if (qubit < 0 || qubit >= n_) throw std::out_of_range("qubit index");
  const auto bit = qubit_bit(n_, qubit);
  x_ &= ~bit;
  z_ &= ~bit;
  if (p == Pauli::X || p == Pauli::Y) x_ |= bit;
  if (p == Pauli::Y || p == Pauli::Z) z_ |= bit;
}

int PauliWord::y_count() const { return std::popcount(x_ & z_); }

bool PauliWord::commutes_with(const PauliWord& other) const {
  // Symplectic form: anticommuting positions are counted mod 2.
  return std::popcount((x_ & other.z_) ^ (z_ & other.x_)) % 2 == 0;
}

std::string PauliWord::str() const {
  std::string s(n_, 'I');
  for (int q = 0; q < n_; ++q) s[q] = pauli_char(at(q));
  return s;
}

std::strong_ordering operator<=>(const PauliWord& a, const PauliWord& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  const std::uint64_t diff = (a.x_ ^ b.x_) | (a.z_ ^ b.z_);
  if (diff == 0) return std::strong_ordering::equal;
  // Highest differing bit is the lowest qubit index that differs.
  const std::uint64_t bit = std::uint64_t{1} << (63 - std::countl_zero(diff));
  return letter_code(a.x_, a.z_, bit) <=> letter_code(b.x_, b.z_, bit);
}

std::string PauliString::str() const {
  static constexpr const char* kPrefix[] = {"+", "+i", "-", "-i"};
  return kPrefix[phase_exp & 3] + word.str();
}

PauliString pauli_mul(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("pauli_mul: qubit count mismatch");
  }
  const auto ax = a.word.x_bits(), az = a.word.z_bits();
  const auto bx = b.word.x_bits(), bz = b.word.z_bits();
  const auto a_x = ax & ~az, a_y = ax & az, a_z = ~ax & az;
  const auto b_x = bx & ~bz, b_y = bx & bz, b_z = ~bx & bz;
  // XY = iZ, YZ = iX, ZX = iY; the reversed orders pick up -i.
  const auto plus = (a_x & b_y) | (a_y & b_z) | (a_z & b_x);
  const auto minus = (a_y & b_x) | (a_z & b_y) | (a_x & b_z);
  const int k = std::popcount(plus) - std::popcount(minus);

  PauliWord w(a.num_qubits());
  for (int q = 0; q < w.num_qubits(); ++q) {
    const auto bit = std::uint64_t{1} << (w.num_qubits() - 1 - q);
    const bool x = ((ax ^ bx) & bit) != 0;
    const bool z = ((az ^ bz) & bit) != 0;
    w.set(q, x ? (z ? Pauli::Y : Pauli::X) : (z ? Pauli::Z : Pauli::I));
  }
  return {w, (((a.phase_exp + b.phase_exp + k) % 4) + 4) % 4};
}

PauliSum::PauliSum(int num_qubits) : n_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxWordQubits) {
    throw CapacityError("Pauli sum width must be in [1, 64], got " +
                        std::to_string(num_qubits));
  }
}

PauliSum::PauliSum(const PauliWord& word, double coeff)
    : PauliSum(word.num_qubits()) {
  add_term(word, coeff);
}

PauliSum PauliSum::from_word(std::string_view letters, double coeff) {
  return PauliSum(PauliWord::parse(letters), coeff);
}

PauliSum PauliSum::from_text(std::string_view text, int num_qubits) {
  PauliSum out;
  if (num_qubits > 0) out = PauliSum(num_qubits);
  int line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    auto line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto sep = line.find_first_of(" \t");
    if (sep == std::string_view::npos) {
      throw std::invalid_argument("pauli text line " + std::to_string(line_no) +
                                  ": expected '<coefficient> <word>'");
    }
    auto coeff_text = line.substr(0, sep);
    const auto word_text = trim(line.substr(sep));
    if (!coeff_text.empty() && coeff_text.front() == '+') {
      coeff_text.remove_prefix(1);
    }
    double coeff = 0.0;
    const auto [ptr, ec] = std::from_chars(
        coeff_text.data(), coeff_text.data() + coeff_text.size(), coeff);
    if (ec != std::errc{} || ptr != coeff_text.data() + coeff_text.size()) {
      throw std::invalid_argument("pauli text line " + std::to_string(line_no) +
                                  ": bad coefficient '" +
                                  std::string(coeff_text) + "'");
    }
    const auto word = PauliWord::parse(word_text);
    if (out.n_ == 0) out = PauliSum(word.num_qubits());
    if (word.num_qubits() != out.n_) {
      throw std::invalid_argument("pauli text line " + std::to_string(line_no) +
                                  ": word width differs from previous terms");
    }
    out.add_term(word, coeff);
  }
  if (out.n_ == 0) {
    throw std::invalid_argument(
        "pauli text has no terms and no qubit count was given");
  }
  return out;
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  std::string s(buf, ptr);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::string PauliSum::to_text() const {
  std::string out;
  for (const auto& [word, coeff] : terms_) {
    out += format_double(coeff);
    out += ' ';
    out += word.str();
    out += '\n';
  }
  return out;
}

double PauliSum::coefficient(const PauliWord& word) const {
  const auto it = terms_.find(word);
  return it == terms_.end() ? 0.0 : it->second;
}

void PauliSum::add_term(const PauliWord& word, double coeff) {
  if (word.num_qubits() != n_) {
    throw std::invalid_argument("PauliSum::add_term: qubit count mismatch");
  }
  if (word.is_identity()) return;
  auto [it, inserted] = terms_.try_emplace(word, coeff);
  if (!inserted) it->second += coeff;
  if (std::abs(it->second) < kPruneTolerance) terms_.erase(it);
}

double PauliSum::norm() const { return std::sqrt(hs_inner(*this, *this)); }

double PauliSum::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& [w, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

void PauliSum::check_compatible(const PauliSum& other) const {
  if (n_ != other.n_) {
    throw std::invalid_argument("PauliSum: qubit count mismatch (" +
                                std::to_string(n_) + " vs " +
                                std::to_string(other.n_) + ")");
  }
}

void PauliSum::prune() {
  std::erase_if(terms_, [](const auto& kv) {
    return std::abs(kv.second) < kPruneTolerance;
  });
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  check_compatible(other);
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  check_compatible(other);
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

PauliSum& PauliSum::operator*=(double scale) {
  for (auto& [w, c] : terms_) c *= scale;
  prune();
  return *this;
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("commutator: qubit count mismatch");
  }
  std::map<PauliWord, double> acc;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      if (wa.commutes_with(wb)) continue;
      // [Pa, Pb] = 2 Pa Pb = 2 i^k Pc with k odd; i^k = i * (k == 1 ? 1 : -1).
      const auto prod = pauli_mul({wa, 0}, {wb, 0});
      const double sign = prod.phase_exp == 1 ? 1.0 : -1.0;
      acc[prod.word] += 2.0 * sign * ca * cb;
    }
  }
  PauliSum out(a.num_qubits());
  for (const auto& [w, c] : acc) out.add_term(w, c);
  return out;
}

double hs_inner(const PauliSum& a, const PauliSum& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("hs_inner: qubit count mismatch");
  }
  double sum = 0.0;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() && ib != b.terms().end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      sum += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return sum;
}

}  // namespace dlab
