// Copyright 2026 The anyonsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "anyonsim/qsim/pauli_string.hpp"

#include <bit>
#include <cmath>

#include "anyonsim/errors.hpp"

namespace anyonsim::qsim {

namespace {

constexpr Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

int mod4(int v) { return ((v % 4) + 4) % 4; }

std::uint64_t low_mask(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

// Reverses the low n bits so qubit-ordered masks become basis-index masks.
std::uint64_t to_index_mask(std::uint64_t qubit_mask, int n) {
  std::uint64_t out = 0;
  for (int q = 0; q < n; ++q) {
    if ((qubit_mask >> q) & 1U) out |= basis_bit(n, q);
  }
  return out;
}

void check_qubit(int n, int q) {
  if (q < 0 || q >= n) {
    throw ContractViolation("qubit index in range",
                            "qubit " + std::to_string(q) + " outside [0, " + std::to_string(n) + ")");
  }
}

}  // namespace

PauliString::PauliString(int n_qubits) : PauliString(n_qubits, 0, 0, 0) {}

PauliString::PauliString(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask, int phase)
    : n_qubits_(n_qubits), x_(x_mask), z_(z_mask), phase_(mod4(phase)) {
  if (n_qubits < 0 || n_qubits > 63) {
    throw ContractViolation("qubit count in range", "n_qubits = " + std::to_string(n_qubits));
  }
  if ((x_mask | z_mask) & ~low_mask(n_qubits)) {
    throw ContractViolation("qubit index in range", "mask has bits beyond n_qubits");
  }
}

PauliString PauliString::x_on(int n_qubits, std::span<const int> qubits) {
  std::uint64_t mask = 0;
  for (int q : qubits) {
    check_qubit(n_qubits, q);
    mask ^= std::uint64_t{1} << q;
  }
  return PauliString(n_qubits, mask, 0);
}

PauliString PauliString::z_on(int n_qubits, std::span<const int> qubits) {
  std::uint64_t mask = 0;
  for (int q : qubits) {
    check_qubit(n_qubits, q);
    mask ^= std::uint64_t{1} << q;
  }
  return PauliString(n_qubits, 0, mask);
}

PauliString PauliString::single(int n_qubits, int qubit, char pauli) {
  check_qubit(n_qubits, qubit);
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  switch (pauli) {
    case 'I': return PauliString(n_qubits);
    case 'X': return PauliString(n_qubits, bit, 0);
    case 'Z': return PauliString(n_qubits, 0, bit);
    case 'Y': return PauliString(n_qubits, bit, bit);
    default:
      throw ContractViolation("pauli label", std::string("unknown Pauli '") + pauli + "'");
  }
}

PauliString PauliString::parse(std::string_view text) {
  int phase = 0;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase += 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase += 1;
    ++pos;
  }
  const auto body = text.substr(pos);
  const int n = static_cast<int>(body.size());
  std::uint64_t x = 0, z = 0;
  for (int q = 0; q < n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (body[q]) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Z': z |= bit; break;
      case 'Y': x |= bit; z |= bit; break;
      default:
        throw ContractViolation("pauli label", "cannot parse '" + std::string(text) + "'");
    }
  }
  return PauliString(n, x, z, phase);
}

char PauliString::pauli_at(int qubit) const {
  check_qubit(n_qubits_, qubit);
  const bool x = (x_ >> qubit) & 1U;
  const bool z = (z_ >> qubit) & 1U;
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

std::vector<int> PauliString::support() const {
  std::vector<int> out;
  for (int q = 0; q < n_qubits_; ++q) {
    if (((x_ | z_) >> q) & 1U) out.push_back(q);
  }
  return out;
}

int PauliString::weight() const { return std::popcount(x_ | z_); }

void PauliString::check_same_size(const PauliString& other) const {
  if (n_qubits_ != other.n_qubits_) {
    throw ContractViolation("equal qubit counts", std::to_string(n_qubits_) + " vs " +
                                                      std::to_string(other.n_qubits_));
  }
}

PauliString PauliString::operator*(const PauliString& other) const {
  check_same_size(other);
  // With sigma(x,z) = i^{xz} X^x Z^z, moving Z^{z1} past X^{x2} costs (-1)^{z1 x2}.
  const std::uint64_t x3 = x_ ^ other.x_;
  const std::uint64_t z3 = z_ ^ other.z_;
  const int exponent = phase_ + other.phase_ + std::popcount(x_ & z_) +
                       std::popcount(other.x_ & other.z_) + 2 * std::popcount(z_ & other.x_) -
                       std::popcount(x3 & z3);
  return PauliString(n_qubits_, x3, z3, exponent);
}

PauliString PauliString::operator-() const { return with_phase(phase_ + 2); }

PauliString PauliString::with_phase(int phase) const {
  return PauliString(n_qubits_, x_, z_, phase);
}

bool PauliString::commutes_with(const PauliString& other) const {
  check_same_size(other);
  return (std::popcount(x_ & other.z_) + std::popcount(z_ & other.x_)) % 2 == 0;
}

std::uint64_t PauliString::flip_index_mask() const { return to_index_mask(x_, n_qubits_); }

Complex PauliString::coefficient(std::uint64_t basis_index) const {
  const std::uint64_t z_index = to_index_mask(z_, n_qubits_);
  int exponent = phase_ + std::popcount(x_ & z_);
  if (std::popcount(z_index & basis_index) % 2) exponent += 2;
  return kIPowers[mod4(exponent)];
}

CVector PauliString::apply(const CVector& state) const {
  const std::uint64_t dim = dimension(n_qubits_);
  if (static_cast<std::uint64_t>(state.size()) != dim) {
    throw ContractViolation("dimensions match", "state length " + std::to_string(state.size()) +
                                                    " for " + std::to_string(n_qubits_) + " qubits");
  }
  const std::uint64_t flip = flip_index_mask();
  const std::uint64_t z_index = to_index_mask(z_, n_qubits_);
  const int base = phase_ + std::popcount(x_ & z_);
  CVector out(state.size());
  for (std::uint64_t b = 0; b < dim; ++b) {
    const int exponent = base + 2 * (std::popcount(z_index & b) % 2);
    out[static_cast<Eigen::Index>(b ^ flip)] = kIPowers[mod4(exponent)] * state[static_cast<Eigen::Index>(b)];
  }
  return out;
}

CMatrix PauliString::to_dense() const {
  const auto dim = static_cast<Eigen::Index>(dimension(n_qubits_));
  CMatrix m = CMatrix::Zero(dim, dim);
  const std::uint64_t flip = flip_index_mask();
  for (Eigen::Index b = 0; b < dim; ++b) {
    m(static_cast<Eigen::Index>(static_cast<std::uint64_t>(b) ^ flip), b) =
        coefficient(static_cast<std::uint64_t>(b));
  }
  return m;
}

std::string PauliString::str() const {
  static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  std::string out = kPrefix[phase_];
  for (int q = 0; q < n_qubits_; ++q) out += pauli_at(q);
  return out;
}

Commutation commutation_parity(const PauliString& a, const PauliString& b) {
  return a.commutes_with(b) ? Commutation::commute : Commutation::anticommute;
}

std::optional<PauliString> recognize_pauli(const CMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) return std::nullopt;
  const auto dim = static_cast<std::uint64_t>(m.rows());
  if (!std::has_single_bit(dim)) return std::nullopt;
  const int n = std::countr_zero(dim);

  // Column 0 fixes the flip pattern and the overall phase, the columns of
  // single-bit basis states fix the Z pattern. The full matrix is then checked.
  Eigen::Index row0 = 0;
  m.col(0).cwiseAbs().maxCoeff(&row0);
  const std::uint64_t flip_index = static_cast<std::uint64_t>(row0);
  const Complex c0 = m(row0, 0);
  if (std::abs(std::abs(c0) - 1.0) > tol) return std::nullopt;

  std::uint64_t x = 0, z = 0;
  for (int q = 0; q < n; ++q) {
    if (flip_index & basis_bit(n, q)) x |= std::uint64_t{1} << q;
  }
  for (int q = 0; q < n; ++q) {
    const auto col = static_cast<Eigen::Index>(basis_bit(n, q));
    const auto row = static_cast<Eigen::Index>(basis_bit(n, q) ^ flip_index);
    const Complex ratio = m(row, col) / c0;
    if (std::abs(ratio + 1.0) < 0.5) z |= std::uint64_t{1} << q;
  }
  // c0 = i^{phase + |x&z|}
  const int xz = std::popcount(x & z);
  for (int phase = 0; phase < 4; ++phase) {
    if (std::abs(kIPowers[mod4(phase + xz)] - c0) < tol) {
      PauliString candidate(n, x, z, phase);
      if ((candidate.to_dense() - m).cwiseAbs().maxCoeff() <= tol) return candidate;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace anyonsim::qsim
