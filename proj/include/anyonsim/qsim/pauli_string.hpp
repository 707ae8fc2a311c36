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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "anyonsim/qsim/types.hpp"

namespace anyonsim::qsim {

enum class Commutation { commute, anticommute };

/// Signed tensor product of single-qubit Paulis, stored as symplectic bit masks.
///
/// Bit q of `x_mask`/`z_mask` refers to qubit q (0-based). The operator is
/// i^phase * P_0 (x) P_1 (x) ... with (x,z) = (0,0) I, (1,0) X, (0,1) Z, (1,1) Y.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int n_qubits);
  PauliString(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask, int phase = 0);

  static PauliString x_on(int n_qubits, std::span<const int> qubits);
  static PauliString z_on(int n_qubits, std::span<const int> qubits);
  static PauliString single(int n_qubits, int qubit, char pauli);

  /// Parses "+XIZY", "-iZZ", "XX" (leading sign/phase optional).
  static PauliString parse(std::string_view text);

  int n_qubits() const { return n_qubits_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  /// Exponent k of the global factor i^k, in [0, 4).
  int phase() const { return phase_; }

  char pauli_at(int qubit) const;
  std::vector<int> support() const;
  int weight() const;
  bool is_identity() const { return x_ == 0 && z_ == 0; }
  bool is_hermitian() const { return phase_ % 2 == 0; }

  PauliString operator*(const PauliString& other) const;
  PauliString operator-() const;
  PauliString with_phase(int phase) const;
  bool operator==(const PauliString& other) const = default;

  bool commutes_with(const PauliString& other) const;

  /// P|b> = coefficient(b) |b ^ flip_index_mask()>.
  std::uint64_t flip_index_mask() const;
  Complex coefficient(std::uint64_t basis_index) const;

  CVector apply(const CVector& state) const;
  CMatrix to_dense() const;

  std::string str() const;

 private:
  void check_same_size(const PauliString& other) const;

  int n_qubits_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int phase_ = 0;
};

Commutation commutation_parity(const PauliString& a, const PauliString& b);

/// Returns the signed Pauli string equal to `m` within `tol` (max-abs), if any.
std::optional<PauliString> recognize_pauli(const CMatrix& m, double tol = 1e-8);

}  // namespace anyonsim::qsim
