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

#include "anyonsim/qsim/gates.hpp"

#include <cmath>
#include <numbers>

#include "anyonsim/errors.hpp"

namespace anyonsim::qsim {

namespace {

void check_qubit(int n, int q, const char* role) {
  if (q < 0 || q >= n) {
    throw ContractViolation("qubit index in range", std::string(role) + " qubit " + std::to_string(q) +
                                                        " outside [0, " + std::to_string(n) + ")");
  }
}

std::string qubit_label(const char* name, int q) { return std::string(name) + std::to_string(q + 1); }

}  // namespace

UnitaryStep single_qubit(int n_qubits, int qubit, const Matrix2& u, std::string label,
                         double duration_s) {
  check_qubit(n_qubits, qubit, "target");
  const auto dim = static_cast<Eigen::Index>(dimension(n_qubits));
  const std::uint64_t bit = basis_bit(n_qubits, qubit);
  CMatrix m = CMatrix::Zero(dim, dim);
  for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(dim); ++b) {
    const int in = (b & bit) ? 1 : 0;
    const std::uint64_t base = b & ~bit;
    for (int out = 0; out < 2; ++out) {
      const std::uint64_t row = out ? (base | bit) : base;
      m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(b)) = u(out, in);
    }
  }
  return UnitaryStep(std::move(label), std::move(m), duration_s);
}

UnitaryStep hadamard(int n_qubits, int qubit, double duration_s) {
  Matrix2 h;
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  return single_qubit(n_qubits, qubit, h, qubit_label("H", qubit), duration_s);
}

UnitaryStep cnot(int n_qubits, int control, int target, double duration_s) {
  check_qubit(n_qubits, control, "control");
  check_qubit(n_qubits, target, "target");
  if (control == target) {
    throw ContractViolation("control differs from target", std::to_string(control));
  }
  const auto dim = static_cast<Eigen::Index>(dimension(n_qubits));
  const std::uint64_t cbit = basis_bit(n_qubits, control);
  const std::uint64_t tbit = basis_bit(n_qubits, target);
  CMatrix m = CMatrix::Zero(dim, dim);
  for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(dim); ++b) {
    const std::uint64_t row = (b & cbit) ? (b ^ tbit) : b;
    m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(b)) = 1.0;
  }
  return UnitaryStep("CNOT" + std::to_string(control + 1) + "->" + std::to_string(target + 1),
                     std::move(m), duration_s);
}

UnitaryStep phase_gate(int n_qubits, int qubit, double duration_s) {
  Matrix2 s;
  s << 1, 0, 0, Complex(0, 1);
  return single_qubit(n_qubits, qubit, s, qubit_label("S", qubit), duration_s);
}

UnitaryStep pauli_unitary(const PauliString& p, double duration_s) {
  return UnitaryStep(p.str(), p.to_dense(), duration_s);
}

Matrix2 rotation_matrix(double phi, double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Complex e_minus = std::polar(1.0, -phi);
  const Complex e_plus = std::polar(1.0, phi);
  const Complex mi(0, -1);
  Matrix2 r;
  r << c, mi * s * e_minus, mi * s * e_plus, c;
  return r;
}

UnitaryStep rotation(int n_qubits, int qubit, double phi, double theta, double duration_s) {
  return single_qubit(n_qubits, qubit, rotation_matrix(phi, theta), qubit_label("R", qubit),
                      duration_s);
}

UnitaryStep rx(int n_qubits, int qubit, double theta, double duration_s) {
  return rotation(n_qubits, qubit, 0.0, theta, duration_s).with_label(qubit_label("Rx", qubit));
}

UnitaryStep ry(int n_qubits, int qubit, double theta, double duration_s) {
  return rotation(n_qubits, qubit, std::numbers::pi / 2.0, theta, duration_s)
      .with_label(qubit_label("Ry", qubit));
}

UnitaryStep collective_rotation(int n_qubits, double phi, double theta, double duration_s) {
  const Matrix2 r = rotation_matrix(phi, theta);
  CMatrix total = CMatrix::Identity(1, 1);
  for (int q = 0; q < n_qubits; ++q) {
    CMatrix next(total.rows() * 2, total.cols() * 2);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        next.block(i * total.rows(), j * total.cols(), total.rows(), total.cols()) = total * r(i, j);
      }
    }
    total = std::move(next);
  }
  return UnitaryStep("Rall", std::move(total), duration_s);
}

}  // namespace anyonsim::qsim
