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

#include <string>

#include "anyonsim/qsim/pauli_string.hpp"
#include "anyonsim/qsim/types.hpp"
#include "anyonsim/qsim/unitary.hpp"

namespace anyonsim::qsim {

using Matrix2 = Eigen::Matrix2cd;

/// Embeds a 2x2 unitary acting on `qubit` (0-based) into n qubits.
UnitaryStep single_qubit(int n_qubits, int qubit, const Matrix2& u, std::string label = "U",
                         double duration_s = 0.0);

UnitaryStep hadamard(int n_qubits, int qubit, double duration_s = 0.0);
UnitaryStep cnot(int n_qubits, int control, int target, double duration_s = 0.0);
/// S = diag(1, i), the square root of Z.
UnitaryStep phase_gate(int n_qubits, int qubit, double duration_s = 0.0);
UnitaryStep pauli_unitary(const PauliString& p, double duration_s = 0.0);

/// exp(-i theta/2 (cos(phi) X + sin(phi) Y)) on one qubit.
Matrix2 rotation_matrix(double phi, double theta);
UnitaryStep rotation(int n_qubits, int qubit, double phi, double theta, double duration_s = 0.0);
UnitaryStep rx(int n_qubits, int qubit, double theta, double duration_s = 0.0);
UnitaryStep ry(int n_qubits, int qubit, double theta, double duration_s = 0.0);

/// The same rotation applied to every qubit.
UnitaryStep collective_rotation(int n_qubits, double phi, double theta, double duration_s = 0.0);

}  // namespace anyonsim::qsim
