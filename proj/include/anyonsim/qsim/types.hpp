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

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace anyonsim::qsim {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

inline constexpr int kMaxQubits = 12;

// Qubit q (0-based) is bit (n - 1 - q) of a computational basis index, so the
// first qubit is the most significant bit and |q1 q2 ... qn> reads left to right.
constexpr std::uint64_t basis_bit(int n_qubits, int qubit) {
  return std::uint64_t{1} << (n_qubits - 1 - qubit);
}

constexpr std::uint64_t dimension(int n_qubits) { return std::uint64_t{1} << n_qubits; }

}  // namespace anyonsim::qsim
