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

#include "anyonsim/qsim/state.hpp"

#include <string>

#include "anyonsim/errors.hpp"

namespace anyonsim::qsim {

namespace {

void check_qubit_count(int n) {
  if (n < 0 || n > kMaxQubits) {
    throw ContractViolation("qubit count in range",
                            "n_qubits = " + std::to_string(n) + ", dense limit is " +
                                std::to_string(kMaxQubits));
  }
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  check_qubit_count(n_qubits);
  amplitudes_ = CVector::Zero(static_cast<Eigen::Index>(dimension(n_qubits)));
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, CVector amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  check_qubit_count(n_qubits);
  if (static_cast<std::uint64_t>(amplitudes_.size()) != dimension(n_qubits)) {
    throw ContractViolation("state length is 2^n_qubits",
                            "got " + std::to_string(amplitudes_.size()) + " amplitudes for " +
                                std::to_string(n_qubits) + " qubits");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > kNormTolerance) {
    throw ContractViolation("state norm is 1", "norm = " + std::to_string(amplitudes_.norm()));
  }
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  check_qubit_count(n_qubits);
  if (index >= dimension(n_qubits)) {
    throw ContractViolation("basis index in range", std::to_string(index));
  }
  CVector v = CVector::Zero(static_cast<Eigen::Index>(dimension(n_qubits)));
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return StateVector(n_qubits, std::move(v));
}

StateVector StateVector::from_bits(std::string_view bits) {
  const int n = static_cast<int>(bits.size());
  std::uint64_t index = 0;
  for (int q = 0; q < n; ++q) {
    if (bits[q] == '1') {
      index |= basis_bit(n, q);
    } else if (bits[q] != '0') {
      throw ContractViolation("bit string", "'" + std::string(bits) + "' is not binary");
    }
  }
  return basis(n, index);
}

StateVector StateVector::normalized(int n_qubits, const CVector& v) {
  const double norm = v.norm();
  if (norm < 1e-300) throw ContractViolation("state norm is 1", "cannot normalize a zero vector");
  return StateVector(n_qubits, v / norm);
}

Complex StateVector::inner(const StateVector& other) const {
  if (other.dim() != dim()) {
    throw ContractViolation("dimensions match", "inner product of different sizes");
  }
  return amplitudes_.dot(other.amplitudes_);
}

double overlap(const StateVector& a, const StateVector& b) { return std::abs(a.inner(b)); }

CVector fix_global_phase(const CVector& v) {
  if (v.size() == 0) return v;
  Eigen::Index k = 0;
  v.cwiseAbs().maxCoeff(&k);
  const double mag = std::abs(v[k]);
  if (mag == 0.0) return v;
  return v * (std::conj(v[k]) / mag);
}

DeviationOperator::DeviationOperator(int n_qubits) : n_qubits_(n_qubits) {
  check_qubit_count(n_qubits);
  const auto dim = static_cast<Eigen::Index>(dimension(n_qubits));
  matrix_ = CMatrix::Zero(dim, dim);
}

DeviationOperator::DeviationOperator(int n_qubits, CMatrix matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
  check_qubit_count(n_qubits);
  const auto dim = static_cast<Eigen::Index>(dimension(n_qubits));
  if (matrix_.rows() != dim || matrix_.cols() != dim) {
    throw ContractViolation("deviation matrix is 2^n x 2^n",
                            std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()));
  }
  const double scale = std::max(1.0, matrix_.cwiseAbs().maxCoeff());
  const double herm = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTolerance * scale) {
    throw ContractViolation("deviation matrix is Hermitian", "max |rho - rho^dag| = " + std::to_string(herm));
  }
  const double trace = std::abs(matrix_.trace());
  if (trace > kHermitianTolerance * scale * 10) {
    throw ContractViolation("deviation matrix is traceless", "|tr rho| = " + std::to_string(trace));
  }
  // Remove round-off so repeated evolution does not accumulate anti-Hermitian drift.
  matrix_ = (matrix_ + matrix_.adjoint()).eval() * 0.5;
}

DeviationOperator DeviationOperator::from_diagonal(int n_qubits, const Eigen::VectorXd& diagonal) {
  return DeviationOperator(n_qubits, diagonal.cast<Complex>().asDiagonal().toDenseMatrix());
}

DeviationOperator DeviationOperator::operator+(const DeviationOperator& other) const {
  if (other.dim() != dim()) throw ContractViolation("dimensions match", "operator sum");
  return DeviationOperator(n_qubits_, matrix_ + other.matrix_);
}

DeviationOperator DeviationOperator::operator*(double scale) const {
  return DeviationOperator(n_qubits_, matrix_ * scale);
}

}  // namespace anyonsim::qsim
