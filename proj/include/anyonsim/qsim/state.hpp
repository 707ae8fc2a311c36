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
#include <string_view>

#include "anyonsim/qsim/types.hpp"

namespace anyonsim::qsim {

inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kHermitianTolerance = 1e-12;

/// Normalized dense pure state on n qubits.
class StateVector {
 public:
  /// |0...0>
  explicit StateVector(int n_qubits);
  /// Takes ownership of `amplitudes`; length must be 2^n and norm 1 within kNormTolerance.
  StateVector(int n_qubits, CVector amplitudes);

  static StateVector basis(int n_qubits, std::uint64_t index);
  /// Basis state from a bit string such as "0000001" (first char = first qubit).
  static StateVector from_bits(std::string_view bits);
  /// Normalizes `v` and wraps it; throws if `v` is zero.
  static StateVector normalized(int n_qubits, const CVector& v);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return amplitudes_.size(); }
  const CVector& amplitudes() const { return amplitudes_; }
  Complex amplitude(std::uint64_t index) const { return amplitudes_[static_cast<Eigen::Index>(index)]; }
  double norm() const { return amplitudes_.norm(); }

  /// <this|other>
  Complex inner(const StateVector& other) const;

 private:
  int n_qubits_;
  CVector amplitudes_;
};

/// |<a|b>|, the overlap with the global phase quotiented out.
double overlap(const StateVector& a, const StateVector& b);

/// Copy of `v` with the phase of its largest-magnitude amplitude made real nonnegative.
CVector fix_global_phase(const CVector& v);

/// Traceless Hermitian deviation part of an ensemble density matrix.
class DeviationOperator {
 public:
  explicit DeviationOperator(int n_qubits);
  /// Validates dimension, Hermiticity and tracelessness (kHermitianTolerance, scaled by max |entry|).
  DeviationOperator(int n_qubits, CMatrix matrix);

  /// Diagonal operator; the entries must sum to zero.
  static DeviationOperator from_diagonal(int n_qubits, const Eigen::VectorXd& diagonal);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const CMatrix& matrix() const { return matrix_; }
  Complex operator()(std::uint64_t r, std::uint64_t c) const {
    return matrix_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }
  Eigen::VectorXd diagonal() const { return matrix_.diagonal().real(); }

  DeviationOperator operator+(const DeviationOperator& other) const;
  DeviationOperator operator*(double scale) const;

 private:
  int n_qubits_;
  CMatrix matrix_;
};

}  // namespace anyonsim::qsim
