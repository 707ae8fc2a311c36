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

#include <span>
#include <string>

#include "anyonsim/qsim/pauli_string.hpp"
#include "anyonsim/qsim/state.hpp"
#include "anyonsim/qsim/types.hpp"

namespace anyonsim::qsim {

inline constexpr double kUnitaryTolerance = 1e-10;

/// A labeled dense unitary with the wall-clock duration of the step that realizes it.
class UnitaryStep {
 public:
  /// Checks U U^dag = I within kUnitaryTolerance and duration >= 0.
  UnitaryStep(std::string label, CMatrix matrix, double duration_s = 0.0);

  static UnitaryStep identity(int n_qubits, std::string label = "I", double duration_s = 0.0);

  const std::string& label() const { return label_; }
  const CMatrix& matrix() const { return matrix_; }
  double duration() const { return duration_; }
  int n_qubits() const { return n_qubits_; }

  UnitaryStep with_duration(double duration_s) const;
  UnitaryStep with_label(std::string label) const;
  UnitaryStep adjoint() const;

 private:
  std::string label_;
  CMatrix matrix_;
  double duration_;
  int n_qubits_;
};

/// Product of the steps applied left to right (first element acts first);
/// durations add up.
UnitaryStep compose(std::span<const UnitaryStep> steps, std::string label);

StateVector apply_unitary(const StateVector& state, const UnitaryStep& u);
DeviationOperator apply_unitary(const DeviationOperator& rho, const UnitaryStep& u);

/// <psi|P|psi>; P must be Hermitian.
double pauli_expectation(const StateVector& state, const PauliString& p);
/// Tr(rho P); P must be Hermitian.
double pauli_expectation(const DeviationOperator& rho, const PauliString& p);

double unitarity_error(const CMatrix& m);

}  // namespace anyonsim::qsim
