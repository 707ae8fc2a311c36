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

#include "anyonsim/qsim/unitary.hpp"

#include <bit>

#include "anyonsim/errors.hpp"

namespace anyonsim::qsim {

namespace {

int qubits_for_dimension(Eigen::Index dim) {
  const auto d = static_cast<std::uint64_t>(dim);
  if (dim <= 0 || !std::has_single_bit(d)) {
    throw ContractViolation("unitary dimension is a power of two", std::to_string(dim));
  }
  return std::countr_zero(d);
}

void check_dims(Eigen::Index have, Eigen::Index want, const char* what) {
  if (have != want) {
    throw ContractViolation("dimensions match", std::string(what) + ": " + std::to_string(have) +
                                                    " vs " + std::to_string(want));
  }
}

void check_hermitian(const PauliString& p) {
  if (!p.is_hermitian()) {
    throw ContractViolation("Pauli observable is Hermitian", p.str() + " has an imaginary phase");
  }
}

}  // namespace

double unitarity_error(const CMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m * m.adjoint() - CMatrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

UnitaryStep::UnitaryStep(std::string label, CMatrix matrix, double duration_s)
    : label_(std::move(label)), matrix_(std::move(matrix)), duration_(duration_s) {
  if (matrix_.rows() != matrix_.cols()) {
    throw ContractViolation("unitary is square", label_);
  }
  n_qubits_ = qubits_for_dimension(matrix_.rows());
  const double err = unitarity_error(matrix_);
  if (err > kUnitaryTolerance) {
    throw ContractViolation("U U^dag = I", label_ + ": deviation " + std::to_string(err));
  }
  if (!(duration_ >= 0.0)) {
    throw ContractViolation("duration >= 0", label_ + ": " + std::to_string(duration_));
  }
}

UnitaryStep UnitaryStep::identity(int n_qubits, std::string label, double duration_s) {
  const auto dim = static_cast<Eigen::Index>(dimension(n_qubits));
  return UnitaryStep(std::move(label), CMatrix::Identity(dim, dim), duration_s);
}

UnitaryStep UnitaryStep::with_duration(double duration_s) const {
  UnitaryStep out = *this;
  if (!(duration_s >= 0.0)) throw ContractViolation("duration >= 0", label_);
  out.duration_ = duration_s;
  return out;
}

UnitaryStep UnitaryStep::with_label(std::string label) const {
  UnitaryStep out = *this;
  out.label_ = std::move(label);
  return out;
}

UnitaryStep UnitaryStep::adjoint() const {
  UnitaryStep out = *this;
  out.matrix_ = matrix_.adjoint();
  out.label_ = label_ + "^dag";
  return out;
}

UnitaryStep compose(std::span<const UnitaryStep> steps, std::string label) {
  if (steps.empty()) throw ContractViolation("non-empty gate list", label);
  CMatrix total = steps.front().matrix();
  double duration = steps.front().duration();
  for (std::size_t k = 1; k < steps.size(); ++k) {
    check_dims(steps[k].matrix().rows(), total.rows(), "compose");
    total = steps[k].matrix() * total;
    duration += steps[k].duration();
  }
  return UnitaryStep(std::move(label), std::move(total), duration);
}

StateVector apply_unitary(const StateVector& state, const UnitaryStep& u) {
  check_dims(u.matrix().cols(), state.dim(), "apply_unitary(state)");
  CVector out = u.matrix() * state.amplitudes();
  // Re-normalize away round-off; the unitarity check bounds the correction.
  out /= out.norm();
  return StateVector(state.n_qubits(), std::move(out));
}

DeviationOperator apply_unitary(const DeviationOperator& rho, const UnitaryStep& u) {
  check_dims(u.matrix().cols(), rho.dim(), "apply_unitary(rho)");
  CMatrix out = u.matrix() * rho.matrix() * u.matrix().adjoint();
  return DeviationOperator(rho.n_qubits(), std::move(out));
}

double pauli_expectation(const StateVector& state, const PauliString& p) {
  check_hermitian(p);
  check_dims(static_cast<Eigen::Index>(dimension(p.n_qubits())), state.dim(), "pauli_expectation");
  return state.amplitudes().dot(p.apply(state.amplitudes())).real();
}

double pauli_expectation(const DeviationOperator& rho, const PauliString& p) {
  check_hermitian(p);
  check_dims(static_cast<Eigen::Index>(dimension(p.n_qubits())), rho.dim(), "pauli_expectation");
  // Tr(rho P) = sum_b rho(b ^ flip, b)... with P|b> = c_b |b ^ flip>.
  const std::uint64_t flip = p.flip_index_mask();
  Complex total = 0.0;
  for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(rho.dim()); ++b) {
    total += rho(b, b ^ flip) * p.coefficient(b);
  }
  return total.real();
}

}  // namespace anyonsim::qsim
