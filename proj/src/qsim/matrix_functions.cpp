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

#include "anyonsim/qsim/matrix_functions.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "anyonsim/errors.hpp"

namespace anyonsim::qsim {

namespace {

constexpr double kBranchTolerance = 1e-12;

}  // namespace

bool is_unitary(const CMatrix& m, double tol) { return unitarity_error(m) <= tol; }

UnitaryStep fractional_unitary(const UnitaryStep& u, int k) {
  if (k < 1) throw ContractViolation("k >= 1", std::to_string(k));
  if (k == 1) return u;
  // For a normal matrix the Schur form is diagonal, so U = Q D Q^dag.
  Eigen::ComplexSchur<CMatrix> schur(u.matrix());
  if (schur.info() != Eigen::Success) {
    throw ContractViolation("unitary root converges", u.label());
  }
  const CMatrix& q = schur.matrixU();
  const CMatrix& t = schur.matrixT();
  CVector root(t.rows());
  for (Eigen::Index i = 0; i < t.rows(); ++i) {
    double phase = std::arg(t(i, i));
    if (phase <= -std::numbers::pi + kBranchTolerance) phase = std::numbers::pi;
    root[i] = std::polar(1.0, phase / k);
  }
  CMatrix v = q * root.asDiagonal() * q.adjoint();
  return UnitaryStep(u.label() + "^(1/" + std::to_string(k) + ")", std::move(v), u.duration() / k);
}

double average_gate_fidelity(const CMatrix& u, const CMatrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols()) {
    throw ContractViolation("dimensions match", "gate fidelity of " + std::to_string(u.rows()) +
                                                    " and " + std::to_string(v.rows()) + " dim");
  }
  const double d = static_cast<double>(u.rows());
  const double overlap = std::norm((u.adjoint() * v).trace());
  return (overlap + d) / (d * d + d);
}

double average_gate_fidelity(const UnitaryStep& u, const UnitaryStep& v) {
  return average_gate_fidelity(u.matrix(), v.matrix());
}

}  // namespace anyonsim::qsim
