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

#include "anyonsim/nmr/stabilizer_readout.hpp"

#include <numbers>

#include "anyonsim/errors.hpp"
#include "anyonsim/qsim/gates.hpp"

namespace anyonsim::nmr {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

PauliString conjugate(const qsim::CMatrix& u, const PauliString& p) {
  const qsim::CMatrix sandwich = u * p.to_dense() * u.adjoint();
  const auto recognized = qsim::recognize_pauli(sandwich);
  if (!recognized) throw ContractViolation("conjugate is a Pauli string", p.str());
  return *recognized;
}

}  // namespace

std::vector<PauliString> transform_stabilizers(const qsim::UnitaryStep& circuit, int observe_spin) {
  const int n = circuit.n_qubits();
  if (observe_spin < 0 || observe_spin >= n) {
    throw ContractViolation("observe spin in range", std::to_string(observe_spin + 1));
  }
  std::vector<PauliString> out;
  for (int i = 0; i < n; ++i) {
    if (i == observe_spin) continue;
    const int pair[] = {i, observe_spin};
    out.push_back(conjugate(circuit.matrix(), PauliString::z_on(n, pair)));
  }
  return out;
}

qsim::UnitaryStep readout_unitary(const ReadoutPlan& plan, int n_spins) {
  std::vector<qsim::UnitaryStep> gates{qsim::UnitaryStep::identity(n_spins)};
  for (const auto& r : plan.rotations) {
    gates.push_back(r.axis == 'x' ? qsim::rx(n_spins, r.spin, r.angle) : qsim::ry(n_spins, r.spin, r.angle));
  }
  return qsim::compose(gates, "readout");
}

ReadoutPlan plan_readout_pulse(const PauliString& target, int observe_spin) {
  const int n = target.n_qubits();
  if (observe_spin < 0 || observe_spin >= n) {
    throw ContractViolation("observe spin in range", std::to_string(observe_spin + 1));
  }
  if (target.pauli_at(observe_spin) == 'I') {
    throw ContractViolation("target has a Pauli factor on the observed spin", target.str());
  }
  ReadoutPlan plan;
  for (int q = 0; q < n; ++q) {
    const char p = target.pauli_at(q);
    if (q == observe_spin) {
      // R_y(pi/2) Z R_y(-pi/2) = X
      if (p == 'Z') plan.rotations.push_back({q, 'y', kHalfPi});
    } else if (p == 'X') {
      // R_y(-pi/2) X R_y(pi/2) = Z
      plan.rotations.push_back({q, 'y', -kHalfPi});
    } else if (p == 'Y') {
      // R_x(pi/2) Y R_x(-pi/2) = Z
      plan.rotations.push_back({q, 'x', kHalfPi});
    }
  }
  const PauliString result = conjugate(readout_unitary(plan, n).matrix(), target);
  for (int q = 0; q < n; ++q) {
    const char p = result.pauli_at(q);
    const bool ok = q == observe_spin ? (p == 'X' || p == 'Y') : (p == 'Z' || p == 'I');
    if (!ok) throw ContractViolation("readout plan yields an observable string", result.str());
  }
  plan.observable = result;
  return plan;
}

}  // namespace anyonsim::nmr
