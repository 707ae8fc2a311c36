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

#include <optional>
#include <string>
#include <vector>

#include "anyonsim/kitaev/lattice.hpp"
#include "anyonsim/qsim/state.hpp"
#include "anyonsim/qsim/unitary.hpp"

namespace anyonsim::braiding {

using kitaev::LatticeSpec;
using qsim::PauliString;
using qsim::StateVector;

/// Defect locations as 0-based vertex and plaquette indices, ascending.
struct ExcitationConfig {
  std::vector<int> e_sites;
  std::vector<int> m_sites;
  bool empty() const { return e_sites.empty() && m_sites.empty(); }
  bool operator==(const ExcitationConfig&) const = default;
};

enum class LoopKind { x_string };

/// Closed path of an m particle, realized as X on each listed qubit.
class BraidLoop {
 public:
  BraidLoop() = default;
  BraidLoop(int n_qubits, std::vector<int> qubits, std::string name = "");

  LoopKind kind() const { return LoopKind::x_string; }
  const std::vector<int>& qubits() const { return qubits_; }
  const PauliString& op() const { return op_; }
  const std::string& name() const { return name_; }

 private:
  std::vector<int> qubits_;
  PauliString op_;
  std::string name_;
};

/// Stabilizer eigenvalue scan. Every expectation must be +1 or -1 within 1e-8.
ExcitationConfig detect_defects(const StateVector& state, const LatticeSpec& lattice);

/// True iff the loop operator commutes with every plaquette term.
bool validate_loop(const BraidLoop& loop, const LatticeSpec& lattice);

/// 0 or pi (radians): pi iff the loop anticommutes with the charge string.
double braiding_parity(const BraidLoop& loop, const PauliString& charge);

/// Charge string, m-pair creator and lattice of one braiding experiment.
struct BraidingSetup {
  LatticeSpec lattice;
  /// Z string that created the e particle(s).
  PauliString charge;
  /// X string that creates the m pair which is dragged around.
  PauliString m_creator;
};

/// Z1 charge and X5 creator on the seven-qubit lattice.
BraidingSetup seven_qubit_setup();

/// sqrt(C) = exp(i pi/4)(I - iC)/sqrt2 for a Hermitian Pauli string C.
qsim::CMatrix pauli_square_root(const PauliString& c);

/// sqrt(C) M |ground>: equal-weight superposition of the m pair with and
/// without the e charge.
StateVector create_superposition(const BraidingSetup& setup, const StateVector& ground);
StateVector create_superposition(const StateVector& ground);

/// Dense unitary for creation, braid along `loop` (identity if none) and annihilation.
qsim::UnitaryStep braid_step(const BraidingSetup& setup, const std::optional<BraidLoop>& loop,
                             double duration_s = 0.0);

/// Ground state -> create -> loop -> annihilate, applied to `ground`.
StateVector run_braiding_pipeline(const BraidingSetup& setup, const StateVector& ground,
                                  const std::optional<BraidLoop>& loop);
/// Seven-qubit pipeline from the model's ground state.
StateVector run_braiding_pipeline(const std::optional<BraidLoop>& loop);

/// Phase in [0, pi] read from the final state: |<L g|psi_d>| = |cos(theta/2)|,
/// where L g is the loop-transported ground state.
double evolved_braiding_phase(const BraidingSetup& setup, const StateVector& ground,
                              const BraidLoop& loop);

/// Loop multiplied by the star of vertex v.
BraidLoop deform(const BraidLoop& loop, const LatticeSpec& lattice, int vertex);

/// l0 = X4X5X6X7, l1 = X1X2X3X5X6X7, l2 = X1X2X3X4.
std::vector<BraidLoop> seven_qubit_loops();
BraidLoop seven_qubit_loop(int index);

}  // namespace anyonsim::braiding
