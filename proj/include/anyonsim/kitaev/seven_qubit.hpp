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

#include <array>
#include <string>

#include "anyonsim/kitaev/lattice.hpp"
#include "anyonsim/qsim/state.hpp"

namespace anyonsim::kitaev {

/// The two-vertex, five-plaquette rough-boundary model on seven qubits.
class SevenQubitModel {
 public:
  static constexpr int kQubits = 7;

  SevenQubitModel();

  const LatticeSpec& lattice() const { return lattice_; }
  /// A1, A2, B1, ..., B5 in that order.
  const std::array<PauliString, 7>& stabilizers() const { return stabilizers_; }
  static const std::array<std::string, 7>& stabilizer_names();

  /// (|0000000> + |1111000> + |0001111> + |1110111>) / 2
  static qsim::StateVector ground_state();
  /// Z1 applied to the ground state (an e particle on vertex 1).
  static qsim::StateVector excited_state();

 private:
  LatticeSpec lattice_;
  std::array<PauliString, 7> stabilizers_;
};

}  // namespace anyonsim::kitaev
