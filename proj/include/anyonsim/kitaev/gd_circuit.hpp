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

#include <utility>
#include <vector>

#include "anyonsim/qsim/unitary.hpp"

namespace anyonsim::kitaev {

/// (control, target), 0-based.
using CnotPair = std::pair<int, int>;

/// CNOT(7->2), CNOT(7->3): applied before the vertex blocks, they leave
/// |0000000> alone and move the |0000001> branch of the labeled PPS away from
/// the readout configurations used for phase extraction.
std::vector<CnotPair> default_gd_prefix();

inline constexpr double kGdDuration = 0.06;

struct GdCircuit {
  std::vector<CnotPair> prefix;
  /// Hadamard and CNOT gates in application order.
  std::vector<qsim::UnitaryStep> gates;
  /// Product of `gates`, with the 60 ms pulse duration attached.
  qsim::UnitaryStep composite;
  /// CNOT(1->4) CNOT(1->3) CNOT(1->2) H(1)
  qsim::UnitaryStep a1_block;
  /// CNOT(5->7) CNOT(5->6) CNOT(5->4) H(5)
  qsim::UnitaryStep a2_block;
};

/// Ground-state preparation circuit: composite |0000000> = seven-qubit ground state.
GdCircuit gd_circuit(const std::vector<CnotPair>& prefix = default_gd_prefix());

}  // namespace anyonsim::kitaev
