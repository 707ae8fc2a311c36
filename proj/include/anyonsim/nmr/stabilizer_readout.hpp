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

#include <vector>

#include "anyonsim/qsim/pauli_string.hpp"
#include "anyonsim/qsim/unitary.hpp"

namespace anyonsim::nmr {

using qsim::PauliString;

/// U (Z_i Z_obs) U^dag for every spin i other than `observe_spin`, as signed
/// Pauli strings. Throws if a conjugate is not a Pauli string.
std::vector<PauliString> transform_stabilizers(const qsim::UnitaryStep& circuit, int observe_spin = 6);

struct SpinRotation {
  int spin = 0;
  /// 'x' or 'y'
  char axis = 'x';
  double angle = 0.0;
};

struct ReadoutPlan {
  std::vector<SpinRotation> rotations;
  /// Target after the rotations: Z or I on every spin but X or Y on the observed one.
  PauliString observable;
};

/// Rotations that turn `target` into an observable string; checked by dense
/// conjugation. Throws if the observed spin carries no Pauli factor.
ReadoutPlan plan_readout_pulse(const PauliString& target, int observe_spin);

/// Product of the planned single-spin rotations.
qsim::UnitaryStep readout_unitary(const ReadoutPlan& plan, int n_spins);

}  // namespace anyonsim::nmr
