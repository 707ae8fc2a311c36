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

#include "anyonsim/nmr/molecule.hpp"
#include "anyonsim/qsim/state.hpp"
#include "anyonsim/qsim/unitary.hpp"

namespace anyonsim::nmr {

using qsim::DeviationOperator;

/// Largest allowed |decoded / scale - target| entry.
inline constexpr double kPpsResidualTolerance = 1e-9;

/// Intermediate states of the cat-state labeled-PPS sequence.
struct PpsTrace {
  /// Z on the observed spin, the net input of the polarization steps.
  DeviationOperator initial;
  /// After the CNOT chain: Z on every spin.
  DeviationOperator encoded;
  /// After averaging the seven phase-cycled pi/2 rotations.
  DeviationOperator cycled;
  /// After decoding, before rescaling.
  DeviationOperator decoded;
  /// decoded = scale * target on the fitted direction.
  double scale = 0.0;
  double residual = 0.0;
  /// Rescaled result, equal to ideal_labeled_pps().
  DeviationOperator result;
};

/// 1/2 (|0...0><0...0| - |0..1..0><0..1..0|), the 1 sitting on the observed spin.
DeviationOperator ideal_labeled_pps(int n_spins, int observe_spin);

/// (|0...0><1...1| + |1...1><0...0|) / sqrt2
DeviationOperator cat_coherence(int n_spins);

/// CNOT chain carrying Z on the observed spin to Z on every spin.
qsim::UnitaryStep pps_encoding(int n_spins, int observe_spin);
/// CNOT(observe -> each other spin), then R_y(-pi/2) on the observed spin.
qsim::UnitaryStep pps_decoding(int n_spins, int observe_spin);
/// Axis angle of phase-cycle setting k: 2 pi k / n, less pi / (2n) when n is odd.
double phase_cycle_axis(int k, int n_settings);

/// Throws ContractViolation if the decoded state is off the target by more
/// than kPpsResidualTolerance.
PpsTrace labeled_pps_trace(const MoleculeParams& params);
DeviationOperator labeled_pps(const MoleculeParams& params);

}  // namespace anyonsim::nmr
