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
#include <optional>
#include <string>
#include <vector>

#include "anyonsim/braiding/braiding.hpp"
#include "anyonsim/kitaev/gd_circuit.hpp"
#include "anyonsim/nmr/molecule.hpp"
#include "anyonsim/nmr/pps.hpp"
#include "anyonsim/qsim/channels.hpp"

namespace anyonsim::nmr {

enum class Scenario { noBD, BD0, BD1, BD2 };
enum class NoiseModel { none, dephasing, gate_imperfection, both };

std::string to_string(Scenario s);
std::string to_string(NoiseModel n);
/// Throws ContractViolation for unknown names.
Scenario scenario_from_string(const std::string& text);
NoiseModel noise_from_string(const std::string& text);
std::vector<Scenario> all_scenarios();

/// True for BD1 and BD2, whose loops enclose the charge.
bool is_nontrivial(Scenario s);
/// Default loop of a scenario: none, l0, l1, l2.
std::optional<braiding::BraidLoop> scenario_loop(Scenario s);

struct StepDurations {
  double pps = 0.1;
  double gd = 0.06;
  double braid = 0.001;
  double mm = 0.06;
};

struct ScenarioConfig {
  Scenario scenario = Scenario::noBD;
  NoiseModel noise = NoiseModel::none;
  int slices_per_step = 16;
  double target_gate_fidelity = 0.99;
  std::uint64_t rng_seed = 0;
  StepDurations durations;
  std::vector<kitaev::CnotPair> gd_prefix = kitaev::default_gd_prefix();
  /// Replaces the scenario's default loop when set (ignored for noBD).
  std::optional<braiding::BraidLoop> loop;

  void validate() const;
  bool dephasing() const { return noise == NoiseModel::dephasing || noise == NoiseModel::both; }
  bool gate_imperfection() const {
    return noise == NoiseModel::gate_imperfection || noise == NoiseModel::both;
  }
};

/// Inverse of the first vertex block of the ground-state circuit, 60 ms.
qsim::UnitaryStep measurement_circuit();

/// The ideal step unitaries of a scenario in order, durations attached.
std::vector<qsim::UnitaryStep> scenario_steps(const ScenarioConfig& cfg);

/// Evolves one step: split into `slices` principal roots, each followed by
/// dephasing for duration / slices.
DeviationOperator evolve_with_dephasing(const DeviationOperator& rho, const qsim::UnitaryStep& u,
                                        int slices, const qsim::Dephaser& dephaser);

/// Labeled PPS -> GD -> braid (unless noBD) -> MM, under the configured noise.
DeviationOperator run_scenario(const ScenarioConfig& cfg, const MoleculeParams& params);

}  // namespace anyonsim::nmr
