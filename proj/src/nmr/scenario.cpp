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

#include "anyonsim/nmr/scenario.hpp"

#include "anyonsim/errors.hpp"
#include "anyonsim/nmr/perturb.hpp"
#include "anyonsim/qsim/channels.hpp"
#include "anyonsim/qsim/matrix_functions.hpp"

namespace anyonsim::nmr {

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::noBD: return "noBD";
    case Scenario::BD0: return "BD0";
    case Scenario::BD1: return "BD1";
    case Scenario::BD2: return "BD2";
  }
  return "?";
}

std::string to_string(NoiseModel n) {
  switch (n) {
    case NoiseModel::none: return "none";
    case NoiseModel::dephasing: return "dephasing";
    case NoiseModel::gate_imperfection: return "gate_imperfection";
    case NoiseModel::both: return "both";
  }
  return "?";
}

Scenario scenario_from_string(const std::string& text) {
  for (Scenario s : all_scenarios()) {
    if (to_string(s) == text) return s;
  }
  throw ContractViolation("scenario is noBD, BD0, BD1 or BD2", "'" + text + "'");
}

NoiseModel noise_from_string(const std::string& text) {
  for (NoiseModel n : {NoiseModel::none, NoiseModel::dephasing, NoiseModel::gate_imperfection, NoiseModel::both}) {
    if (to_string(n) == text) return n;
  }
  throw ContractViolation("noise is none, dephasing, gate_imperfection or both", "'" + text + "'");
}

std::vector<Scenario> all_scenarios() { return {Scenario::noBD, Scenario::BD0, Scenario::BD1, Scenario::BD2}; }

bool is_nontrivial(Scenario s) { return s == Scenario::BD1 || s == Scenario::BD2; }

std::optional<braiding::BraidLoop> scenario_loop(Scenario s) {
  switch (s) {
    case Scenario::noBD: return std::nullopt;
    case Scenario::BD0: return braiding::seven_qubit_loop(0);
    case Scenario::BD1: return braiding::seven_qubit_loop(1);
    case Scenario::BD2: return braiding::seven_qubit_loop(2);
  }
  return std::nullopt;
}

void ScenarioConfig::validate() const {
  if (slices_per_step < 1) throw ContractViolation("slices_per_step >= 1", std::to_string(slices_per_step));
  if (!(target_gate_fidelity > 0.0 && target_gate_fidelity <= 1.0)) {
    throw ContractViolation("0 < target fidelity <= 1", std::to_string(target_gate_fidelity));
  }
  for (double d : {durations.pps, durations.gd, durations.braid, durations.mm}) {
    if (!(d > 0.0)) throw ContractViolation("durations positive", std::to_string(d));
  }
}

qsim::UnitaryStep measurement_circuit() {
  return kitaev::gd_circuit({}).a1_block.adjoint().with_label("MM").with_duration(kitaev::kGdDuration);
}

std::vector<qsim::UnitaryStep> scenario_steps(const ScenarioConfig& cfg) {
  std::vector<qsim::UnitaryStep> steps;
  steps.push_back(kitaev::gd_circuit(cfg.gd_prefix).composite.with_duration(cfg.durations.gd));
  if (cfg.scenario != Scenario::noBD) {
    const auto loop = cfg.loop ? cfg.loop : scenario_loop(cfg.scenario);
    steps.push_back(braiding::braid_step(braiding::seven_qubit_setup(), loop, cfg.durations.braid));
  }
  steps.push_back(measurement_circuit().with_duration(cfg.durations.mm));
  return steps;
}

DeviationOperator evolve_with_dephasing(const DeviationOperator& rho, const qsim::UnitaryStep& u,
                                        int slices, const qsim::Dephaser& dephaser) {
  const qsim::UnitaryStep slice = qsim::fractional_unitary(u, slices);
  DeviationOperator out = rho;
  for (int k = 0; k < slices; ++k) {
    out = dephaser.apply(qsim::apply_unitary(out, slice), slice.duration());
  }
  return out;
}

DeviationOperator run_scenario(const ScenarioConfig& cfg, const MoleculeParams& params) {
  cfg.validate();
  params.validate();
  if (params.n_spins != 7) {
    throw ContractViolation("molecule has seven spins", std::to_string(params.n_spins));
  }
  static constexpr const char* kStageTags[] = {"gd", "braid", "mm"};
  const qsim::Dephaser dephaser(params.t2);

  DeviationOperator rho = labeled_pps(params);
  const auto steps = scenario_steps(cfg);
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const bool last = k + 1 == steps.size();
    const char* tag = last ? kStageTags[2] : kStageTags[k];
    qsim::UnitaryStep u = steps[k];
    if (cfg.gate_imperfection()) {
      u = perturb_unitary(u, cfg.target_gate_fidelity, stage_seed(cfg.rng_seed, tag));
    }
    rho = cfg.dephasing() ? evolve_with_dephasing(rho, u, cfg.slices_per_step, dephaser)
                          : qsim::apply_unitary(rho, u);
  }
  return rho;
}

}  // namespace anyonsim::nmr
