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
#include <vector>

#include "anyonsim/analysis/lorentzian_fit.hpp"
#include "anyonsim/analysis/phase.hpp"
#include "anyonsim/nmr/scenario.hpp"
#include "anyonsim/nmr/spectrum.hpp"

namespace anyonsim::cli {

/// Distinct peak offsets of the molecule (coincident peaks merge).
std::vector<double> fit_offsets(const nmr::MoleculeParams& params);

/// Labeled-PPS spectrum and its fitted single-peak intensity.
struct Reference {
  nmr::Spectrum spectrum;
  analysis::PeakFit fit;
  double intensity = 0.0;
};

Reference reference_run(const nmr::MoleculeParams& params, const nmr::GridOptions& grid);

struct ScenarioOutcome {
  nmr::Scenario scenario = nmr::Scenario::noBD;
  std::uint64_t seed = 0;
  nmr::Spectrum spectrum;
  analysis::PeakFit fit;
  analysis::PhaseResult result;
};

/// run_scenario -> readout spectrum -> trace -> fit -> alpha/beta -> theta.
ScenarioOutcome analyze_scenario(const nmr::ScenarioConfig& cfg, const nmr::MoleculeParams& params,
                                 const Reference& reference, const nmr::GridOptions& grid);

}  // namespace anyonsim::cli
