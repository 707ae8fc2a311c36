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

#include "anyonsim/cli/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "anyonsim/nmr/pps.hpp"

namespace anyonsim::cli {

namespace {

constexpr double kCoincidentHz = 1e-9;

analysis::PeakFit fit_spectrum(const nmr::Spectrum& spectrum, const nmr::MoleculeParams& params) {
  return analysis::fit_lorentzians(*spectrum.trace, fit_offsets(params));
}

}  // namespace

std::vector<double> fit_offsets(const nmr::MoleculeParams& params) {
  auto offsets = nmr::peak_offsets(params);
  std::sort(offsets.begin(), offsets.end());
  offsets.erase(std::unique(offsets.begin(), offsets.end(),
                            [](double x, double y) { return std::abs(x - y) <= kCoincidentHz; }),
                offsets.end());
  return offsets;
}

Reference reference_run(const nmr::MoleculeParams& params, const nmr::GridOptions& grid) {
  Reference ref;
  ref.spectrum = nmr::with_trace(nmr::readout_spectrum(nmr::labeled_pps(params), params), grid);
  ref.fit = fit_spectrum(ref.spectrum, params);
  ref.intensity = analysis::peak_at(ref.fit, nmr::analysis_frequencies(params).a).amplitude;
  return ref;
}

ScenarioOutcome analyze_scenario(const nmr::ScenarioConfig& cfg, const nmr::MoleculeParams& params,
                                 const Reference& reference, const nmr::GridOptions& grid) {
  ScenarioOutcome out;
  out.scenario = cfg.scenario;
  out.seed = cfg.rng_seed;
  const auto rho = nmr::run_scenario(cfg, params);
  out.spectrum = nmr::with_trace(nmr::readout_spectrum(rho, params), grid);
  out.fit = fit_spectrum(out.spectrum, params);
  const auto ab = analysis::estimate_alpha_beta(out.fit, nmr::analysis_frequencies(params), reference.intensity);
  out.result = analysis::make_phase_result(nmr::to_string(cfg.scenario), ab,
                                           analysis::neglected_partner(rho, params, reference.intensity));
  return out;
}

}  // namespace anyonsim::cli
