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

#include <string>

#include "anyonsim/analysis/lorentzian_fit.hpp"
#include "anyonsim/nmr/molecule.hpp"
#include "anyonsim/nmr/spectrum.hpp"
#include "anyonsim/qsim/state.hpp"

namespace anyonsim::analysis {

struct Estimate {
  double value = 0.0;
  double stderr = 0.0;
};

/// Normalized intensities below this fraction of the reference count as zero.
inline constexpr double kIntensityFloor = 1e-9;

struct AlphaBeta {
  Estimate alpha_sq;
  Estimate beta_sq;
};

/// Orients the four analysis peaks by the observed-spin bit of their target
/// state (b and d are negative), then alpha_sq = 2 (I_a + I_b) / I_ref and
/// beta_sq = 2 (I_c + I_d) / I_ref, clamped at 0. Throws if a peak is missing.
AlphaBeta estimate_alpha_beta(const PeakFit& fit, const nmr::AnalysisFrequencies& freqs,
                              double reference_intensity);

/// Fitted amplitude at `offset_hz` (within 1e-6 Hz).
const FittedPeak& peak_at(const PeakFit& fit, double offset_hz);

/// 2 atan(sqrt(beta_sq / alpha_sq)) in degrees; alpha_sq = 0 gives 180.
double anyonic_phase(double alpha_sq, double beta_sq);

/// First-order propagation of the phase error, degrees. Requires positive values.
double propagate_phase_error(const Estimate& alpha_sq, const Estimate& beta_sq);

/// Largest population at an analysis peak's partner state (the element the
/// readout assumes to vanish), relative to the reference intensity.
double neglected_partner(const qsim::DeviationOperator& rho, const nmr::MoleculeParams& params,
                         double reference_intensity);

struct PhaseResult {
  std::string scenario;
  Estimate alpha_sq;
  Estimate beta_sq;
  Estimate theta_deg;
  double neglected = 0.0;
};

/// Combines the estimates into a PhaseResult. theta stderr is NaN when
/// either squared amplitude is zero.
PhaseResult make_phase_result(std::string scenario, const AlphaBeta& ab, double neglected = 0.0);

}  // namespace anyonsim::analysis
