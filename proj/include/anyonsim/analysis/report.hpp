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
#include <vector>

#include "anyonsim/analysis/phase.hpp"
#include "anyonsim/nmr/scenario.hpp"

namespace anyonsim::analysis {

struct Band {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double v) const { return v >= lo && v <= hi; }
};

/// Ideal phase of a scenario: 0 or 180 degrees.
double theory_theta(nmr::Scenario s);

/// Acceptance band for a scenario under a noise model. Noiseless runs must
/// match theory within 1e-6 degrees.
Band acceptance_band(nmr::Scenario s, nmr::NoiseModel noise);

struct ReportRow {
  nmr::Scenario scenario = nmr::Scenario::noBD;
  nmr::NoiseModel noise = nmr::NoiseModel::none;
  /// Seed label, e.g. "7" or "median".
  std::string seed;
  PhaseResult result;
  double theory_deg = 0.0;
  Band band;
  bool pass = false;
};

ReportRow make_report_row(nmr::Scenario s, nmr::NoiseModel noise, std::string seed, PhaseResult result);

/// Row-wise median of theta (and of alpha_sq, beta_sq) over several seeds.
ReportRow median_row(const std::vector<ReportRow>& rows);

/// Table of theory vs simulated values with pass flags.
std::vector<ReportRow> scenario_report(const std::vector<PhaseResult>& results, nmr::NoiseModel noise);

/// CSV with header scenario,noise,seed,alpha_sq,alpha_err,beta_sq,beta_err,
/// theta_deg,theta_err,theory_deg,band_lo,band_hi,neglected,pass
std::string report_csv(const std::vector<ReportRow>& rows);

}  // namespace anyonsim::analysis
