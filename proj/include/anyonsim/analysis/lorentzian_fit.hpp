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

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "anyonsim/nmr/spectrum.hpp"

namespace anyonsim::analysis {

struct FittedPeak {
  double offset_hz = 0.0;
  double amplitude = 0.0;
  double amplitude_stderr = 0.0;
  /// FWHM, shared by every peak of a fit.
  double linewidth_hz = 0.0;
};

struct PeakFit {
  std::vector<FittedPeak> peaks;
  double linewidth_hz = 0.0;
  double linewidth_stderr = 0.0;
  /// sqrt of the residual sum of squares.
  double residual_norm = 0.0;
  int iterations = 0;
  /// Parameter covariance, amplitudes first then the half width (if free).
  Eigen::MatrixXd covariance;
};

struct FitOptions {
  int max_iterations = 200;
  double relative_tolerance = 1e-10;
  /// Holds the FWHM at this value instead of fitting it.
  std::optional<double> fixed_linewidth;
};

/// Least-squares fit of the real channel of `trace` with absorptive Lorentzians
/// at the given fixed offsets and one shared linewidth (damped Gauss-Newton).
/// Throws if the grid does not cover the offsets or the iteration cap is hit.
PeakFit fit_lorentzians(const nmr::Trace& trace, const std::vector<double>& known_offsets,
                        const FitOptions& options = {});

}  // namespace anyonsim::analysis
