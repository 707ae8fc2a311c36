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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "anyonsim/nmr/molecule.hpp"
#include "anyonsim/qsim/state.hpp"

namespace anyonsim::nmr {

struct Peak {
  /// Hz relative to the observed spin's chemical shift.
  double offset_hz = 0.0;
  qsim::Complex amplitude;
  /// Full width at half maximum, Hz.
  double linewidth_hz = 0.0;
  /// Bits of the other spins in ascending spin order, first spin most significant.
  std::uint32_t configuration = 0;
};

/// Absorptive trace sampled on a frequency grid.
struct Trace {
  std::vector<double> frequency_hz;
  std::vector<double> real;
  std::vector<double> imag;
};

struct Spectrum {
  std::vector<Peak> peaks;
  std::optional<Trace> trace;
};

struct GridOptions {
  double points_per_fwhm = 32.0;
  double margin_fwhm = 10.0;
};

/// 1 / (pi T2) of the observed spin.
double default_linewidth(const MoleculeParams& params);

/// 1/2 sum_i J_i,obs z_i with z = +1 for bit 0 and -1 for bit 1.
double peak_offset(const MoleculeParams& params, std::uint32_t configuration);
/// Offsets of every configuration of the other spins, indexed by configuration.
std::vector<double> peak_offsets(const MoleculeParams& params);

/// Rotates the observed spin by pi/2 about y and emits one peak per
/// configuration of the other spins. Its real part is the population
/// difference (q_obs = 0) - (q_obs = 1) of the unrotated state.
Spectrum readout_spectrum(const qsim::DeviationOperator& rho, const MoleculeParams& params);

/// Peaks whose |amplitude| exceeds `tol`.
std::vector<Peak> significant_peaks(const Spectrum& spectrum, double tol = 1e-9);

/// L(f) = gamma^2 / (gamma^2 + (f - f0)^2), gamma = fwhm / 2.
double lorentzian(double f, double center, double fwhm);
std::vector<double> frequency_grid(const std::vector<Peak>& peaks, double fwhm, const GridOptions& options = {});
Trace synthesize_trace(const std::vector<Peak>& peaks, const std::vector<double>& grid);
/// Attaches a trace sampled on frequency_grid().
Spectrum with_trace(Spectrum spectrum, const GridOptions& options = {});

struct AnalysisFrequencies {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  std::array<double, 4> as_array() const { return {a, b, c, d}; }
};

/// Configurations 000000, 000111, 100000 and 100111 of the six other spins.
inline constexpr std::array<std::uint32_t, 4> kAnalysisConfigurations = {0b000000, 0b000111, 0b100000, 0b100111};

AnalysisFrequencies analysis_frequencies(const MoleculeParams& params);

}  // namespace anyonsim::nmr
