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

#include "anyonsim/analysis/phase.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "anyonsim/errors.hpp"

namespace anyonsim::analysis {

namespace {

constexpr double kOffsetMatch = 1e-6;
constexpr double kDegrees = 180.0 / std::numbers::pi;

double clamp_floor(double v) { return v < kIntensityFloor ? 0.0 : v; }

std::uint64_t state_index(const nmr::MoleculeParams& params, std::uint32_t configuration, int observed_bit) {
  const auto others = params.other_spins();
  const int m = static_cast<int>(others.size());
  std::uint64_t index = 0;
  for (int k = 0; k < m; ++k) {
    if ((configuration >> (m - 1 - k)) & 1U) index |= qsim::basis_bit(params.n_spins, others[static_cast<std::size_t>(k)]);
  }
  if (observed_bit) index |= qsim::basis_bit(params.n_spins, params.observe_spin);
  return index;
}

// Observed-spin bit of each analysis target: |0000000>, |0001111>, |1000000>, |1001111>.
constexpr int kTargetObservedBit[4] = {0, 1, 0, 1};

}  // namespace

const FittedPeak& peak_at(const PeakFit& fit, double offset_hz) {
  for (const auto& p : fit.peaks) {
    if (std::abs(p.offset_hz - offset_hz) <= kOffsetMatch) return p;
  }
  throw ContractViolation("fit contains the analysis offsets", std::to_string(offset_hz) + " Hz");
}

AlphaBeta estimate_alpha_beta(const PeakFit& fit, const nmr::AnalysisFrequencies& freqs,
                              double reference_intensity) {
  if (!(reference_intensity > 0.0)) {
    throw ContractViolation("reference intensity > 0", std::to_string(reference_intensity));
  }
  const auto offsets = freqs.as_array();
  double intensity[4];
  double variance[4];
  for (int k = 0; k < 4; ++k) {
    const FittedPeak& p = peak_at(fit, offsets[static_cast<std::size_t>(k)]);
    const double sign = kTargetObservedBit[k] ? -1.0 : 1.0;
    intensity[k] = clamp_floor(sign * p.amplitude / reference_intensity);
    variance[k] = std::pow(p.amplitude_stderr / reference_intensity, 2);
  }
  AlphaBeta out;
  out.alpha_sq = {clamp_floor(2.0 * (intensity[0] + intensity[1])), 2.0 * std::sqrt(variance[0] + variance[1])};
  out.beta_sq = {clamp_floor(2.0 * (intensity[2] + intensity[3])), 2.0 * std::sqrt(variance[2] + variance[3])};
  return out;
}

double anyonic_phase(double alpha_sq, double beta_sq) {
  if (!(alpha_sq >= 0.0) || !(beta_sq >= 0.0) || (alpha_sq == 0.0 && beta_sq == 0.0)) {
    throw ContractViolation("alpha_sq > 0 or beta_sq > 0",
                            std::to_string(alpha_sq) + ", " + std::to_string(beta_sq));
  }
  if (alpha_sq == 0.0) return 180.0;
  return 2.0 * std::atan(std::sqrt(beta_sq / alpha_sq)) * kDegrees;
}

double propagate_phase_error(const Estimate& alpha_sq, const Estimate& beta_sq) {
  const double a = alpha_sq.value;
  const double b = beta_sq.value;
  if (!(a > 0.0) || !(b > 0.0)) {
    throw ContractViolation("alpha_sq and beta_sq positive", std::to_string(a) + ", " + std::to_string(b));
  }
  const double r = b / a;
  const double sigma_r = r * std::hypot(alpha_sq.stderr / a, beta_sq.stderr / b);
  // d/dr [2 atan(sqrt r)] = 1 / ((1 + r) sqrt r)
  return sigma_r / ((1.0 + r) * std::sqrt(r)) * kDegrees;
}

double neglected_partner(const qsim::DeviationOperator& rho, const nmr::MoleculeParams& params,
                         double reference_intensity) {
  double worst = 0.0;
  for (int k = 0; k < 4; ++k) {
    const auto config = nmr::kAnalysisConfigurations[static_cast<std::size_t>(k)];
    const auto partner = state_index(params, config, 1 - kTargetObservedBit[k]);
    worst = std::max(worst, std::abs(rho(partner, partner).real()));
  }
  return worst / reference_intensity;
}

PhaseResult make_phase_result(std::string scenario, const AlphaBeta& ab, double neglected) {
  PhaseResult out;
  out.scenario = std::move(scenario);
  out.alpha_sq = ab.alpha_sq;
  out.beta_sq = ab.beta_sq;
  out.theta_deg.value = anyonic_phase(ab.alpha_sq.value, ab.beta_sq.value);
  out.theta_deg.stderr = (ab.alpha_sq.value > 0.0 && ab.beta_sq.value > 0.0)
                             ? propagate_phase_error(ab.alpha_sq, ab.beta_sq)
                             : std::numeric_limits<double>::quiet_NaN();
  out.neglected = neglected;
  return out;
}

}  // namespace anyonsim::analysis
