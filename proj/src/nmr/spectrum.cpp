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

#include "anyonsim/nmr/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "anyonsim/errors.hpp"
#include "anyonsim/qsim/gates.hpp"

namespace anyonsim::nmr {

namespace {

// Basis index of (configuration of the other spins, bit of the observed spin).
std::uint64_t basis_index(const MoleculeParams& params, std::uint32_t configuration, int observed_bit) {
  const auto others = params.other_spins();
  const int m = static_cast<int>(others.size());
  std::uint64_t index = 0;
  for (int k = 0; k < m; ++k) {
    if ((configuration >> (m - 1 - k)) & 1U) index |= qsim::basis_bit(params.n_spins, others[static_cast<std::size_t>(k)]);
  }
  if (observed_bit) index |= qsim::basis_bit(params.n_spins, params.observe_spin);
  return index;
}

}  // namespace

double default_linewidth(const MoleculeParams& params) {
  return 1.0 / (std::numbers::pi * params.t2.at(static_cast<std::size_t>(params.observe_spin)));
}

double peak_offset(const MoleculeParams& params, std::uint32_t configuration) {
  const auto others = params.other_spins();
  const int m = static_cast<int>(others.size());
  double f = 0.0;
  for (int k = 0; k < m; ++k) {
    const double z = ((configuration >> (m - 1 - k)) & 1U) ? -1.0 : 1.0;
    f += 0.5 * params.coupling(others[static_cast<std::size_t>(k)], params.observe_spin) * z;
  }
  return f;
}

std::vector<double> peak_offsets(const MoleculeParams& params) {
  const std::uint32_t count = 1U << (params.n_spins - 1);
  std::vector<double> out(count);
  for (std::uint32_t s = 0; s < count; ++s) out[s] = peak_offset(params, s);
  return out;
}

Spectrum readout_spectrum(const qsim::DeviationOperator& rho, const MoleculeParams& params) {
  params.validate();
  if (rho.n_qubits() != params.n_spins) {
    throw ContractViolation("dimensions match", "state has " + std::to_string(rho.n_qubits()) +
                                                    " spins, molecule " + std::to_string(params.n_spins));
  }
  const auto pulse = qsim::ry(params.n_spins, params.observe_spin, std::numbers::pi / 2.0);
  const qsim::DeviationOperator rotated = qsim::apply_unitary(rho, pulse);
  const double width = default_linewidth(params);
  const auto offsets = peak_offsets(params);

  Spectrum out;
  for (std::uint32_t s = 0; s < offsets.size(); ++s) {
    const auto r0 = basis_index(params, s, 0);
    const auto r1 = basis_index(params, s, 1);
    out.peaks.push_back({offsets[s], 2.0 * rotated(r0, r1), width, s});
  }
  return out;
}

std::vector<Peak> significant_peaks(const Spectrum& spectrum, double tol) {
  std::vector<Peak> out;
  std::copy_if(spectrum.peaks.begin(), spectrum.peaks.end(), std::back_inserter(out),
               [tol](const Peak& p) { return std::abs(p.amplitude) > tol; });
  return out;
}

double lorentzian(double f, double center, double fwhm) {
  const double g = 0.5 * fwhm;
  const double delta = f - center;
  return g * g / (g * g + delta * delta);
}

std::vector<double> frequency_grid(const std::vector<Peak>& peaks, double fwhm, const GridOptions& options) {
  if (peaks.empty()) throw ContractViolation("spectrum has peaks", "frequency_grid");
  if (!(fwhm > 0.0) || !(options.points_per_fwhm > 0.0) || !(options.margin_fwhm >= 0.0)) {
    throw ContractViolation("linewidths > 0", std::to_string(fwhm));
  }
  const auto [lo_it, hi_it] = std::minmax_element(
      peaks.begin(), peaks.end(), [](const Peak& x, const Peak& y) { return x.offset_hz < y.offset_hz; });
  const double lo = lo_it->offset_hz - options.margin_fwhm * fwhm;
  const double hi = hi_it->offset_hz + options.margin_fwhm * fwhm;
  const double step = fwhm / options.points_per_fwhm;
  const auto count = static_cast<std::size_t>(std::ceil((hi - lo) / step)) + 1;
  std::vector<double> grid(count);
  for (std::size_t k = 0; k < count; ++k) grid[k] = lo + static_cast<double>(k) * step;
  return grid;
}

Trace synthesize_trace(const std::vector<Peak>& peaks, const std::vector<double>& grid) {
  Trace t;
  t.frequency_hz = grid;
  t.real.assign(grid.size(), 0.0);
  t.imag.assign(grid.size(), 0.0);
  for (const auto& p : peaks) {
    if (!(p.linewidth_hz > 0.0)) throw ContractViolation("linewidths > 0", std::to_string(p.linewidth_hz));
    if (p.amplitude == qsim::Complex(0.0, 0.0)) continue;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const double shape = lorentzian(grid[k], p.offset_hz, p.linewidth_hz);
      t.real[k] += p.amplitude.real() * shape;
      t.imag[k] += p.amplitude.imag() * shape;
    }
  }
  return t;
}

Spectrum with_trace(Spectrum spectrum, const GridOptions& options) {
  double width = 0.0;
  for (const auto& p : spectrum.peaks) width = std::max(width, p.linewidth_hz);
  spectrum.trace = synthesize_trace(spectrum.peaks, frequency_grid(spectrum.peaks, width, options));
  return spectrum;
}

AnalysisFrequencies analysis_frequencies(const MoleculeParams& params) {
  if (params.n_spins != 7) throw ContractViolation("molecule has seven spins", std::to_string(params.n_spins));
  return {peak_offset(params, kAnalysisConfigurations[0]), peak_offset(params, kAnalysisConfigurations[1]),
          peak_offset(params, kAnalysisConfigurations[2]), peak_offset(params, kAnalysisConfigurations[3])};
}

}  // namespace anyonsim::nmr
