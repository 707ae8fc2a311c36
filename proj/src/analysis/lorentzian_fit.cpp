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

#include "anyonsim/analysis/lorentzian_fit.hpp"

#include <algorithm>
#include <cmath>

#include "anyonsim/errors.hpp"

namespace anyonsim::analysis {

namespace {

constexpr double kMaxDamping = 1e16;

struct Problem {
  const Eigen::VectorXd& f;
  const Eigen::VectorXd& y;
  const std::vector<double>& offsets;
  bool free_width;
};

// Parameters: amplitudes, then the half width gamma when it is free.
Eigen::VectorXd model(const Problem& pb, const Eigen::VectorXd& amps, double gamma) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(pb.f.size());
  const double g2 = gamma * gamma;
  for (std::size_t k = 0; k < pb.offsets.size(); ++k) {
    const Eigen::ArrayXd delta = pb.f.array() - pb.offsets[k];
    out.array() += amps[static_cast<Eigen::Index>(k)] * g2 / (g2 + delta.square());
  }
  return out;
}

Eigen::MatrixXd jacobian(const Problem& pb, const Eigen::VectorXd& amps, double gamma) {
  const auto m = static_cast<Eigen::Index>(pb.offsets.size());
  Eigen::MatrixXd j(pb.f.size(), m + (pb.free_width ? 1 : 0));
  const double g2 = gamma * gamma;
  if (pb.free_width) j.col(m).setZero();
  for (Eigen::Index k = 0; k < m; ++k) {
    const Eigen::ArrayXd d2 = (pb.f.array() - pb.offsets[static_cast<std::size_t>(k)]).square();
    const Eigen::ArrayXd denom = g2 + d2;
    j.col(k) = (g2 / denom).matrix();
    if (pb.free_width) j.col(m).array() += amps[k] * 2.0 * gamma * d2 / denom.square();
  }
  return j;
}

double initial_fwhm(const Eigen::VectorXd& f, const Eigen::VectorXd& y) {
  Eigen::Index top = 0;
  y.cwiseAbs().maxCoeff(&top);
  const double half = 0.5 * std::abs(y[top]);
  Eigen::Index lo = top, hi = top;
  while (lo > 0 && std::abs(y[lo]) > half) --lo;
  while (hi < y.size() - 1 && std::abs(y[hi]) > half) ++hi;
  const double width = f[hi] - f[lo];
  const double step = f.size() > 1 ? std::abs(f[1] - f[0]) : 1.0;
  return std::max(width, 2.0 * step);
}

}  // namespace

PeakFit fit_lorentzians(const nmr::Trace& trace, const std::vector<double>& known_offsets,
                        const FitOptions& options) {
  const auto n = static_cast<Eigen::Index>(trace.frequency_hz.size());
  if (n == 0 || trace.real.size() != trace.frequency_hz.size()) {
    throw ContractViolation("trace is sampled", "empty or ragged trace");
  }
  if (known_offsets.empty()) throw ContractViolation("offsets given", "fit_lorentzians");
  const Eigen::VectorXd f = Eigen::Map<const Eigen::VectorXd>(trace.frequency_hz.data(), n);
  const Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(trace.real.data(), n);
  const double f_min = f.minCoeff();
  const double f_max = f.maxCoeff();
  for (double o : known_offsets) {
    if (o < f_min || o > f_max) {
      throw ContractViolation("grid covers the offsets", std::to_string(o) + " Hz outside [" +
                                                             std::to_string(f_min) + ", " + std::to_string(f_max) + "]");
    }
  }
  if (options.fixed_linewidth && !(*options.fixed_linewidth > 0.0)) {
    throw ContractViolation("linewidths > 0", std::to_string(*options.fixed_linewidth));
  }

  const Problem pb{f, y, known_offsets, !options.fixed_linewidth.has_value()};
  const auto m = static_cast<Eigen::Index>(known_offsets.size());
  const Eigen::Index p = m + (pb.free_width ? 1 : 0);
  if (n <= p) throw ContractViolation("more samples than parameters", std::to_string(n));

  double gamma = 0.5 * options.fixed_linewidth.value_or(initial_fwhm(f, y));
  Eigen::VectorXd amps(m);
  for (Eigen::Index k = 0; k < m; ++k) {
    Eigen::Index nearest = 0;
    (f.array() - known_offsets[static_cast<std::size_t>(k)]).abs().minCoeff(&nearest);
    amps[k] = y[nearest];
  }

  Eigen::VectorXd residual = y - model(pb, amps, gamma);
  double rss = residual.squaredNorm();
  double damping = 1e-3;
  int iter = 0;
  bool converged = rss == 0.0;
  while (!converged) {
    if (iter >= options.max_iterations) {
      throw ContractViolation("fit converges within the iteration cap",
                              std::to_string(options.max_iterations) + " iterations, rss " + std::to_string(rss));
    }
    ++iter;
    const Eigen::MatrixXd j = jacobian(pb, amps, gamma);
    const Eigen::MatrixXd jtj = j.transpose() * j;
    const Eigen::VectorXd jtr = j.transpose() * residual;
    bool accepted = false;
    while (!accepted && damping < kMaxDamping) {
      Eigen::MatrixXd a = jtj;
      a.diagonal() += damping * jtj.diagonal().cwiseMax(1e-300);
      const Eigen::VectorXd delta = a.ldlt().solve(jtr);
      Eigen::VectorXd trial_amps = amps + delta.head(m);
      const double trial_gamma = pb.free_width ? gamma + delta[m] : gamma;
      if (!(trial_gamma > 0.0) || !delta.allFinite()) {
        damping *= 10.0;
        continue;
      }
      const Eigen::VectorXd trial_residual = y - model(pb, trial_amps, trial_gamma);
      const double trial_rss = trial_residual.squaredNorm();
      if (trial_rss <= rss) {
        const double drop = rss - trial_rss;
        converged = drop <= options.relative_tolerance * rss;
        amps = std::move(trial_amps);
        gamma = trial_gamma;
        residual = trial_residual;
        rss = trial_rss;
        damping = std::max(damping / 10.0, 1e-12);
        accepted = true;
      } else {
        damping *= 10.0;
      }
    }
    // No step lowers the residual any further: the fit sits at a round-off minimum.
    if (!accepted) converged = true;
  }

  const Eigen::MatrixXd j = jacobian(pb, amps, gamma);
  const double s2 = rss / static_cast<double>(n - p);
  Eigen::MatrixXd covariance = s2 * (j.transpose() * j).inverse();

  PeakFit out;
  out.linewidth_hz = 2.0 * gamma;
  out.linewidth_stderr = pb.free_width ? 2.0 * std::sqrt(std::max(0.0, covariance(m, m))) : 0.0;
  out.residual_norm = std::sqrt(rss);
  out.iterations = iter;
  for (Eigen::Index k = 0; k < m; ++k) {
    out.peaks.push_back({known_offsets[static_cast<std::size_t>(k)], amps[k],
                         std::sqrt(std::max(0.0, covariance(k, k))), out.linewidth_hz});
  }
  out.covariance = std::move(covariance);
  return out;
}

}  // namespace anyonsim::analysis
