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

#include "anyonsim/analysis/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "anyonsim/errors.hpp"

namespace anyonsim::analysis {

namespace {

constexpr double kTheoryTolerance = 1e-6;

std::string number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  // Avoid "-0.000000" so equal results print identically.
  if (std::string(buf).find_first_not_of("-0.") == std::string::npos) return "0.000000";
  return buf;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

double theory_theta(nmr::Scenario s) { return nmr::is_nontrivial(s) ? 180.0 : 0.0; }

Band acceptance_band(nmr::Scenario s, nmr::NoiseModel noise) {
  const bool nontrivial = nmr::is_nontrivial(s);
  switch (noise) {
    case nmr::NoiseModel::none: {
      const double t = theory_theta(s);
      return {t - kTheoryTolerance, t + kTheoryTolerance};
    }
    case nmr::NoiseModel::dephasing:
    case nmr::NoiseModel::both:
      return nontrivial ? Band{140.0, 170.0} : Band{10.0, 30.0};
    case nmr::NoiseModel::gate_imperfection:
      return nontrivial ? Band{170.0, 180.0} : Band{0.0, 10.0};
  }
  return {};
}

ReportRow make_report_row(nmr::Scenario s, nmr::NoiseModel noise, std::string seed, PhaseResult result) {
  ReportRow row;
  row.scenario = s;
  row.noise = noise;
  row.seed = std::move(seed);
  row.theory_deg = theory_theta(s);
  row.band = acceptance_band(s, noise);
  row.pass = row.band.contains(result.theta_deg.value);
  row.result = std::move(result);
  return row;
}

ReportRow median_row(const std::vector<ReportRow>& rows) {
  if (rows.empty()) throw ContractViolation("rows to summarize", "median_row");
  std::vector<double> theta, alpha, beta, neglected;
  for (const auto& r : rows) {
    theta.push_back(r.result.theta_deg.value);
    alpha.push_back(r.result.alpha_sq.value);
    beta.push_back(r.result.beta_sq.value);
    neglected.push_back(r.result.neglected);
  }
  PhaseResult summary;
  summary.scenario = rows.front().result.scenario;
  summary.alpha_sq = {median(alpha), std::nan("")};
  summary.beta_sq = {median(beta), std::nan("")};
  summary.theta_deg = {median(theta), std::nan("")};
  summary.neglected = *std::max_element(neglected.begin(), neglected.end());
  return make_report_row(rows.front().scenario, rows.front().noise, "median", std::move(summary));
}

std::vector<ReportRow> scenario_report(const std::vector<PhaseResult>& results, nmr::NoiseModel noise) {
  std::vector<ReportRow> rows;
  for (const auto& r : results) {
    rows.push_back(make_report_row(nmr::scenario_from_string(r.scenario), noise, "", r));
  }
  return rows;
}

std::string report_csv(const std::vector<ReportRow>& rows) {
  std::string out =
      "scenario,noise,seed,alpha_sq,alpha_err,beta_sq,beta_err,theta_deg,theta_err,theory_deg,band_lo,band_hi,"
      "neglected,pass\n";
  for (const auto& r : rows) {
    const auto& p = r.result;
    out += nmr::to_string(r.scenario) + "," + nmr::to_string(r.noise) + "," + r.seed + "," +
           number(p.alpha_sq.value) + "," + number(p.alpha_sq.stderr) + "," + number(p.beta_sq.value) + "," +
           number(p.beta_sq.stderr) + "," + number(p.theta_deg.value) + "," + number(p.theta_deg.stderr) + "," +
           number(r.theory_deg) + "," + number(r.band.lo) + "," + number(r.band.hi) + "," + number(p.neglected) +
           "," + (r.pass ? "pass" : "fail") + "\n";
  }
  return out;
}

}  // namespace anyonsim::analysis
