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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include <fmt/format.h>

#include "anyonsim/analysis/lorentzian_fit.hpp"
#include "anyonsim/analysis/phase.hpp"
#include "anyonsim/analysis/report.hpp"
#include "anyonsim/braiding/braiding.hpp"
#include "anyonsim/braiding/loop_generator.hpp"
#include "anyonsim/cli/commands.hpp"
#include "anyonsim/cli/pipeline.hpp"
#include "anyonsim/kitaev/gd_circuit.hpp"
#include "anyonsim/kitaev/hamiltonian.hpp"
#include "anyonsim/kitaev/seven_qubit.hpp"
#include "anyonsim/nmr/pps.hpp"
#include "anyonsim/nmr/spectrum.hpp"

namespace {

using namespace anyonsim;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome noiseless_theory() {
  const auto start = Clock::now();
  const auto params = nmr::default_molecule();
  const auto ref = cli::reference_run(params, {});
  double worst = 0.0;
  std::string thetas;
  for (auto s : nmr::all_scenarios()) {
    nmr::ScenarioConfig cfg;
    cfg.scenario = s;
    const double theta = cli::analyze_scenario(cfg, params, ref, {}).result.theta_deg.value;
    worst = std::max(worst, std::abs(theta - analysis::theory_theta(s)));
    thetas += fmt::format("{}={:.6f} ", nmr::to_string(s), theta);
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-6 && elapsed < 5.0, fmt::format("{}max error {:.1e} deg, {:.2f} s", thetas, worst, elapsed)};
}

Outcome ground_state_exactness() {
  const auto psi = qsim::apply_unitary(qsim::StateVector(7), kitaev::gd_circuit().composite);
  double amp_err = 0.0;
  for (std::uint64_t b = 0; b < 128; ++b) {
    const bool member = b == 0b0000000 || b == 0b1111000 || b == 0b0001111 || b == 0b1110111;
    amp_err = std::max(amp_err, std::abs(std::abs(psi.amplitude(b)) - (member ? 0.5 : 0.0)));
  }
  double stab_err = 0.0;
  for (const auto& s : kitaev::SevenQubitModel().stabilizers()) {
    stab_err = std::max(stab_err, std::abs(qsim::pauli_expectation(psi, s) - 1.0));
  }
  return {amp_err <= 1e-10 && stab_err <= 1e-10,
          fmt::format("amplitude error {:.1e}, stabilizer error {:.1e}", amp_err, stab_err)};
}

Outcome toric_degeneracy() {
  const auto start = Clock::now();
  const auto gs = kitaev::ground_space(kitaev::toric_lattice(2));
  const double elapsed = seconds_since(start);
  const bool dense = gs.method == kitaev::GroundSpaceMethod::dense_diagonalization;
  return {gs.degeneracy == 4 && dense && elapsed < 30.0,
          fmt::format("degeneracy {} by {}, {:.2f} s", gs.degeneracy, dense ? "exact diagonalization" : "projection",
                      elapsed)};
}

Outcome oracle_equivalence() {
  const std::vector<kitaev::LatticeSpec> lattices{kitaev::seven_qubit_lattice(), kitaev::planar_rough_lattice(1, 1),
                                                  kitaev::planar_rough_lattice(1, 2),
                                                  kitaev::planar_rough_lattice(2, 1)};
  int loops_checked = 0, mismatches = 0, pairs = 0;
  double worst_overlap = 0.0;
  for (std::size_t li = 0; li < lattices.size(); ++li) {
    const auto& lattice = lattices[li];
    const auto ground = kitaev::ground_state_by_projection(lattice);
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const auto charge = braiding::random_charge(lattice, 31 * li + seed);
      int creator = 0;
      while ((charge.z_mask() >> creator) & 1U) ++creator;
      const braiding::BraidingSetup setup{lattice, charge,
                                          qsim::PauliString::single(lattice.n_qubits(), creator, 'X')};
      std::optional<qsim::StateVector> first[2];
      for (const auto& loop : braiding::random_loops(lattice, 16, 1000 + 31 * li + seed)) {
        const double parity = braiding::braiding_parity(loop, charge);
        if (std::abs(braiding::evolved_braiding_phase(setup, ground, loop) - parity) > 1e-6) ++mismatches;
        ++loops_checked;
        const int k = parity > 0 ? 1 : 0;
        const auto d = braiding::run_braiding_pipeline(setup, ground, loop);
        if (!first[k]) {
          first[k] = d;
        } else {
          worst_overlap = std::max(worst_overlap, std::abs(qsim::overlap(*first[k], d) - 1.0));
          ++pairs;
        }
      }
    }
  }
  return {loops_checked >= 200 && mismatches == 0 && worst_overlap <= 1e-10,
          fmt::format("{} loops, {} mismatches, {} same-parity pairs, max |overlap - 1| {:.1e}", loops_checked,
                      mismatches, pairs, worst_overlap)};
}

Outcome analysis_frequencies() {
  const auto f = nmr::analysis_frequencies(nmr::default_molecule());
  const std::array<double, 4> want{61.25, 24.09, 32.24, -4.93};
  double worst = 0.0;
  for (std::size_t k = 0; k < 4; ++k) worst = std::max(worst, std::abs(f.as_array()[k] - want[k]));
  const double gap = std::abs((f.a - f.b) - (f.c - f.d));
  return {worst <= 0.02 && gap <= 0.02,
          fmt::format("a={:.3f} b={:.3f} c={:.3f} d={:.3f} Hz, max error {:.3f} Hz", f.a, f.b, f.c, f.d, worst)};
}

Outcome phase_regression() {
  struct Row {
    double alpha, beta, computed, measured;
  };
  const Row rows[4] = {{0.83, 0.01, 12.55, 12.1}, {0.83, 0.02, 17.65, 17.4}, {0.05, 0.85, 152.73, 153.9},
                       {0.05, 0.81, 152.10, 151.4}};
  bool ok = true;
  std::string detail;
  for (const auto& r : rows) {
    const double theta = analysis::anyonic_phase(r.alpha, r.beta);
    ok = ok && std::abs(theta - r.computed) <= 0.1 && std::abs(theta - r.measured) <= 2.0;
    detail += fmt::format("{:.2f} ", theta);
  }
  return {ok, detail + "deg"};
}

Outcome noisy_bands() {
  const auto start = Clock::now();
  const auto params = nmr::default_molecule();
  const auto ref = cli::reference_run(params, {});
  auto theta = [&](nmr::Scenario s, nmr::NoiseModel noise, std::uint64_t seed) {
    nmr::ScenarioConfig cfg;
    cfg.scenario = s;
    cfg.noise = noise;
    cfg.rng_seed = seed;
    return cli::analyze_scenario(cfg, params, ref, {}).result.theta_deg.value;
  };
  bool ok = true;
  double trivial_lo = 180, trivial_hi = 0, nontrivial_lo = 180, nontrivial_hi = 0, worst_pair = 0.0;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    for (auto s : {nmr::Scenario::noBD, nmr::Scenario::BD0}) {
      const double t = theta(s, nmr::NoiseModel::both, seed);
      trivial_lo = std::min(trivial_lo, t);
      trivial_hi = std::max(trivial_hi, t);
      ok = ok && t >= 10.0 && t <= 30.0;
    }
    const double bd1 = theta(nmr::Scenario::BD1, nmr::NoiseModel::both, seed);
    const double bd2 = theta(nmr::Scenario::BD2, nmr::NoiseModel::both, seed);
    for (double t : {bd1, bd2}) {
      nontrivial_lo = std::min(nontrivial_lo, t);
      nontrivial_hi = std::max(nontrivial_hi, t);
      ok = ok && t >= 140.0 && t <= 170.0;
    }
    worst_pair = std::max(worst_pair, std::abs(bd1 - bd2));
  }
  std::vector<double> gate_bd1, gate_bd2;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    gate_bd1.push_back(theta(nmr::Scenario::BD1, nmr::NoiseModel::gate_imperfection, seed));
    gate_bd2.push_back(theta(nmr::Scenario::BD2, nmr::NoiseModel::gate_imperfection, seed));
  }
  const double m1 = median(gate_bd1), m2 = median(gate_bd2);
  ok = ok && m1 >= 170.0 && m1 <= 180.0 && m2 >= 170.0 && m2 <= 180.0;
  const double median_pair = std::abs(m1 - m2);
  ok = ok && worst_pair <= 2.0 && median_pair <= 2.0;
  const double elapsed = seconds_since(start);
  ok = ok && elapsed < 300.0;
  return {ok, fmt::format("both: trivial [{:.2f}, {:.2f}], non-trivial [{:.2f}, {:.2f}], max |BD1-BD2| {:.3f}; "
                          "gate-only medians BD1 {:.2f} BD2 {:.2f} over 20 seeds; {:.1f} s",
                          trivial_lo, trivial_hi, nontrivial_lo, nontrivial_hi, worst_pair, m1, m2, elapsed)};
}

Outcome cat_state_pps() {
  const auto trace = nmr::labeled_pps_trace(nmr::default_molecule());
  const double off_target =
      (trace.result.matrix() - nmr::ideal_labeled_pps(7, 6).matrix()).cwiseAbs().maxCoeff();
  const qsim::CMatrix cycled = trace.cycled.matrix() / trace.cycled.matrix().norm();
  const double cat_err = (cycled - nmr::cat_coherence(7).matrix()).cwiseAbs().maxCoeff();
  return {off_target < 1e-9 && cat_err <= 1e-9,
          fmt::format("off-target {:.1e}, cat coherence error {:.1e}", off_target, cat_err)};
}

Outcome fitting_fidelity() {
  const auto params = nmr::default_molecule();
  const auto offsets = nmr::peak_offsets(params);
  const double fwhm = nmr::default_linewidth(params);
  double worst_noisy = 0.0, worst_clean = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> amp(0.5, 1.0);
    std::vector<nmr::Peak> peaks;
    for (double f : offsets) peaks.push_back({f, amp(rng), fwhm, 0});
    auto trace = nmr::synthesize_trace(peaks, nmr::frequency_grid(peaks, fwhm));
    if (seed == 0) {
      const auto clean = analysis::fit_lorentzians(trace, offsets);
      for (const auto& p : peaks) {
        worst_clean = std::max(worst_clean, std::abs(analysis::peak_at(clean, p.offset_hz).amplitude - p.amplitude.real()));
      }
    }
    const double max = *std::max_element(trace.real.begin(), trace.real.end());
    std::normal_distribution<double> noise(0.0, 0.01 * max);
    for (double& v : trace.real) v += noise(rng);
    const auto fit = analysis::fit_lorentzians(trace, offsets);
    for (const auto& p : peaks) {
      const double rel = std::abs(analysis::peak_at(fit, p.offset_hz).amplitude / p.amplitude.real() - 1.0);
      worst_noisy = std::max(worst_noisy, rel);
    }
  }
  return {worst_noisy <= 0.02 && worst_clean <= 1e-6,
          fmt::format("100 seeds x 64 peaks, worst relative error {:.4f}; noiseless error {:.1e}", worst_noisy,
                      worst_clean)};
}

Outcome determinism(const fs::path& configs) {
  const auto base = fs::temp_directory_path() / "anyonsim_acceptance";
  fs::remove_all(base);
  std::ostringstream out, err;
  for (const char* run : {"a", "b"}) {
    cli::CommonOptions opts;
    opts.config = (configs / "default.json").string();
    opts.noise = "both";
    opts.seed = 11;
    opts.out = (base / run).string();
    if (cli::cmd_run(opts, out, err) != cli::kExitOk) return {false, "run failed: " + err.str()};
  }
  int compared = 0, differing = 0;
  for (const auto& entry : fs::directory_iterator(base / "a")) {
    const auto ext = entry.path().extension();
    if (ext != ".csv" && ext != ".svg") continue;
    ++compared;
    if (slurp(entry.path()) != slurp(base / "b" / entry.path().filename())) ++differing;
  }
  fs::remove_all(base);
  return {compared > 0 && differing == 0, fmt::format("{} CSV/SVG files compared, {} differ", compared, differing)};
}

}  // namespace

int main() {
  const char* source = std::getenv("ANYONSIM_SOURCE_DIR");
  const fs::path configs = fs::path(source ? source : ANYONSIM_SOURCE_DIR) / "configs";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"noiseless theory reproduction", noiseless_theory},
      {"ground state exactness", ground_state_exactness},
      {"toric degeneracy", toric_degeneracy},
      {"oracle equivalence", oracle_equivalence},
      {"four analysis frequencies", analysis_frequencies},
      {"phase formula regression", phase_regression},
      {"noisy-simulation bands", noisy_bands},
      {"cat-state PPS", cat_state_pps},
      {"fitting fidelity", fitting_fidelity},
      {"determinism", [&] { return determinism(configs); }},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    fmt::print("{} criterion {}: {} ({})\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, o.detail);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
