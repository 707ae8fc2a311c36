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

#include "anyonsim/cli/commands.hpp"

#include <cmath>
#include <iostream>
#include <numbers>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "anyonsim/braiding/loop_generator.hpp"
#include "anyonsim/cli/artifacts.hpp"
#include "anyonsim/cli/pipeline.hpp"
#include "anyonsim/errors.hpp"
#include "anyonsim/kitaev/gd_circuit.hpp"
#include "anyonsim/kitaev/hamiltonian.hpp"
#include "anyonsim/kitaev/seven_qubit.hpp"
#include "anyonsim/nmr/stabilizer_readout.hpp"

namespace anyonsim::cli {

using qsim::PauliString;

namespace {

constexpr int kVerifyLoops = 50;

std::string scenario_file(nmr::Scenario s, std::uint64_t seed, const std::string& suffix) {
  return fmt::format("{}_s{}_{}", nmr::to_string(s), seed, suffix);
}

std::vector<std::string> scenario_names(const RunConfig& cfg) {
  std::vector<std::string> out;
  for (auto s : cfg.scenarios) out.push_back(nmr::to_string(s));
  return out;
}

void print_report(std::ostream& out, const std::vector<analysis::ReportRow>& rows) {
  fmt::print(out, "{:<6} {:<18} {:>7} {:>10} {:>10} {:>12} {:>8}  {}\n", "case", "noise", "seed", "alpha_sq",
             "beta_sq", "theta_deg", "theory", "result");
  for (const auto& r : rows) {
    fmt::print(out, "{:<6} {:<18} {:>7} {:>10.6f} {:>10.6f} {:>12.6f} {:>8.1f}  {}\n", nmr::to_string(r.scenario),
               nmr::to_string(r.noise), r.seed, r.result.alpha_sq.value, r.result.beta_sq.value,
               r.result.theta_deg.value, r.theory_deg, r.pass ? "pass" : "fail");
  }
}

template <typename F>
CheckResult check(const std::string& name, F&& body) {
  try {
    auto [ok, detail] = body();
    return {name, ok, detail};
  } catch (const std::exception& e) {
    return {name, false, e.what()};
  }
}

// Runs every scenario and seed of `cfg`, adding a median row per scenario when
// several seeds are in play.
std::vector<analysis::ReportRow> run_rows(const RunConfig& cfg, const Reference& ref,
                                          std::vector<ScenarioOutcome>* outcomes) {
  std::vector<analysis::ReportRow> rows;
  const auto seeds = cfg.effective_seeds();
  for (auto s : cfg.scenarios) {
    std::vector<analysis::ReportRow> per_seed;
    for (auto seed : seeds) {
      auto outcome = analyze_scenario(cfg.scenario_config(s, seed), cfg.molecule, ref, cfg.grid);
      per_seed.push_back(analysis::make_report_row(s, cfg.noise, std::to_string(seed), outcome.result));
      if (outcomes) outcomes->push_back(std::move(outcome));
    }
    rows.insert(rows.end(), per_seed.begin(), per_seed.end());
    if (per_seed.size() > 1) rows.push_back(analysis::median_row(per_seed));
  }
  return rows;
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    fmt::print(err, "config error: {}\n", e.what());
    return kExitUsage;
  } catch (const ContractViolation& e) {
    fmt::print(err, "contract violation [{}]: {}\n", e.invariant(), e.what());
    return kExitContract;
  }
}

}  // namespace

RunConfig resolve_config(const CommonOptions& options) {
  RunConfig cfg = load_config(options.config);
  try {
    if (options.scenario) {
      cfg.scenarios = *options.scenario == "all" ? nmr::all_scenarios()
                                                 : std::vector{nmr::scenario_from_string(*options.scenario)};
    }
    if (options.noise) cfg.noise = nmr::noise_from_string(*options.noise);
  } catch (const ContractViolation& e) {
    throw ConfigError(e.what());
  }
  if (options.seed) cfg.seeds = {*options.seed};
  return cfg;
}

std::vector<CheckResult> verify_checks(const RunConfig& cfg) {
  std::vector<CheckResult> out;
  std::optional<kitaev::LatticeSpec> lattice;

  out.push_back(check("lattice stabilizers commute", [&] {
    lattice = kitaev::lattice_from_json(cfg.lattice);
    return std::pair{true, fmt::format("{} qubits, {} stars, {} plaquettes", lattice->n_qubits(),
                                       lattice->n_vertices(), lattice->n_plaquettes())};
  }));
  if (lattice) {
    out.push_back(check("lattice ground state stabilized", [&] {
      const auto g = kitaev::ground_state_by_projection(*lattice);
      double worst = 0.0;
      for (const auto& s : lattice->stabilizers()) worst = std::max(worst, std::abs(qsim::pauli_expectation(g, s) - 1.0));
      return std::pair{worst < 1e-10, fmt::format("max |<S> - 1| = {:.2e}", worst)};
    }));
    if (lattice->n_qubits() <= kitaev::kDenseDiagonalizationQubits) {
      out.push_back(check("lattice degeneracy", [&] {
        const auto gs = kitaev::ground_space(*lattice);
        const int expected = 1 << (lattice->n_qubits() - kitaev::stabilizer_rank(*lattice));
        return std::pair{gs.degeneracy == expected,
                         fmt::format("degeneracy {} (stabilizer count predicts {})", gs.degeneracy, expected)};
      }));
    }
    out.push_back(check("oracle equivalence on random loops", [&] {
      const auto g = kitaev::ground_state_by_projection(*lattice);
      const auto loops = braiding::random_loops(*lattice, kVerifyLoops, 17);
      int mismatches = 0;
      for (std::size_t k = 0; k < loops.size(); ++k) {
        const auto charge = braiding::random_charge(*lattice, 1000 + k);
        const int creator_qubit = [&] {
          for (int q = 0; q < lattice->n_qubits(); ++q) {
            if (!((charge.z_mask() >> q) & 1U)) return q;
          }
          return 0;
        }();
        const braiding::BraidingSetup setup{*lattice, charge,
                                            PauliString::single(lattice->n_qubits(), creator_qubit, 'X')};
        const double evolved = braiding::evolved_braiding_phase(setup, g, loops[k]);
        if (std::abs(evolved - braiding::braiding_parity(loops[k], charge)) > 1e-6) ++mismatches;
      }
      return std::pair{mismatches == 0, fmt::format("{} loops, {} mismatches", loops.size(), mismatches)};
    }));
  }
  out.push_back(check("ground-state circuit output", [&] {
    const auto gd = kitaev::gd_circuit(cfg.gd_prefix);
    const auto psi = qsim::apply_unitary(qsim::StateVector(7), gd.composite);
    const double err = (qsim::fix_global_phase(psi.amplitudes()) -
                        kitaev::SevenQubitModel::ground_state().amplitudes()).cwiseAbs().maxCoeff();
    return std::pair{err < 1e-10, fmt::format("max amplitude error {:.2e}", err)};
  }));
  out.push_back(check("seven-qubit stabilizer expectations", [&] {
    const kitaev::SevenQubitModel model;
    const auto psi = kitaev::SevenQubitModel::ground_state();
    double worst = 0.0;
    for (const auto& s : model.stabilizers()) worst = std::max(worst, std::abs(qsim::pauli_expectation(psi, s) - 1.0));
    return std::pair{worst < 1e-10, fmt::format("max |<S> - 1| = {:.2e}", worst)};
  }));
  out.push_back(check("toric 2x2 degeneracy", [&] {
    const auto gs = kitaev::ground_space(kitaev::toric_lattice(2));
    return std::pair{gs.degeneracy == 4, fmt::format("degeneracy {}", gs.degeneracy)};
  }));
  out.push_back(check("seven-qubit loops match braiding parity", [&] {
    const auto setup = braiding::seven_qubit_setup();
    const auto g = kitaev::SevenQubitModel::ground_state();
    std::string detail;
    bool ok = true;
    for (const auto& loop : braiding::seven_qubit_loops()) {
      const double evolved = braiding::evolved_braiding_phase(setup, g, loop);
      ok = ok && std::abs(evolved - braiding::braiding_parity(loop, setup.charge)) < 1e-6;
      detail += fmt::format("{}{}={:.1f}", detail.empty() ? "" : " ", loop.name(), evolved * 180.0 / std::numbers::pi);
    }
    return std::pair{ok, detail};
  }));
  out.push_back(check("labeled PPS phase cycle", [&] {
    const auto trace = nmr::labeled_pps_trace(cfg.molecule);
    return std::pair{trace.residual < nmr::kPpsResidualTolerance, fmt::format("residual {:.2e}", trace.residual)};
  }));
  out.push_back(check("transformed stabilizers are +1", [&] {
    const auto gd = kitaev::gd_circuit(cfg.gd_prefix);
    const auto rho = qsim::apply_unitary(nmr::labeled_pps(cfg.molecule), gd.composite);
    double worst = 0.0;
    for (const auto& s : nmr::transform_stabilizers(gd.composite, cfg.molecule.observe_spin)) {
      worst = std::max(worst, std::abs(qsim::pauli_expectation(rho, s) - 1.0));
    }
    return std::pair{worst < 1e-8, fmt::format("max |<S> - 1| = {:.2e}", worst)};
  }));
  out.push_back(check("analysis frequencies consistent", [&] {
    const auto f = nmr::analysis_frequencies(cfg.molecule);
    const double gap = std::abs((f.a - f.b) - (f.c - f.d));
    return std::pair{gap < 0.02, fmt::format("a={:.2f} b={:.2f} c={:.2f} d={:.2f} Hz", f.a, f.b, f.c, f.d)};
  }));
  out.push_back(check("noiseless phases match theory", [&] {
    RunConfig noiseless = cfg;
    noiseless.noise = nmr::NoiseModel::none;
    noiseless.scenarios = nmr::all_scenarios();
    const auto ref = reference_run(noiseless.molecule, noiseless.grid);
    const auto rows = run_rows(noiseless, ref, nullptr);
    bool ok = true;
    std::string detail;
    for (const auto& r : rows) {
      ok = ok && r.pass;
      detail += fmt::format("{}{}={:.6f}", detail.empty() ? "" : " ", nmr::to_string(r.scenario), r.result.theta_deg.value);
    }
    return std::pair{ok, detail};
  }));
  return out;
}

int cmd_run(const CommonOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RunConfig cfg = resolve_config(options);
    RunManifest manifest(options.out, "run", options.config);
    manifest.set_scenarios(scenario_names(cfg));
    manifest.set_seeds(cfg.effective_seeds());

    const Reference ref = reference_run(cfg.molecule, cfg.grid);
    const Provenance ref_prov{options.config, cfg.checksum, "none"};
    manifest.emit("reference_spectrum.csv", spectrum_csv(ref.spectrum));
    manifest.emit("reference_peaks.csv", peaks_csv(ref.spectrum));
    manifest.emit("reference_spectrum.svg", spectrum_svg(ref.spectrum, "labeled PPS reference", ref_prov));

    std::vector<ScenarioOutcome> outcomes;
    const auto rows = run_rows(cfg, ref, &outcomes);
    for (const auto& o : outcomes) {
      const Provenance prov{options.config, cfg.checksum, std::to_string(o.seed)};
      manifest.emit(scenario_file(o.scenario, o.seed, "spectrum.csv"), spectrum_csv(o.spectrum));
      manifest.emit(scenario_file(o.scenario, o.seed, "peaks.csv"), peaks_csv(o.spectrum));
      manifest.emit(scenario_file(o.scenario, o.seed, "spectrum.svg"),
                    spectrum_svg(o.spectrum, fmt::format("{} ({}), seed {}", nmr::to_string(o.scenario),
                                                         nmr::to_string(cfg.noise), o.seed),
                                 prov));
    }
    const std::string seed_label = fmt::format("{}", fmt::join(cfg.effective_seeds(), " "));
    manifest.emit("report.csv", analysis::report_csv(rows));
    manifest.emit("report.svg", report_svg(rows, {options.config, cfg.checksum, seed_label}));
    manifest.write();
    print_report(out, rows);
    return static_cast<int>(kExitOk);
  });
}

int cmd_verify(const CommonOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RunConfig cfg = resolve_config(options);
    const auto checks = verify_checks(cfg);
    bool all = true;
    for (const auto& c : checks) {
      fmt::print(out, "{:<42} {}  {}\n", c.name, c.passed ? "PASS" : "FAIL", c.detail);
      all = all && c.passed;
    }
    return static_cast<int>(all ? kExitOk : kExitInvariantFailed);
  });
}

int cmd_sweep(const CommonOptions& options, const std::string& parameter, const std::vector<double>& values,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RunConfig base = resolve_config(options);
    if (parameter != "t2_scale" && parameter != "gate_fidelity" && parameter != "slices_per_step") {
      throw ConfigError("--param must be t2_scale, gate_fidelity or slices_per_step, got '" + parameter + "'");
    }
    if (values.empty()) throw ConfigError("--values must list at least one value");
    RunManifest manifest(options.out, "sweep " + parameter, options.config);
    manifest.set_scenarios(scenario_names(base));
    manifest.set_seeds(base.effective_seeds());

    std::string csv = "parameter,value,scenario,seed,alpha_sq,beta_sq,theta_deg,pass\n";
    fmt::print(out, "{:<16} {:>10} {:<6} {:>7} {:>12}\n", "parameter", "value", "case", "seed", "theta_deg");
    for (double v : values) {
      RunConfig cfg = base;
      try {
        if (parameter == "t2_scale") {
          cfg.molecule = base.molecule.with_t2_scale(v);
        } else if (parameter == "gate_fidelity") {
          cfg.target_gate_fidelity = v;
        } else {
          if (v < 1 || v != std::floor(v)) throw ConfigError("slices_per_step values must be positive integers");
          cfg.slices_per_step = static_cast<int>(v);
        }
        cfg.scenario_config(nmr::Scenario::noBD, 0).validate();
      } catch (const ContractViolation& e) {
        throw ConfigError(e.what());
      }
      const Reference ref = reference_run(cfg.molecule, cfg.grid);
      for (const auto& r : run_rows(cfg, ref, nullptr)) {
        csv += fmt::format("{},{},{},{},{:.6f},{:.6f},{:.6f},{}\n", parameter, v, nmr::to_string(r.scenario), r.seed,
                           r.result.alpha_sq.value, r.result.beta_sq.value, r.result.theta_deg.value,
                           r.pass ? "pass" : "fail");
        fmt::print(out, "{:<16} {:>10} {:<6} {:>7} {:>12.6f}\n", parameter, v, nmr::to_string(r.scenario), r.seed,
                   r.result.theta_deg.value);
      }
    }
    manifest.emit("sweep.csv", csv);
    manifest.write();
    return static_cast<int>(kExitOk);
  });
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Kitaev-model anyon braiding simulator with NMR emulation"};
  app.require_subcommand(1);
  CommonOptions options;
  std::string parameter;
  std::vector<double> values;

  auto add_common = [&](CLI::App* sub, bool with_run_flags) {
    sub->add_option("--config", options.config, "JSON run configuration")->required()->check(CLI::ExistingFile);
    if (with_run_flags) {
      sub->add_option("--scenario", options.scenario, "noBD, BD0, BD1, BD2 or all");
      sub->add_option("--noise", options.noise, "none, dephasing, gate_imperfection or both");
      sub->add_option("--seed", options.seed, "RNG seed (replaces the config's seed list)");
      sub->add_option("--out", options.out, "output directory")->capture_default_str();
    }
  };
  auto* run = app.add_subcommand("run", "simulate scenarios and write spectra, fits and the phase report");
  add_common(run, true);
  auto* verify = app.add_subcommand("verify", "run the invariant suite and print a pass/fail table");
  add_common(verify, false);
  auto* sweep = app.add_subcommand("sweep", "repeat a run over values of one parameter");
  add_common(sweep, true);
  sweep->add_option("--param", parameter, "t2_scale, gate_fidelity or slices_per_step")->required();
  sweep->add_option("--values", values, "comma-separated values")->required()->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const auto known = nmr::all_scenarios();
  if (options.scenario && *options.scenario != "all") {
    bool ok = false;
    for (auto s : known) ok = ok || nmr::to_string(s) == *options.scenario;
    if (!ok) {
      fmt::print(std::cerr, "unknown scenario '{}'\n\n{}", *options.scenario, app.help());
      return kExitUsage;
    }
  }
  if (run->parsed()) return cmd_run(options, std::cout, std::cerr);
  if (verify->parsed()) return cmd_verify(options, std::cout, std::cerr);
  return cmd_sweep(options, parameter, values, std::cout, std::cerr);
}

}  // namespace anyonsim::cli
