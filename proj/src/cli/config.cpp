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

#include "anyonsim/cli/config.hpp"

#include <fstream>
#include <sstream>

#include "anyonsim/cli/artifacts.hpp"
#include "anyonsim/errors.hpp"
#include "anyonsim/kitaev/lattice.hpp"

namespace anyonsim::cli {

namespace {

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

nlohmann::json inline_or_file(const nlohmann::json& value, const std::filesystem::path& base_dir) {
  if (value.is_string()) return read_json_file(base_dir / value.get<std::string>());
  return value;
}

}  // namespace

nmr::ScenarioConfig RunConfig::scenario_config(nmr::Scenario s, std::uint64_t seed) const {
  nmr::ScenarioConfig cfg;
  cfg.scenario = s;
  cfg.noise = noise;
  cfg.slices_per_step = slices_per_step;
  cfg.target_gate_fidelity = target_gate_fidelity;
  cfg.rng_seed = seed;
  cfg.durations = durations;
  cfg.gd_prefix = gd_prefix;
  if (auto it = loops.find(s); it != loops.end()) cfg.loop = it->second;
  return cfg;
}

std::vector<std::uint64_t> RunConfig::effective_seeds() const {
  const bool random = noise == nmr::NoiseModel::gate_imperfection || noise == nmr::NoiseModel::both;
  if (random || seeds.empty()) return seeds;
  return {seeds.front()};
}

RunConfig config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir) {
  RunConfig cfg;
  try {
    cfg.lattice = j.contains("lattice") ? inline_or_file(j.at("lattice"), base_dir)
                                        : kitaev::lattice_to_json(kitaev::seven_qubit_lattice());
    cfg.molecule = j.contains("molecule") ? nmr::molecule_from_json(inline_or_file(j.at("molecule"), base_dir))
                                          : nmr::default_molecule();
    if (j.contains("scenarios")) {
      for (const auto& s : j.at("scenarios")) cfg.scenarios.push_back(nmr::scenario_from_string(s.get<std::string>()));
    } else {
      cfg.scenarios = nmr::all_scenarios();
    }
    cfg.noise = nmr::noise_from_string(j.value("noise", std::string("none")));
    cfg.slices_per_step = j.value("slices_per_step", cfg.slices_per_step);
    cfg.target_gate_fidelity = j.value("target_gate_fidelity", cfg.target_gate_fidelity);
    if (j.contains("seeds")) cfg.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    if (j.contains("seed")) cfg.seeds = {j.at("seed").get<std::uint64_t>()};
    if (cfg.seeds.empty()) throw ConfigError("seeds must not be empty");
    if (j.contains("durations")) {
      const auto& d = j.at("durations");
      cfg.durations.pps = d.value("pps", cfg.durations.pps);
      cfg.durations.gd = d.value("gd", cfg.durations.gd);
      cfg.durations.braid = d.value("braid", cfg.durations.braid);
      cfg.durations.mm = d.value("mm", cfg.durations.mm);
    }
    if (j.contains("gd_prefix")) {
      cfg.gd_prefix.clear();
      for (const auto& pair : j.at("gd_prefix")) {
        const auto v = pair.get<std::vector<int>>();
        if (v.size() != 2 || v[0] < 1 || v[0] > 7 || v[1] < 1 || v[1] > 7 || v[0] == v[1]) {
          throw ConfigError("gd_prefix entries are [control, target] with distinct spins 1..7");
        }
        cfg.gd_prefix.emplace_back(v[0] - 1, v[1] - 1);
      }
    }
    if (j.contains("loops")) {
      for (const auto& [name, spec] : j.at("loops").items()) {
        const auto s = nmr::scenario_from_string(name);
        if (spec.value("kind", std::string("x_string")) != "x_string") {
          throw ConfigError("loop " + name + ": only kind x_string is supported");
        }
        std::vector<int> qubits;
        for (int q : spec.at("qubits").get<std::vector<int>>()) {
          if (q < 1 || q > 7) throw ConfigError("loop " + name + ": qubit " + std::to_string(q) + " outside 1..7");
          qubits.push_back(q - 1);
        }
        cfg.loops.emplace(s, braiding::BraidLoop(7, std::move(qubits), name));
      }
    }
    if (j.contains("trace")) {
      cfg.grid.points_per_fwhm = j.at("trace").value("points_per_fwhm", cfg.grid.points_per_fwhm);
      cfg.grid.margin_fwhm = j.at("trace").value("margin_fwhm", cfg.grid.margin_fwhm);
    }
    cfg.scenario_config(nmr::Scenario::noBD, 0).validate();
  } catch (const ContractViolation& e) {
    throw ConfigError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  RunConfig cfg = config_from_json(j, path.parent_path());
  cfg.path = path;
  cfg.checksum = sha256_hex(text);
  return cfg;
}

}  // namespace anyonsim::cli
