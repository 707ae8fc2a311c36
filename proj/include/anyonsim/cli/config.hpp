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

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "anyonsim/nmr/scenario.hpp"
#include "anyonsim/nmr/spectrum.hpp"

namespace anyonsim::cli {

/// Malformed or invalid configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::filesystem::path path;
  /// SHA-256 of the config file bytes.
  std::string checksum;
  /// Raw lattice description (1-based); validated by `verify`, not at load time.
  nlohmann::json lattice;
  nmr::MoleculeParams molecule;
  std::vector<nmr::Scenario> scenarios;
  nmr::NoiseModel noise = nmr::NoiseModel::none;
  int slices_per_step = 16;
  double target_gate_fidelity = 0.99;
  std::vector<std::uint64_t> seeds{1};
  nmr::StepDurations durations;
  std::vector<kitaev::CnotPair> gd_prefix = kitaev::default_gd_prefix();
  std::map<nmr::Scenario, braiding::BraidLoop> loops;
  nmr::GridOptions grid;

  nmr::ScenarioConfig scenario_config(nmr::Scenario s, std::uint64_t seed) const;
  /// Seeds that change the outcome: all of them under gate imperfection, else the first.
  std::vector<std::uint64_t> effective_seeds() const;
};

/// Parses the JSON config. Relative "lattice"/"molecule" paths resolve
/// against the config file's directory. Throws ConfigError.
RunConfig load_config(const std::filesystem::path& path);
RunConfig config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir);

}  // namespace anyonsim::cli
