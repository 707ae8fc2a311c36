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

#include <filesystem>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

namespace anyonsim::nmr {

/// Spin-system calibration. Spin indices are 0-based; frequencies in Hz, times in s.
struct MoleculeParams {
  int n_spins = 7;
  std::vector<double> nu;
  /// Symmetric coupling matrix with zero diagonal.
  Eigen::MatrixXd j;
  std::vector<double> t1;
  std::vector<double> t2;
  int observe_spin = 6;

  /// Throws ContractViolation naming the broken invariant.
  void validate() const;

  double coupling(int a, int b) const { return j(a, b); }
  /// Spins other than the observed one, ascending.
  std::vector<int> other_spins() const;
  MoleculeParams with_t2_scale(double factor) const;
};

/// Placeholder calibration: couplings to the observed spin 29.015, 10.30, 46.025,
/// 22.77, 11.335, 3.06 Hz, other couplings 0, nu = 0, T2 = 3 s, T1 = 5 s.
MoleculeParams default_molecule();

/// {"nu": [...], "j": [[...]], "t1": [...], "t2": [...], "observe_spin": k} with
/// 1-based observe_spin.
MoleculeParams molecule_from_json(const nlohmann::json& j);
nlohmann::json molecule_to_json(const MoleculeParams& params);
MoleculeParams load_molecule(const std::filesystem::path& path);

}  // namespace anyonsim::nmr
