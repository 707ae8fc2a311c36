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

#include "anyonsim/nmr/molecule.hpp"

#include <cmath>
#include <fstream>
#include <string>

#include "anyonsim/errors.hpp"

namespace anyonsim::nmr {

namespace {

void check_length(const std::vector<double>& v, int n, const char* name) {
  if (static_cast<int>(v.size()) != n) {
    throw ContractViolation(std::string(name) + " has one entry per spin",
                            std::to_string(v.size()) + " entries for " + std::to_string(n) + " spins");
  }
}

std::vector<double> read_vector(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw ContractViolation("molecule field present", std::string("missing '") + key + "'");
  return j.at(key).get<std::vector<double>>();
}

}  // namespace

void MoleculeParams::validate() const {
  if (n_spins < 2 || n_spins > 12) {
    throw ContractViolation("spin count in range", std::to_string(n_spins));
  }
  check_length(nu, n_spins, "nu");
  check_length(t1, n_spins, "t1");
  check_length(t2, n_spins, "t2");
  if (j.rows() != n_spins || j.cols() != n_spins) {
    throw ContractViolation("j is n_spins x n_spins",
                            std::to_string(j.rows()) + "x" + std::to_string(j.cols()));
  }
  for (int a = 0; a < n_spins; ++a) {
    if (!std::isfinite(nu[a])) throw ContractViolation("nu is finite", "spin " + std::to_string(a + 1));
    if (j(a, a) != 0.0) {
      throw ContractViolation("j has zero diagonal", "spin " + std::to_string(a + 1));
    }
    for (int b = 0; b < n_spins; ++b) {
      if (!std::isfinite(j(a, b)) || j(a, b) != j(b, a)) {
        throw ContractViolation("j is symmetric",
                                "J(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")");
      }
    }
    if (!(t2[a] > 0.0)) {
      throw ContractViolation("T2 > 0", "spin " + std::to_string(a + 1) + " has T2 = " + std::to_string(t2[a]));
    }
    if (!(t1[a] >= t2[a])) {
      throw ContractViolation("T1 >= T2", "spin " + std::to_string(a + 1) + " has T1 = " +
                                              std::to_string(t1[a]) + ", T2 = " + std::to_string(t2[a]));
    }
  }
  if (observe_spin < 0 || observe_spin >= n_spins) {
    throw ContractViolation("observe spin in range", std::to_string(observe_spin + 1));
  }
}

std::vector<int> MoleculeParams::other_spins() const {
  std::vector<int> out;
  for (int s = 0; s < n_spins; ++s) {
    if (s != observe_spin) out.push_back(s);
  }
  return out;
}

MoleculeParams MoleculeParams::with_t2_scale(double factor) const {
  if (!(factor > 0.0)) throw ContractViolation("T2 scale > 0", std::to_string(factor));
  MoleculeParams out = *this;
  for (double& t : out.t2) t *= factor;
  return out;
}

MoleculeParams default_molecule() {
  MoleculeParams p;
  p.n_spins = 7;
  p.observe_spin = 6;
  p.nu.assign(7, 0.0);
  p.t1.assign(7, 5.0);
  p.t2.assign(7, 3.0);
  p.j = Eigen::MatrixXd::Zero(7, 7);
  const double to_observed[6] = {29.015, 10.30, 46.025, 22.77, 11.335, 3.06};
  for (int s = 0; s < 6; ++s) {
    p.j(s, 6) = to_observed[s];
    p.j(6, s) = to_observed[s];
  }
  return p;
}

MoleculeParams molecule_from_json(const nlohmann::json& j) {
  MoleculeParams p;
  p.nu = read_vector(j, "nu");
  p.n_spins = static_cast<int>(p.nu.size());
  p.t1 = read_vector(j, "t1");
  p.t2 = read_vector(j, "t2");
  if (!j.contains("j")) throw ContractViolation("molecule field present", "missing 'j'");
  const auto rows = j.at("j").get<std::vector<std::vector<double>>>();
  p.j = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows.size()),
                              rows.empty() ? 0 : static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.front().size()) throw ContractViolation("j is rectangular", "row " + std::to_string(r + 1));
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      p.j(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    }
  }
  p.observe_spin = j.value("observe_spin", p.n_spins) - 1;
  p.validate();
  return p;
}

nlohmann::json molecule_to_json(const MoleculeParams& params) {
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(params.n_spins));
  for (int r = 0; r < params.n_spins; ++r) {
    for (int c = 0; c < params.n_spins; ++c) rows[static_cast<std::size_t>(r)].push_back(params.j(r, c));
  }
  return {{"nu", params.nu},
          {"j", rows},
          {"t1", params.t1},
          {"t2", params.t2},
          {"observe_spin", params.observe_spin + 1}};
}

MoleculeParams load_molecule(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ContractViolation("molecule file is readable", path.string());
  return molecule_from_json(nlohmann::json::parse(in));
}

}  // namespace anyonsim::nmr
