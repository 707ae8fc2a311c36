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
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "anyonsim/qsim/pauli_string.hpp"

namespace anyonsim::kitaev {

using qsim::PauliString;

enum class Boundary { toric, rough };

std::string to_string(Boundary b);
Boundary boundary_from_string(const std::string& text);

/// Qubit-level description of a Kitaev lattice: one X-type star per vertex and
/// one Z-type bond term per plaquette. Qubit indices are 0-based.
class LatticeSpec {
 public:
  LatticeSpec() = default;
  /// Validates index ranges, duplicate-free sites and mutual commutation of
  /// every generated stabilizer.
  LatticeSpec(int n_qubits, std::vector<std::vector<int>> vertices,
              std::vector<std::vector<int>> plaquettes, Boundary boundary);

  int n_qubits() const { return n_qubits_; }
  const std::vector<std::vector<int>>& vertices() const { return vertices_; }
  const std::vector<std::vector<int>>& plaquettes() const { return plaquettes_; }
  Boundary boundary() const { return boundary_; }
  int n_vertices() const { return static_cast<int>(vertices_.size()); }
  int n_plaquettes() const { return static_cast<int>(plaquettes_.size()); }

  /// A_v = product of X over star(v).
  PauliString vertex_operator(int v) const;
  /// B_p = product of Z over bond(p).
  PauliString plaquette_operator(int p) const;
  std::vector<PauliString> vertex_operators() const;
  std::vector<PauliString> plaquette_operators() const;
  /// Vertex operators first, then plaquette operators.
  std::vector<PauliString> stabilizers() const;

 private:
  int n_qubits_ = 0;
  std::vector<std::vector<int>> vertices_;
  std::vector<std::vector<int>> plaquettes_;
  Boundary boundary_ = Boundary::rough;
};

/// First pair (i, j) of non-commuting operators, or {-1, -1}.
std::pair<int, int> first_noncommuting_pair(const std::vector<PauliString>& ops);

/// Two-vertex rough-boundary model: A1 = X1X2X3X4, A2 = X4X5X6X7 and the five
/// bond terms Z1Z2, Z1Z3, Z2Z4Z5, Z3Z4Z6, Z5Z7.
LatticeSpec seven_qubit_lattice();

/// L x L periodic lattice with 2 L^2 edge qubits.
LatticeSpec toric_lattice(int size);

/// rows x cols vertex grid whose outer edges dangle, giving two- and three-body
/// boundary plaquettes. 1 x 2 reproduces the seven-qubit model plus the
/// redundant Z6Z7 term.
LatticeSpec planar_rough_lattice(int rows, int cols);

/// JSON form: {"n_qubits", "boundary", "vertices": [[...]], "plaquettes": [[...]]}
/// with 1-based qubit indices.
LatticeSpec lattice_from_json(const nlohmann::json& j);
nlohmann::json lattice_to_json(const LatticeSpec& lattice);
LatticeSpec load_lattice(const std::filesystem::path& path);

}  // namespace anyonsim::kitaev
