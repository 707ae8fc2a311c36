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

#include "anyonsim/kitaev/lattice.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "anyonsim/errors.hpp"
#include "anyonsim/qsim/types.hpp"

namespace anyonsim::kitaev {

namespace {

void check_sites(int n_qubits, const std::vector<std::vector<int>>& sites, const char* kind) {
  for (std::size_t s = 0; s < sites.size(); ++s) {
    std::set<int> seen;
    if (sites[s].empty()) {
      throw ContractViolation("lattice site is non-empty", std::string(kind) + " " + std::to_string(s + 1));
    }
    for (int q : sites[s]) {
      if (q < 0 || q >= n_qubits) {
        throw ContractViolation("qubit index < n_qubits", std::string(kind) + " " + std::to_string(s + 1) +
                                                              " references qubit " + std::to_string(q + 1));
      }
      if (!seen.insert(q).second) {
        throw ContractViolation("lattice site has distinct qubits",
                                std::string(kind) + " " + std::to_string(s + 1) + " repeats qubit " +
                                    std::to_string(q + 1));
      }
    }
  }
}

std::string stabilizer_name(const LatticeSpec& lattice, int index) {
  if (index < lattice.n_vertices()) return "A" + std::to_string(index + 1);
  return "B" + std::to_string(index - lattice.n_vertices() + 1);
}

std::vector<std::vector<int>> read_sites(const nlohmann::json& j, const char* key, int n_qubits) {
  std::vector<std::vector<int>> out;
  if (!j.contains(key)) return out;
  for (const auto& site : j.at(key)) {
    std::vector<int> qubits;
    for (const auto& q : site) {
      const int one_based = q.get<int>();
      if (one_based < 1 || one_based > n_qubits) {
        throw ContractViolation("qubit index < n_qubits",
                                std::string(key) + " entry " + std::to_string(one_based) +
                                    " outside 1.." + std::to_string(n_qubits));
      }
      qubits.push_back(one_based - 1);
    }
    out.push_back(std::move(qubits));
  }
  return out;
}

}  // namespace

std::string to_string(Boundary b) { return b == Boundary::toric ? "toric" : "rough"; }

Boundary boundary_from_string(const std::string& text) {
  if (text == "toric") return Boundary::toric;
  if (text == "rough") return Boundary::rough;
  throw ContractViolation("boundary is toric or rough", "'" + text + "'");
}

LatticeSpec::LatticeSpec(int n_qubits, std::vector<std::vector<int>> vertices,
                         std::vector<std::vector<int>> plaquettes, Boundary boundary)
    : n_qubits_(n_qubits),
      vertices_(std::move(vertices)),
      plaquettes_(std::move(plaquettes)),
      boundary_(boundary) {
  if (n_qubits_ < 1 || n_qubits_ > qsim::kMaxQubits) {
    throw ContractViolation("qubit count in range", "n_qubits = " + std::to_string(n_qubits_));
  }
  check_sites(n_qubits_, vertices_, "vertex");
  check_sites(n_qubits_, plaquettes_, "plaquette");
  const auto [i, j] = first_noncommuting_pair(stabilizers());
  if (i >= 0) {
    throw ContractViolation("stabilizers commute",
                            stabilizer_name(*this, i) + " anticommutes with " + stabilizer_name(*this, j));
  }
}

PauliString LatticeSpec::vertex_operator(int v) const {
  return PauliString::x_on(n_qubits_, vertices_.at(static_cast<std::size_t>(v)));
}

PauliString LatticeSpec::plaquette_operator(int p) const {
  return PauliString::z_on(n_qubits_, plaquettes_.at(static_cast<std::size_t>(p)));
}

std::vector<PauliString> LatticeSpec::vertex_operators() const {
  std::vector<PauliString> out;
  for (int v = 0; v < n_vertices(); ++v) out.push_back(vertex_operator(v));
  return out;
}

std::vector<PauliString> LatticeSpec::plaquette_operators() const {
  std::vector<PauliString> out;
  for (int p = 0; p < n_plaquettes(); ++p) out.push_back(plaquette_operator(p));
  return out;
}

std::vector<PauliString> LatticeSpec::stabilizers() const {
  auto out = vertex_operators();
  auto bonds = plaquette_operators();
  out.insert(out.end(), bonds.begin(), bonds.end());
  return out;
}

std::pair<int, int> first_noncommuting_pair(const std::vector<PauliString>& ops) {
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      if (!ops[i].commutes_with(ops[j])) return {static_cast<int>(i), static_cast<int>(j)};
    }
  }
  return {-1, -1};
}

LatticeSpec seven_qubit_lattice() {
  return LatticeSpec(7, {{0, 1, 2, 3}, {3, 4, 5, 6}},
                     {{0, 1}, {0, 2}, {1, 3, 4}, {2, 3, 5}, {4, 6}}, Boundary::rough);
}

LatticeSpec toric_lattice(int size) {
  if (size < 2) throw ContractViolation("toric size >= 2", std::to_string(size));
  const int n = 2 * size * size;
  auto wrap = [size](int k) { return ((k % size) + size) % size; };
  auto horizontal = [&](int r, int c) { return 2 * (wrap(r) * size + wrap(c)); };
  auto vertical = [&](int r, int c) { return 2 * (wrap(r) * size + wrap(c)) + 1; };
  std::vector<std::vector<int>> vertices;
  std::vector<std::vector<int>> plaquettes;
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) {
      vertices.push_back({horizontal(r, c), horizontal(r, c - 1), vertical(r, c), vertical(r - 1, c)});
      plaquettes.push_back({horizontal(r, c), horizontal(r + 1, c), vertical(r, c), vertical(r, c + 1)});
    }
  }
  return LatticeSpec(n, std::move(vertices), std::move(plaquettes), Boundary::toric);
}

LatticeSpec planar_rough_lattice(int rows, int cols) {
  if (rows < 1 || cols < 1) {
    throw ContractViolation("grid size >= 1", std::to_string(rows) + "x" + std::to_string(cols));
  }
  // Edge numbering walks column by column: the horizontal edges to the left of
  // vertex column c, then the vertical edges of column c, and finally the
  // horizontal edges on the right border.
  const int per_column = rows + (rows + 1);
  auto horizontal = [&](int r, int c) { return c * per_column + r; };
  auto vertical = [&](int r, int c) { return c * per_column + rows + r; };
  const int n = cols * per_column + rows;

  std::vector<std::vector<int>> vertices;
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) {
      vertices.push_back({horizontal(r, c), vertical(r, c), vertical(r + 1, c), horizontal(r, c + 1)});
    }
  }
  std::vector<std::vector<int>> plaquettes;
  for (int j = 0; j <= cols; ++j) {
    for (int i = 0; i <= rows; ++i) {
      std::vector<int> face;
      if (i - 1 >= 0) face.push_back(horizontal(i - 1, j));
      if (i < rows) face.push_back(horizontal(i, j));
      if (j - 1 >= 0) face.push_back(vertical(i, j - 1));
      if (j < cols) face.push_back(vertical(i, j));
      std::sort(face.begin(), face.end());
      plaquettes.push_back(std::move(face));
    }
  }
  for (auto& v : vertices) std::sort(v.begin(), v.end());
  return LatticeSpec(n, std::move(vertices), std::move(plaquettes), Boundary::rough);
}

LatticeSpec lattice_from_json(const nlohmann::json& j) {
  const int n = j.at("n_qubits").get<int>();
  const Boundary boundary = boundary_from_string(j.value("boundary", std::string("rough")));
  return LatticeSpec(n, read_sites(j, "vertices", n), read_sites(j, "plaquettes", n), boundary);
}

nlohmann::json lattice_to_json(const LatticeSpec& lattice) {
  auto one_based = [](const std::vector<std::vector<int>>& sites) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& s : sites) {
      nlohmann::json site = nlohmann::json::array();
      for (int q : s) site.push_back(q + 1);
      out.push_back(site);
    }
    return out;
  };
  return {{"n_qubits", lattice.n_qubits()},
          {"boundary", to_string(lattice.boundary())},
          {"vertices", one_based(lattice.vertices())},
          {"plaquettes", one_based(lattice.plaquettes())}};
}

LatticeSpec load_lattice(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ContractViolation("lattice file is readable", path.string());
  return lattice_from_json(nlohmann::json::parse(in));
}

}  // namespace anyonsim::kitaev
