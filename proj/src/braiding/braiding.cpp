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

#include "anyonsim/braiding/braiding.hpp"

#include <cmath>
#include <numbers>

#include "anyonsim/errors.hpp"
#include "anyonsim/kitaev/seven_qubit.hpp"

namespace anyonsim::braiding {

namespace {

constexpr double kEigenTolerance = 1e-8;

std::vector<int> mask_to_qubits(std::uint64_t mask, int n) {
  std::vector<int> out;
  for (int q = 0; q < n; ++q) {
    if ((mask >> q) & 1U) out.push_back(q);
  }
  return out;
}

int site_sign(double expectation, const std::string& name) {
  if (std::abs(expectation - 1.0) <= kEigenTolerance) return 1;
  if (std::abs(expectation + 1.0) <= kEigenTolerance) return -1;
  throw ContractViolation("state is a stabilizer eigenstate",
                          "<" + name + "> = " + std::to_string(expectation));
}

void check_setup(const BraidingSetup& setup) {
  const int n = setup.lattice.n_qubits();
  if (setup.charge.n_qubits() != n || setup.m_creator.n_qubits() != n) {
    throw ContractViolation("equal qubit counts", "braiding setup");
  }
  if (setup.charge.x_mask() != 0 || !setup.charge.is_hermitian()) {
    throw ContractViolation("charge is a Hermitian Z string", setup.charge.str());
  }
  if (setup.m_creator.z_mask() != 0 || !setup.m_creator.is_hermitian()) {
    throw ContractViolation("m creator is a Hermitian X string", setup.m_creator.str());
  }
  if (!setup.charge.commutes_with(setup.m_creator)) {
    throw ContractViolation("charge commutes with the m creator",
                            setup.charge.str() + " vs " + setup.m_creator.str());
  }
}

}  // namespace

BraidLoop::BraidLoop(int n_qubits, std::vector<int> qubits, std::string name)
    : qubits_(std::move(qubits)), op_(PauliString::x_on(n_qubits, qubits_)), name_(std::move(name)) {}

ExcitationConfig detect_defects(const StateVector& state, const LatticeSpec& lattice) {
  ExcitationConfig out;
  for (int v = 0; v < lattice.n_vertices(); ++v) {
    const double e = qsim::pauli_expectation(state, lattice.vertex_operator(v));
    if (site_sign(e, "A" + std::to_string(v + 1)) < 0) out.e_sites.push_back(v);
  }
  for (int p = 0; p < lattice.n_plaquettes(); ++p) {
    const double e = qsim::pauli_expectation(state, lattice.plaquette_operator(p));
    if (site_sign(e, "B" + std::to_string(p + 1)) < 0) out.m_sites.push_back(p);
  }
  return out;
}

bool validate_loop(const BraidLoop& loop, const LatticeSpec& lattice) {
  if (loop.op().n_qubits() != lattice.n_qubits()) return false;
  for (const auto& b : lattice.plaquette_operators()) {
    if (!loop.op().commutes_with(b)) return false;
  }
  return true;
}

double braiding_parity(const BraidLoop& loop, const PauliString& charge) {
  return loop.op().commutes_with(charge) ? 0.0 : std::numbers::pi;
}

BraidingSetup seven_qubit_setup() {
  constexpr int n = kitaev::SevenQubitModel::kQubits;
  return {kitaev::seven_qubit_lattice(), PauliString::single(n, 0, 'Z'), PauliString::single(n, 4, 'X')};
}

qsim::CMatrix pauli_square_root(const PauliString& c) {
  if (!c.is_hermitian()) throw ContractViolation("Pauli observable is Hermitian", c.str());
  const auto dim = static_cast<Eigen::Index>(qsim::dimension(c.n_qubits()));
  const qsim::Complex prefactor = std::polar(1.0 / std::sqrt(2.0), std::numbers::pi / 4.0);
  return prefactor * (qsim::CMatrix::Identity(dim, dim) - qsim::Complex(0, 1) * c.to_dense());
}

StateVector create_superposition(const BraidingSetup& setup, const StateVector& ground) {
  check_setup(setup);
  const qsim::CVector moved = setup.m_creator.apply(ground.amplitudes());
  return StateVector(ground.n_qubits(), pauli_square_root(setup.charge) * moved);
}

StateVector create_superposition(const StateVector& ground) {
  return create_superposition(seven_qubit_setup(), ground);
}

qsim::UnitaryStep braid_step(const BraidingSetup& setup, const std::optional<BraidLoop>& loop,
                             double duration_s) {
  check_setup(setup);
  if (loop && !validate_loop(*loop, setup.lattice)) {
    throw ContractViolation("loop commutes with every plaquette", loop->op().str());
  }
  const auto n = setup.lattice.n_qubits();
  const auto dim = static_cast<Eigen::Index>(qsim::dimension(n));
  const qsim::CMatrix create = pauli_square_root(setup.charge) * setup.m_creator.to_dense();
  const qsim::CMatrix middle = loop ? loop->op().to_dense() : qsim::CMatrix::Identity(dim, dim);
  const std::string label = loop ? "braid(" + (loop->name().empty() ? loop->op().str() : loop->name()) + ")"
                                 : "no-braid";
  return qsim::UnitaryStep(label, create.adjoint() * middle * create, duration_s);
}

StateVector run_braiding_pipeline(const BraidingSetup& setup, const StateVector& ground,
                                  const std::optional<BraidLoop>& loop) {
  if (loop && !validate_loop(*loop, setup.lattice)) {
    throw ContractViolation("loop commutes with every plaquette", loop->op().str());
  }
  const StateVector created = create_superposition(setup, ground);
  qsim::CVector v = created.amplitudes();
  if (loop) v = loop->op().apply(v);
  v = pauli_square_root(setup.charge).adjoint() * v;
  v = setup.m_creator.apply(v);
  return StateVector(ground.n_qubits(), std::move(v));
}

StateVector run_braiding_pipeline(const std::optional<BraidLoop>& loop) {
  return run_braiding_pipeline(seven_qubit_setup(), kitaev::SevenQubitModel::ground_state(), loop);
}

double evolved_braiding_phase(const BraidingSetup& setup, const StateVector& ground,
                              const BraidLoop& loop) {
  const StateVector final_state = run_braiding_pipeline(setup, ground, loop);
  const StateVector transported(ground.n_qubits(), loop.op().apply(ground.amplitudes()));
  const double c = std::min(1.0, overlap(transported, final_state));
  return 2.0 * std::acos(c);
}

BraidLoop deform(const BraidLoop& loop, const LatticeSpec& lattice, int vertex) {
  const auto product = loop.op() * lattice.vertex_operator(vertex);
  return BraidLoop(lattice.n_qubits(), mask_to_qubits(product.x_mask(), lattice.n_qubits()),
                   loop.name().empty() ? "" : loop.name() + "*A" + std::to_string(vertex + 1));
}

std::vector<BraidLoop> seven_qubit_loops() {
  constexpr int n = kitaev::SevenQubitModel::kQubits;
  return {BraidLoop(n, {3, 4, 5, 6}, "l0"), BraidLoop(n, {0, 1, 2, 4, 5, 6}, "l1"),
          BraidLoop(n, {0, 1, 2, 3}, "l2")};
}

BraidLoop seven_qubit_loop(int index) { return seven_qubit_loops().at(static_cast<std::size_t>(index)); }

}  // namespace anyonsim::braiding
