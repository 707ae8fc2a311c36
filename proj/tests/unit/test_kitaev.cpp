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

#include <cmath>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "anyonsim/errors.hpp"
#include "anyonsim/kitaev/gd_circuit.hpp"
#include "anyonsim/kitaev/hamiltonian.hpp"
#include "anyonsim/kitaev/lattice.hpp"
#include "anyonsim/kitaev/seven_qubit.hpp"
#include "anyonsim/qsim/gates.hpp"
#include "anyonsim/qsim/unitary.hpp"

namespace anyonsim::kitaev {
namespace {

using qsim::Complex;
using qsim::StateVector;
using qsim::overlap;


double lowest_eigenvalue(const Eigen::MatrixXd& h) {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(h, Eigen::EigenvaluesOnly).eigenvalues()(0);
}

void expect_eq3_state(const StateVector& psi) {
  for (std::uint64_t b = 0; b < 128; ++b) {
    const bool member = b == 0b0000000 || b == 0b1111000 || b == 0b0001111 || b == 0b1110111;
    EXPECT_NEAR(std::abs(psi.amplitude(b)), member ? 0.5 : 0.0, 1e-12) << b;
  }
}

void expect_stabilized(const StateVector& psi, const LatticeSpec& lattice) {
  for (const auto& s : lattice.stabilizers()) EXPECT_NEAR(qsim::pauli_expectation(psi, s), 1.0, 1e-10) << s.str();
}

TEST(Lattice, SevenQubitStabilizersAreExact) {
  const SevenQubitModel model;
  const char* expected[7] = {"XXXXIII", "IIIXXXX", "ZZIIIII", "ZIZIIII", "IZIZZII", "IIZZIZI", "IIIIZIZ"};
  for (int k = 0; k < 7; ++k) EXPECT_EQ(model.stabilizers()[static_cast<std::size_t>(k)], qsim::PauliString::parse(expected[k]));
  EXPECT_EQ(SevenQubitModel::stabilizer_names()[0], "A1");
  EXPECT_EQ(SevenQubitModel::stabilizer_names()[6], "B5");
}

TEST(Lattice, RejectsInvalidSites) {
  EXPECT_THROW(LatticeSpec(3, {{0, 3}}, {}, Boundary::rough), ContractViolation);
  EXPECT_THROW(LatticeSpec(3, {{0, 0}}, {}, Boundary::rough), ContractViolation);
  EXPECT_THROW(LatticeSpec(3, {{}}, {}, Boundary::rough), ContractViolation);
  EXPECT_THROW(LatticeSpec(2, {{0, 1}}, {{0}}, Boundary::rough), ContractViolation);
  EXPECT_THROW(boundary_from_string("open"), ContractViolation);
  EXPECT_THROW(toric_lattice(3), ContractViolation);
}

TEST(Lattice, AcceptedLatticesCommutePairwise) {
  for (const auto& lattice : {seven_qubit_lattice(), toric_lattice(2), planar_rough_lattice(1, 2),
                              planar_rough_lattice(2, 2), planar_rough_lattice(1, 1)}) {
    const auto ops = lattice.stabilizers();
    for (std::size_t i = 0; i < ops.size(); ++i) {
      for (std::size_t j = i + 1; j < ops.size(); ++j) {
        if (lattice.n_qubits() <= 8) {
          const qsim::CMatrix a = ops[i].to_dense(), b = ops[j].to_dense();
          EXPECT_LT((a * b - b * a).cwiseAbs().maxCoeff(), 1e-12);
        }
        EXPECT_TRUE(ops[i].commutes_with(ops[j]));
      }
    }
  }
}

TEST(Lattice, PlanarOneByTwoExtendsSevenQubitModel) {
  const auto planar = planar_rough_lattice(1, 2);
  const auto seven = seven_qubit_lattice();
  EXPECT_EQ(planar.n_qubits(), 7);
  EXPECT_EQ(planar.vertex_operators(), seven.vertex_operators());
  for (const auto& b : seven.plaquette_operators()) {
    const auto& have = planar.plaquette_operators();
    EXPECT_NE(std::find(have.begin(), have.end(), b), have.end()) << b.str();
  }
  EXPECT_EQ(stabilizer_rank(planar), stabilizer_rank(seven));
}

TEST(Lattice, JsonRoundTrip) {
  const auto toric = toric_lattice(2);
  const auto back = lattice_from_json(lattice_to_json(toric));
  EXPECT_EQ(back.vertices(), toric.vertices());
  EXPECT_EQ(back.plaquettes(), toric.plaquettes());
  EXPECT_EQ(back.boundary(), Boundary::toric);
  const nlohmann::json bad = {{"n_qubits", 2}, {"vertices", {{1, 3}}}, {"plaquettes", nlohmann::json::array()}};
  EXPECT_THROW(lattice_from_json(bad), ContractViolation);
}

TEST(Hamiltonian, GroundEnergies) {
  const auto h7 = build_hamiltonian(seven_qubit_lattice());
  EXPECT_EQ(h7.rows(), 128);
  EXPECT_NEAR(lowest_eigenvalue(h7), -7.0, 1e-10);
  EXPECT_NEAR(lowest_eigenvalue(build_hamiltonian(toric_lattice(2))), -8.0, 1e-10);
  const LatticeSpec empty(2, {}, {}, Boundary::rough);
  EXPECT_EQ(build_hamiltonian(empty), Eigen::MatrixXd::Zero(4, 4));
}

TEST(Hamiltonian, IsSymmetric) {
  const auto h = build_hamiltonian(toric_lattice(2));
  EXPECT_LT((h - h.transpose()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(GroundSpace, Degeneracies) {
  const auto seven = ground_space(seven_qubit_lattice());
  EXPECT_EQ(seven.degeneracy, 1);
  EXPECT_NEAR(seven.energy, -7.0, 1e-10);
  expect_eq3_state(StateVector::normalized(7, seven.basis.col(0)));

  EXPECT_EQ(ground_space(toric_lattice(2)).degeneracy, 4);
  EXPECT_EQ(ground_space(LatticeSpec(2, {}, {{0, 1}}, Boundary::rough)).degeneracy, 2);
}

TEST(GroundSpace, StabilizerProjectionAboveDenseLimit) {
  const auto planar = planar_rough_lattice(2, 2);
  ASSERT_GT(planar.n_qubits(), kDenseDiagonalizationQubits);
  const auto gs = ground_space(planar);
  EXPECT_EQ(gs.method, GroundSpaceMethod::stabilizer_projection);
  EXPECT_EQ(gs.degeneracy, 1);
  EXPECT_NEAR(gs.energy, -static_cast<double>(planar.stabilizers().size()), 1e-10);
  const auto psi = StateVector::normalized(planar.n_qubits(), gs.basis.col(0));
  expect_stabilized(psi, planar);
}

TEST(GroundSpace, ProjectionAndDiagonalizationAgreeOnSmallLattices) {
  // The toric ground space is four-dimensional; the projected state must lie in it.
  for (const auto& lattice : {seven_qubit_lattice(), planar_rough_lattice(1, 1), toric_lattice(2)}) {
    const auto gs = ground_space(lattice);
    const auto psi = ground_state_by_projection(lattice);
    const double weight = (gs.basis.adjoint() * psi.amplitudes()).norm();
    EXPECT_NEAR(weight, 1.0, 1e-10);
  }
}

TEST(GroundStateByProjection, Examples) {
  const auto psi = ground_state_by_projection(seven_qubit_lattice());
  expect_eq3_state(psi);
  expect_stabilized(psi, seven_qubit_lattice());
  const auto plain = ground_state_by_projection(LatticeSpec(3, {}, {{0, 1}}, Boundary::rough));
  EXPECT_EQ(plain.amplitude(0), Complex(1.0, 0.0));
  expect_stabilized(ground_state_by_projection(planar_rough_lattice(2, 2)), planar_rough_lattice(2, 2));
}

TEST(SevenQubitModel, GroundStateHasFourEqualAmplitudes) {
  const auto g = SevenQubitModel::ground_state();
  int nonzero = 0;
  for (std::uint64_t b = 0; b < 128; ++b) nonzero += std::abs(g.amplitude(b)) > 1e-12;
  EXPECT_EQ(nonzero, 4);
  expect_eq3_state(g);
  EXPECT_NEAR(overlap(SevenQubitModel::excited_state(), g), 0.0, 1e-12);
}

TEST(GdCircuit, PreparesGroundState) {
  const auto gd = gd_circuit();
  const auto out = qsim::apply_unitary(StateVector(7), gd.composite);
  expect_eq3_state(out);
  expect_stabilized(out, seven_qubit_lattice());
  EXPECT_DOUBLE_EQ(gd.composite.duration(), kGdDuration);
  EXPECT_NEAR(overlap(qsim::apply_unitary(StateVector::from_bits("0000001"), gd.composite),
                      SevenQubitModel::ground_state()),
              0.0, 1e-12);
}

TEST(GdCircuit, GateListProductEqualsComposite) {
  for (const auto& prefix : {default_gd_prefix(), std::vector<CnotPair>{}}) {
    const auto gd = gd_circuit(prefix);
    qsim::CMatrix product = qsim::CMatrix::Identity(128, 128);
    for (const auto& g : gd.gates) {
      EXPECT_TRUE(g.label().starts_with("H") || g.label().starts_with("CNOT")) << g.label();
      product = g.matrix() * product;
    }
    EXPECT_LT((product - gd.composite.matrix()).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT((gd.a1_block.matrix() * gd.a2_block.matrix() - gd.a2_block.matrix() * gd.a1_block.matrix())
                  .cwiseAbs()
                  .maxCoeff(),
              1e-12);
  }
}

TEST(GdCircuit, StabilizerPullbackIsPauli) {
  const auto u = gd_circuit().composite.matrix();
  for (const auto& s : SevenQubitModel().stabilizers()) {
    const auto pulled = qsim::recognize_pauli(u.adjoint() * s.to_dense() * u);
    ASSERT_TRUE(pulled.has_value()) << s.str();
    EXPECT_EQ(pulled->x_mask(), 0U) << s.str() << " -> " << pulled->str();
  }
}

}  // namespace
}  // namespace anyonsim::kitaev
