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
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "anyonsim/errors.hpp"
#include "anyonsim/kitaev/gd_circuit.hpp"
#include "anyonsim/kitaev/seven_qubit.hpp"
#include "anyonsim/nmr/perturb.hpp"
#include "anyonsim/qsim/channels.hpp"
#include "anyonsim/qsim/gates.hpp"
#include "anyonsim/qsim/matrix_functions.hpp"
#include "anyonsim/qsim/pauli_string.hpp"
#include "anyonsim/qsim/state.hpp"
#include "anyonsim/qsim/unitary.hpp"

namespace anyonsim::qsim {
namespace {

using kitaev::SevenQubitModel;

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

// Dense reference built from Kronecker products, first qubit leftmost.
CMatrix dense_reference(const PauliString& p) {
  CMatrix i2 = CMatrix::Identity(2, 2), x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, Complex(0, -1), Complex(0, 1), 0;
  z << 1, 0, 0, -1;
  CMatrix out = CMatrix::Identity(1, 1);
  for (int q = 0; q < p.n_qubits(); ++q) {
    const char c = p.pauli_at(q);
    out = kron(out, c == 'X' ? x : c == 'Y' ? y : c == 'Z' ? z : i2);
  }
  static const Complex powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return powers[p.phase()] * out;
}

PauliString random_pauli(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> mask(0, (std::uint64_t{1} << n) - 1);
  std::uniform_int_distribution<int> phase(0, 3);
  return PauliString(n, mask(rng), mask(rng), phase(rng));
}

CMatrix random_unitary(int n, std::uint64_t seed) {
  const auto dim = static_cast<Eigen::Index>(dimension(n));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  CMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = Complex(g(rng), g(rng));
  }
  Eigen::HouseholderQR<CMatrix> qr(m);
  return qr.householderQ() * CMatrix::Identity(dim, dim);
}

TEST(PauliString, ParseAndPrint) {
  const auto p = PauliString::parse("-iXIZY");
  EXPECT_EQ(p.n_qubits(), 4);
  EXPECT_EQ(p.phase(), 3);
  EXPECT_EQ(p.str(), "-iXIZY");
  EXPECT_EQ(p.weight(), 3);
  EXPECT_EQ(p.support(), (std::vector<int>{0, 2, 3}));
  EXPECT_THROW(PauliString::parse("XQ"), ContractViolation);
}

TEST(PauliString, DenseMatchesKroneckerReference) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 5;
    const auto p = random_pauli(n, rng);
    EXPECT_LT((p.to_dense() - dense_reference(p)).cwiseAbs().maxCoeff(), 1e-14) << p.str();
  }
}

TEST(PauliString, ProductMatchesMatrixProduct) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 6;
    const auto a = random_pauli(n, rng);
    const auto b = random_pauli(n, rng);
    EXPECT_LT(((a * b).to_dense() - a.to_dense() * b.to_dense()).cwiseAbs().maxCoeff(), 1e-14)
        << a.str() << " * " << b.str();
  }
}

TEST(PauliString, ApplyMatchesDense) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 6;
    const auto p = random_pauli(n, rng);
    const CVector v = CVector::Random(static_cast<Eigen::Index>(dimension(n)));
    EXPECT_LT((p.apply(v) - p.to_dense() * v).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(PauliString, CommutationExamples) {
  const auto z1 = PauliString::parse("ZIIIIII");
  EXPECT_EQ(commutation_parity(z1, PauliString::parse("IIIXXXX")), Commutation::commute);
  EXPECT_EQ(commutation_parity(z1, PauliString::parse("XXXXIII")), Commutation::anticommute);
  const auto x1 = PauliString::parse("XIIIIII");
  EXPECT_EQ(commutation_parity(x1, x1), Commutation::commute);
  EXPECT_THROW(commutation_parity(z1, PauliString::parse("ZZ")), ContractViolation);
}

TEST(PauliString, CommutationAgreesWithDenseCommutatorOnRandomPairs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 8;
    const auto a = random_pauli(n, rng);
    const auto b = random_pauli(n, rng);
    const CMatrix da = a.to_dense(), db = b.to_dense();
    const bool dense_commute = (da * db - db * da).cwiseAbs().maxCoeff() < 1e-12;
    EXPECT_EQ(commutation_parity(a, b) == Commutation::commute, dense_commute) << a.str() << " " << b.str();
  }
}

TEST(PauliString, RecognizePauliRoundTrip) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_pauli(1 + trial % 5, rng);
    const auto r = recognize_pauli(p.to_dense());
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(*r, p);
  }
  EXPECT_FALSE(recognize_pauli(hadamard(1, 0).matrix()).has_value());
}

TEST(StateVector, ConstructionChecks) {
  EXPECT_NEAR(StateVector(3).norm(), 1.0, 1e-15);
  EXPECT_EQ(StateVector::from_bits("0000001").amplitude(1), Complex(1.0, 0.0));
  EXPECT_EQ(StateVector::from_bits("1000000").amplitude(64), Complex(1.0, 0.0));
  EXPECT_THROW(StateVector(2, CVector::Ones(4)), ContractViolation);
  EXPECT_THROW(StateVector(2, CVector::Ones(3)), ContractViolation);
  EXPECT_THROW(StateVector::normalized(2, CVector::Zero(4)), ContractViolation);
}

TEST(DeviationOperator, RejectsNonHermitianOrTraced) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(DeviationOperator(1, m), ContractViolation);
  EXPECT_THROW(DeviationOperator(1, CMatrix::Identity(2, 2)), ContractViolation);
  EXPECT_NO_THROW(DeviationOperator(1, PauliString::parse("Z").to_dense()));
}

TEST(Unitary, RejectsNonUnitaryAndNegativeDuration) {
  EXPECT_THROW(UnitaryStep("bad", 2.0 * CMatrix::Identity(2, 2)), ContractViolation);
  EXPECT_THROW(UnitaryStep("bad", CMatrix::Identity(2, 2), -1.0), ContractViolation);
  EXPECT_THROW(UnitaryStep("bad", CMatrix::Identity(3, 3)), ContractViolation);
}

TEST(Unitary, ApplyExamples) {
  const auto psi = StateVector::from_bits("0110101");
  EXPECT_EQ(apply_unitary(psi, UnitaryStep::identity(7)).amplitudes(), psi.amplitudes());
  const auto flipped = apply_unitary(StateVector(7), pauli_unitary(PauliString::single(7, 0, 'X')));
  EXPECT_EQ(flipped.amplitudes(), StateVector::from_bits("1000000").amplitudes());
  EXPECT_EQ(psi.amplitude(0b0110101), Complex(1.0, 0.0));
}

TEST(Unitary, ComposeAppliesFirstElementFirst) {
  const std::vector<UnitaryStep> steps{hadamard(2, 0, 0.5), cnot(2, 0, 1, 0.25)};
  const auto both = compose(steps, "bell");
  EXPECT_LT((both.matrix() - steps[1].matrix() * steps[0].matrix()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_DOUBLE_EQ(both.duration(), 0.75);
}

TEST(Unitary, ApplyToStateRejectsDimensionMismatch) {
  EXPECT_THROW(apply_unitary(StateVector(2), hadamard(3, 0)), ContractViolation);
}

TEST(Unitary, NormDriftOverManyGatesIsTiny) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> pick(0, 6);
  StateVector psi(7);
  std::vector<UnitaryStep> gates;
  for (int q = 0; q < 7; ++q) {
    gates.push_back(hadamard(7, q));
    gates.push_back(rx(7, q, 0.3 + q));
    gates.push_back(cnot(7, q, (q + 1) % 7));
  }
  CVector raw = psi.amplitudes();
  for (int k = 0; k < 100; ++k) raw = gates[static_cast<std::size_t>(pick(rng) * 3 % gates.size())].matrix() * raw;
  EXPECT_LT(std::abs(raw.norm() - 1.0), 1e-10);
}

TEST(PauliExpectation, Examples) {
  const auto z1 = PauliString::single(7, 0, 'Z');
  EXPECT_DOUBLE_EQ(pauli_expectation(StateVector(7), z1), 1.0);
  const auto g = SevenQubitModel::ground_state();
  EXPECT_NEAR(pauli_expectation(g, PauliString::parse("XXXXIII")), 1.0, 1e-12);
  EXPECT_NEAR(pauli_expectation(g, z1), 0.0, 1e-12);
  EXPECT_THROW(pauli_expectation(g, PauliString::parse("iZIIIII")), ContractViolation);
  EXPECT_THROW(pauli_expectation(g, PauliString::parse("ZI")), ContractViolation);
}

TEST(PauliExpectation, DeviationOperatorMatchesTrace) {
  std::mt19937_64 rng(19);
  CMatrix m = CMatrix::Random(8, 8);
  m = m + m.adjoint().eval();
  m -= (m.trace() / 8.0) * CMatrix::Identity(8, 8);
  const DeviationOperator rho(3, m);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = random_pauli(3, rng);
    if (!p.is_hermitian()) p = p.with_phase(p.phase() + 1);
    EXPECT_NEAR(pauli_expectation(rho, p), (m * p.to_dense()).trace().real(), 1e-12);
  }
}

TEST(Gates, HadamardAndCnotActOnTheRightBits) {
  const auto psi = apply_unitary(StateVector(2), hadamard(2, 0));
  EXPECT_NEAR(std::abs(psi.amplitude(0b10)), 1.0 / std::sqrt(2.0), 1e-15);
  const auto bell = apply_unitary(psi, cnot(2, 0, 1));
  EXPECT_NEAR(std::abs(bell.amplitude(0b11)), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_THROW(cnot(2, 1, 1), ContractViolation);
}

TEST(Gates, RotationIdentities) {
  const double t = 0.37;
  const auto x = PauliString::parse("X").to_dense(), y = PauliString::parse("Y").to_dense(),
             z = PauliString::parse("Z").to_dense();
  const CMatrix rxm = rx(1, 0, t).matrix(), rym = ry(1, 0, t).matrix();
  EXPECT_LT((rxm * z * rxm.adjoint() - (std::cos(t) * z - std::sin(t) * y)).norm(), 1e-14);
  EXPECT_LT((rxm * y * rxm.adjoint() - (std::cos(t) * y + std::sin(t) * z)).norm(), 1e-14);
  EXPECT_LT((rym * x * rym.adjoint() - (std::cos(t) * x - std::sin(t) * z)).norm(), 1e-14);
  EXPECT_LT((rym * z * rym.adjoint() - (std::cos(t) * z + std::sin(t) * x)).norm(), 1e-14);
}

TEST(Gates, CollectiveRotationIsTensorPower) {
  const auto all = collective_rotation(3, 0.4, 1.1);
  CMatrix ref = CMatrix::Identity(8, 8);
  for (int q = 0; q < 3; ++q) ref = rotation(3, q, 0.4, 1.1).matrix() * ref;
  EXPECT_LT((all.matrix() - ref).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Dephase, Examples) {
  CMatrix m(2, 2);
  m << 0.5, 0.5, 0.5, -0.5;
  const DeviationOperator rho(1, m);
  const std::vector<double> t2{1.0};
  EXPECT_EQ(dephase(rho, 0.0, t2).matrix(), rho.matrix());
  EXPECT_NEAR(dephase(rho, 0.5, t2)(0, 1).real(), 0.5 * std::exp(-0.5), 1e-15);
  EXPECT_NEAR(0.5 * std::exp(-0.5), 0.3033, 1e-4);

  CMatrix m2 = CMatrix::Zero(4, 4);
  m2(0, 3) = 1.0;
  m2(3, 0) = 1.0;
  const std::vector<double> t2b{1.0, 2.0};
  EXPECT_NEAR(dephase(DeviationOperator(2, m2), 1.0, t2b)(0, 3).real(), std::exp(-1.5), 1e-15);
  EXPECT_THROW(dephase(rho, 1.0, std::vector<double>{0.0}), ContractViolation);
  EXPECT_THROW(dephase(rho, -1.0, t2), ContractViolation);
}

TEST(Dephase, IsAValidChannelAndComposes) {
  std::mt19937_64 rng(23);
  CMatrix m = CMatrix::Random(16, 16);
  m = m + m.adjoint().eval();
  m -= (m.trace() / 16.0) * CMatrix::Identity(16, 16);
  const DeviationOperator rho(4, m);
  const std::vector<double> t2{0.3, 1.0, 2.0, 0.7};
  const auto once = dephase(rho, 0.5, t2);
  EXPECT_EQ(once.diagonal(), rho.diagonal());
  EXPECT_TRUE((once.matrix().cwiseAbs().array() <= rho.matrix().cwiseAbs().array() + 1e-15).all());
  EXPECT_LT((once.matrix() - once.matrix().adjoint()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_NEAR(std::abs(once.matrix().trace()), 0.0, 1e-12);
  const auto twice = dephase(dephase(rho, 0.2, t2), 0.3, t2);
  EXPECT_LT((once.matrix() - twice.matrix()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(FractionalUnitary, Examples) {
  const auto id = UnitaryStep::identity(3, "I", 1.0);
  const auto root = fractional_unitary(id, 10);
  EXPECT_LT((root.matrix() - id.matrix()).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_DOUBLE_EQ(root.duration(), 0.1);

  const auto x = pauli_unitary(PauliString::parse("X"));
  const auto sx = fractional_unitary(x, 2);
  EXPECT_LT((sx.matrix() * sx.matrix() - x.matrix()).cwiseAbs().maxCoeff(), 1e-10);

  const auto gd = kitaev::gd_circuit().composite;
  const auto v = fractional_unitary(gd, 10);
  CMatrix power = CMatrix::Identity(128, 128);
  for (int k = 0; k < 10; ++k) power = v.matrix() * power;
  EXPECT_LT((power - gd.matrix()).cwiseAbs().maxCoeff(), 1e-8);
  EXPECT_THROW(fractional_unitary(gd, 0), ContractViolation);
}

TEST(FractionalUnitary, PrincipalBranchForMinusOne) {
  const auto z = pauli_unitary(PauliString::parse("Z"));
  const auto root = fractional_unitary(z, 2);
  EXPECT_NEAR(std::abs(root.matrix()(1, 1) - Complex(0, 1)), 0.0, 1e-12);
}

TEST(FractionalUnitary, RandomUnitaryRoots) {
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 1 + trial % 7;
    const int k = 2 + trial % 15;
    const UnitaryStep u("U", random_unitary(n, 100 + trial));
    const auto v = fractional_unitary(u, k);
    CMatrix power = CMatrix::Identity(u.matrix().rows(), u.matrix().cols());
    for (int i = 0; i < k; ++i) power = v.matrix() * power;
    EXPECT_LT((power - u.matrix()).cwiseAbs().maxCoeff(), 1e-8) << "n=" << n << " k=" << k;
  }
}

TEST(AverageGateFidelity, Examples) {
  const auto gd = kitaev::gd_circuit().composite;
  EXPECT_NEAR(average_gate_fidelity(gd, gd), 1.0, 1e-12);
  const auto rz = single_qubit(1, 0, (Matrix2() << std::polar(1.0, -std::numbers::pi / 2), 0, 0,
                                      std::polar(1.0, std::numbers::pi / 2)).finished());
  EXPECT_NEAR(average_gate_fidelity(UnitaryStep::identity(1), rz), 1.0 / 3.0, 1e-14);
  const auto v = nmr::perturb_unitary(gd, 0.99, 42);
  EXPECT_NEAR(average_gate_fidelity(gd, v), 0.99, 0.002);
  EXPECT_THROW(average_gate_fidelity(gd, UnitaryStep::identity(2)), ContractViolation);
}

}  // namespace
}  // namespace anyonsim::qsim
