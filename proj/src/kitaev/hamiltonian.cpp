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

#include "anyonsim/kitaev/hamiltonian.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "anyonsim/errors.hpp"

namespace anyonsim::kitaev {

namespace {

constexpr double kDegeneracyTolerance = 1e-8;

void add_pauli(Eigen::MatrixXd& h, const PauliString& p, double weight) {
  const std::uint64_t flip = p.flip_index_mask();
  for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(h.rows()); ++b) {
    h(static_cast<Eigen::Index>(b ^ flip), static_cast<Eigen::Index>(b)) += weight * p.coefficient(b).real();
  }
}

qsim::CVector apply_projector(const std::vector<PauliString>& stabilizers, qsim::CVector v) {
  for (const auto& s : stabilizers) v = 0.5 * (v + s.apply(v));
  return v;
}

GroundSpace ground_space_by_projection(const LatticeSpec& lattice) {
  const auto stabilizers = lattice.stabilizers();
  const int rank = stabilizer_rank(lattice);
  const int degeneracy = 1 << (lattice.n_qubits() - rank);
  const auto dim = static_cast<Eigen::Index>(qsim::dimension(lattice.n_qubits()));

  // Projected basis vectors span the code space; Gram-Schmidt keeps the
  // independent ones until the expected dimension is reached.
  qsim::CMatrix basis(dim, degeneracy);
  int found = 0;
  for (Eigen::Index b = 0; b < dim && found < degeneracy; ++b) {
    qsim::CVector v = qsim::CVector::Zero(dim);
    v[b] = 1.0;
    v = apply_projector(stabilizers, std::move(v));
    for (int k = 0; k < found; ++k) v -= basis.col(k).dot(v) * basis.col(k);
    const double norm = v.norm();
    if (norm > 1e-6) basis.col(found++) = v / norm;
  }
  if (found != degeneracy) {
    throw ContractViolation("stabilizer code space has the expected dimension",
                            std::to_string(found) + " of " + std::to_string(degeneracy));
  }
  return {-static_cast<double>(stabilizers.size()), std::move(basis), degeneracy,
          GroundSpaceMethod::stabilizer_projection};
}

}  // namespace

Eigen::MatrixXd build_hamiltonian(const LatticeSpec& lattice) {
  const auto dim = static_cast<Eigen::Index>(qsim::dimension(lattice.n_qubits()));
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& s : lattice.stabilizers()) add_pauli(h, s, -1.0);
  return h;
}

int stabilizer_rank(const LatticeSpec& lattice) {
  // Rows are (x | z) symplectic vectors packed into one word.
  const int n = lattice.n_qubits();
  std::vector<std::uint64_t> rows;
  for (const auto& s : lattice.stabilizers()) rows.push_back(s.x_mask() | (s.z_mask() << n));
  int rank = 0;
  for (int bit = 0; bit < 2 * n; ++bit) {
    const std::uint64_t mask = std::uint64_t{1} << bit;
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [mask](std::uint64_t r) { return r & mask; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) != rank && (rows[i] & mask)) rows[i] ^= rows[static_cast<std::size_t>(rank)];
    }
    ++rank;
  }
  return rank;
}

GroundSpace ground_space(const LatticeSpec& lattice) {
  if (lattice.n_qubits() > kDenseDiagonalizationQubits) return ground_space_by_projection(lattice);
  const Eigen::MatrixXd h = build_hamiltonian(lattice);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success) {
    throw ContractViolation("Hamiltonian diagonalization converges", "eigensolver failed");
  }
  const Eigen::VectorXd& energies = solver.eigenvalues();
  const double e0 = energies[0];
  int degeneracy = 0;
  while (degeneracy < energies.size() && energies[degeneracy] - e0 < kDegeneracyTolerance) ++degeneracy;
  qsim::CMatrix basis = solver.eigenvectors().leftCols(degeneracy).cast<qsim::Complex>();
  return {e0, std::move(basis), degeneracy, GroundSpaceMethod::dense_diagonalization};
}

qsim::StateVector ground_state_by_projection(const LatticeSpec& lattice) {
  const int n = lattice.n_qubits();
  for (int p = 0; p < lattice.n_plaquettes(); ++p) {
    const auto b = lattice.plaquette_operator(p);
    if (b.flip_index_mask() != 0 || b.coefficient(0) != qsim::Complex(1.0, 0.0)) {
      throw ContractViolation("|0...0> is a +1 eigenstate of every plaquette",
                              "B" + std::to_string(p + 1) + " = " + b.str());
    }
  }
  qsim::CVector v = qsim::StateVector(n).amplitudes();
  for (const auto& a : lattice.vertex_operators()) v = (v + a.apply(v)) / std::sqrt(2.0);
  return qsim::StateVector::normalized(n, v);
}

}  // namespace anyonsim::kitaev
