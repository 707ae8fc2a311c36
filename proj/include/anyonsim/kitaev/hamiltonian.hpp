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

#include <Eigen/Dense>

#include "anyonsim/kitaev/lattice.hpp"
#include "anyonsim/qsim/state.hpp"

namespace anyonsim::kitaev {

/// Largest lattice handled by dense exact diagonalization in ground_space().
inline constexpr int kDenseDiagonalizationQubits = 10;

/// H = -sum_v A_v - sum_p B_p. Star and bond terms are real, so H is real symmetric.
Eigen::MatrixXd build_hamiltonian(const LatticeSpec& lattice);

enum class GroundSpaceMethod { dense_diagonalization, stabilizer_projection };

struct GroundSpace {
  double energy = 0.0;
  /// Orthonormal columns spanning the lowest eigenspace.
  qsim::CMatrix basis;
  int degeneracy = 0;
  GroundSpaceMethod method = GroundSpaceMethod::dense_diagonalization;
};

/// Exact diagonalization up to kDenseDiagonalizationQubits qubits; larger
/// lattices (up to 12) use the joint +1 eigenspace of the commuting stabilizers.
GroundSpace ground_space(const LatticeSpec& lattice);

/// Number of independent generators among the stabilizers (GF(2) rank).
int stabilizer_rank(const LatticeSpec& lattice);

/// Normalized prod_v (I + A_v)/sqrt2 |0...0>. Requires |0...0> to be a +1
/// eigenstate of every plaquette term.
qsim::StateVector ground_state_by_projection(const LatticeSpec& lattice);

}  // namespace anyonsim::kitaev
