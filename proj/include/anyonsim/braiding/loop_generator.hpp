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
#include <vector>

#include "anyonsim/braiding/braiding.hpp"

namespace anyonsim::braiding {

/// Random closed loops built as products of 1 to 4 distinct vertex stars
/// (each star moves an m particle once around that vertex). Empty products
/// are discarded. Toric lattices also get their two non-contractible loops.
std::vector<BraidLoop> random_loops(const LatticeSpec& lattice, int count, std::uint64_t seed);

/// X on a full column of horizontal edges and on a full row of vertical edges
/// of toric_lattice(size).
std::vector<BraidLoop> toric_noncontractible_loops(int size);

/// Random Z string on 1 to 3 qubits that anticommutes with at least one star.
PauliString random_charge(const LatticeSpec& lattice, std::uint64_t seed);

}  // namespace anyonsim::braiding
