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

#include "anyonsim/braiding/loop_generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "anyonsim/errors.hpp"

namespace anyonsim::braiding {

namespace {

std::vector<int> mask_to_qubits(std::uint64_t mask, int n) {
  std::vector<int> out;
  for (int q = 0; q < n; ++q) {
    if ((mask >> q) & 1U) out.push_back(q);
  }
  return out;
}

}  // namespace

std::vector<BraidLoop> toric_noncontractible_loops(int size) {
  const int n = 2 * size * size;
  std::vector<int> column, row;
  for (int r = 0; r < size; ++r) column.push_back(2 * (r * size));
  for (int c = 0; c < size; ++c) row.push_back(2 * c + 1);
  return {BraidLoop(n, column, "wrap-vertical"), BraidLoop(n, row, "wrap-horizontal")};
}

std::vector<BraidLoop> random_loops(const LatticeSpec& lattice, int count, std::uint64_t seed) {
  if (lattice.n_vertices() == 0) throw ContractViolation("lattice has vertices", "random_loops");
  std::mt19937_64 rng(seed);
  const int n = lattice.n_qubits();
  const int max_stars = std::min(4, lattice.n_vertices());
  std::uniform_int_distribution<int> how_many(1, max_stars);
  std::vector<int> order(static_cast<std::size_t>(lattice.n_vertices()));

  std::vector<BraidLoop> out;
  if (lattice.boundary() == kitaev::Boundary::toric) {
    const int size = static_cast<int>(std::lround(std::sqrt(n / 2.0)));
    for (auto& loop : toric_noncontractible_loops(size)) {
      if (static_cast<int>(out.size()) < count) out.push_back(std::move(loop));
    }
  }
  while (static_cast<int>(out.size()) < count) {
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const int k = how_many(rng);
    std::uint64_t mask = 0;
    for (int i = 0; i < k; ++i) mask ^= lattice.vertex_operator(order[static_cast<std::size_t>(i)]).x_mask();
    if (mask == 0) continue;
    BraidLoop loop(n, mask_to_qubits(mask, n), "random" + std::to_string(out.size()));
    if (validate_loop(loop, lattice)) out.push_back(std::move(loop));
  }
  return out;
}

PauliString random_charge(const LatticeSpec& lattice, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = lattice.n_qubits();
  std::uniform_int_distribution<int> qubit(0, n - 1);
  std::uniform_int_distribution<int> weight(1, std::min(3, n));
  const auto stars = lattice.vertex_operators();
  for (;;) {
    std::uint64_t mask = 0;
    const int w = weight(rng);
    for (int i = 0; i < w; ++i) mask |= std::uint64_t{1} << qubit(rng);
    const PauliString c(n, 0, mask);
    const bool charged = std::any_of(stars.begin(), stars.end(),
                                     [&c](const PauliString& a) { return !a.commutes_with(c); });
    if (charged) return c;
  }
}

}  // namespace anyonsim::braiding
