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

#include "anyonsim/kitaev/gd_circuit.hpp"

#include "anyonsim/qsim/gates.hpp"

namespace anyonsim::kitaev {

namespace {

constexpr int kN = 7;

std::vector<qsim::UnitaryStep> vertex_block(int control, std::initializer_list<int> targets) {
  std::vector<qsim::UnitaryStep> gates{qsim::hadamard(kN, control)};
  for (int t : targets) gates.push_back(qsim::cnot(kN, control, t));
  return gates;
}

}  // namespace

std::vector<CnotPair> default_gd_prefix() { return {{6, 1}, {6, 2}}; }

GdCircuit gd_circuit(const std::vector<CnotPair>& prefix) {
  const auto a1 = vertex_block(0, {1, 2, 3});
  const auto a2 = vertex_block(4, {3, 5, 6});

  std::vector<qsim::UnitaryStep> gates;
  for (const auto& [c, t] : prefix) gates.push_back(qsim::cnot(kN, c, t));
  gates.insert(gates.end(), a1.begin(), a1.end());
  gates.insert(gates.end(), a2.begin(), a2.end());

  auto composite = qsim::compose(gates, "GD").with_duration(kGdDuration);
  return {prefix, std::move(gates), std::move(composite), qsim::compose(a1, "UA1"),
          qsim::compose(a2, "UA2")};
}

}  // namespace anyonsim::kitaev
