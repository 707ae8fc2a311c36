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

#include "anyonsim/kitaev/seven_qubit.hpp"

namespace anyonsim::kitaev {

SevenQubitModel::SevenQubitModel() : lattice_(seven_qubit_lattice()) {
  const auto ops = lattice_.stabilizers();
  for (std::size_t k = 0; k < stabilizers_.size(); ++k) stabilizers_[k] = ops[k];
}

const std::array<std::string, 7>& SevenQubitModel::stabilizer_names() {
  static const std::array<std::string, 7> names = {"A1", "A2", "B1", "B2", "B3", "B4", "B5"};
  return names;
}

qsim::StateVector SevenQubitModel::ground_state() {
  qsim::CVector v = qsim::CVector::Zero(128);
  for (const char* bits : {"0000000", "1111000", "0001111", "1110111"}) {
    v[static_cast<Eigen::Index>(std::stoul(bits, nullptr, 2))] = 0.5;
  }
  return qsim::StateVector(kQubits, std::move(v));
}

qsim::StateVector SevenQubitModel::excited_state() {
  const auto z1 = PauliString::single(kQubits, 0, 'Z');
  return qsim::StateVector(kQubits, z1.apply(ground_state().amplitudes()));
}

}  // namespace anyonsim::kitaev
