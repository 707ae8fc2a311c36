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

#include <span>

#include "anyonsim/qsim/state.hpp"

namespace anyonsim::qsim {

/// Independent transverse relaxation. Element (r,s) decays as
/// exp(-dt * sum over differing bits k of 1/T2_k); the diagonal is untouched.
/// `t2` holds one time per qubit, in seconds.
DeviationOperator dephase(const DeviationOperator& rho, double dt, std::span<const double> t2);

/// Precomputed form of dephase() for repeated use with one set of T2 values.
class Dephaser {
 public:
  explicit Dephaser(std::span<const double> t2);

  int n_qubits() const { return n_qubits_; }
  /// Summed rate for a basis-index xor pattern, in 1/s.
  double rate(std::uint64_t xor_pattern) const { return rates_[xor_pattern]; }
  DeviationOperator apply(const DeviationOperator& rho, double dt) const;

 private:
  int n_qubits_;
  std::vector<double> rates_;
};

}  // namespace anyonsim::qsim
