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
#include <string_view>

#include "anyonsim/qsim/unitary.hpp"

namespace anyonsim::nmr {

inline constexpr double kFidelityTolerance = 0.002;

std::uint64_t splitmix64(std::uint64_t x);
/// Independent stream for one pipeline stage ("gd", "braid", "mm", ...).
std::uint64_t stage_seed(std::uint64_t seed, std::string_view stage);

/// Hermitian matrix with GUE statistics: (G + G^dag) / 2, G complex standard normal.
qsim::CMatrix random_hermitian(Eigen::Index dim, std::uint64_t seed);

/// V = exp(i eps H) U with H = random_hermitian(seed) and eps chosen so the
/// average gate fidelity of V against U is target_fidelity within 0.002.
/// target_fidelity = 1 returns U unchanged.
qsim::UnitaryStep perturb_unitary(const qsim::UnitaryStep& u, double target_fidelity, std::uint64_t seed);

}  // namespace anyonsim::nmr
