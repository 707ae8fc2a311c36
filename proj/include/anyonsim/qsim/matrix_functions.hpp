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

#include "anyonsim/qsim/types.hpp"
#include "anyonsim/qsim/unitary.hpp"

namespace anyonsim::qsim {

/// Principal k-th root of a unitary, eigenvalue phases taken in (-pi, pi].
/// The returned step carries duration / k.
UnitaryStep fractional_unitary(const UnitaryStep& u, int k);

/// (|Tr(U^dag V)|^2 + d) / (d^2 + d)
double average_gate_fidelity(const UnitaryStep& u, const UnitaryStep& v);
double average_gate_fidelity(const CMatrix& u, const CMatrix& v);

bool is_unitary(const CMatrix& m, double tol = kUnitaryTolerance);

}  // namespace anyonsim::qsim
