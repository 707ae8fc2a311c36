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

#include "anyonsim/qsim/channels.hpp"

#include <cmath>
#include <string>

#include "anyonsim/errors.hpp"

namespace anyonsim::qsim {

Dephaser::Dephaser(std::span<const double> t2) : n_qubits_(static_cast<int>(t2.size())) {
  if (n_qubits_ > kMaxQubits) {
    throw ContractViolation("qubit count in range", std::to_string(n_qubits_) + " T2 values");
  }
  for (std::size_t k = 0; k < t2.size(); ++k) {
    if (!(t2[k] > 0.0)) {
      throw ContractViolation("T2 > 0", "qubit " + std::to_string(k + 1) + ": " + std::to_string(t2[k]));
    }
  }
  const std::uint64_t dim = dimension(n_qubits_);
  rates_.assign(dim, 0.0);
  for (std::uint64_t pattern = 1; pattern < dim; ++pattern) {
    double total = 0.0;
    for (int q = 0; q < n_qubits_; ++q) {
      if (pattern & basis_bit(n_qubits_, q)) total += 1.0 / t2[q];
    }
    rates_[pattern] = total;
  }
}

DeviationOperator Dephaser::apply(const DeviationOperator& rho, double dt) const {
  if (!(dt >= 0.0)) throw ContractViolation("dt >= 0", std::to_string(dt));
  if (rho.n_qubits() != n_qubits_) {
    throw ContractViolation("dimensions match", "T2 list has " + std::to_string(n_qubits_) +
                                                    " entries for " + std::to_string(rho.n_qubits()) +
                                                    " qubits");
  }
  if (dt == 0.0) return rho;
  std::vector<double> factor(rates_.size());
  for (std::size_t p = 0; p < rates_.size(); ++p) factor[p] = std::exp(-dt * rates_[p]);
  CMatrix m = rho.matrix();
  const auto dim = m.rows();
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      if (r != c) m(r, c) *= factor[static_cast<std::uint64_t>(r ^ c)];
    }
  }
  return DeviationOperator(rho.n_qubits(), std::move(m));
}

DeviationOperator dephase(const DeviationOperator& rho, double dt, std::span<const double> t2) {
  return Dephaser(t2).apply(rho, dt);
}

}  // namespace anyonsim::qsim
