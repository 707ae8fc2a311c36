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

#include "anyonsim/nmr/pps.hpp"

#include <cmath>
#include <numbers>

#include "anyonsim/errors.hpp"
#include "anyonsim/qsim/gates.hpp"

namespace anyonsim::nmr {

namespace {

qsim::CMatrix z_on_spin(int n, int spin) {
  return qsim::PauliString::single(n, spin, 'Z').to_dense();
}

}  // namespace

DeviationOperator ideal_labeled_pps(int n_spins, int observe_spin) {
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(qsim::dimension(n_spins)));
  diag[0] = 0.5;
  diag[static_cast<Eigen::Index>(qsim::basis_bit(n_spins, observe_spin))] = -0.5;
  return DeviationOperator::from_diagonal(n_spins, diag);
}

DeviationOperator cat_coherence(int n_spins) {
  const auto dim = static_cast<Eigen::Index>(qsim::dimension(n_spins));
  qsim::CMatrix m = qsim::CMatrix::Zero(dim, dim);
  m(0, dim - 1) = 1.0 / std::sqrt(2.0);
  m(dim - 1, 0) = 1.0 / std::sqrt(2.0);
  return DeviationOperator(n_spins, std::move(m));
}

qsim::UnitaryStep pps_encoding(int n_spins, int observe_spin) {
  // Path through all spins ending on the observed one; CNOT(prev -> next)
  // applied from the end of the path extends Z_next to Z_prev Z_next.
  std::vector<int> path;
  for (int s = 0; s < n_spins; ++s) {
    if (s != observe_spin) path.push_back(s);
  }
  path.push_back(observe_spin);
  std::vector<qsim::UnitaryStep> gates;
  for (std::size_t k = path.size() - 1; k >= 1; --k) gates.push_back(qsim::cnot(n_spins, path[k - 1], path[k]));
  return qsim::compose(gates, "encode");
}

qsim::UnitaryStep pps_decoding(int n_spins, int observe_spin) {
  std::vector<qsim::UnitaryStep> gates;
  for (int s = 0; s < n_spins; ++s) {
    if (s != observe_spin) gates.push_back(qsim::cnot(n_spins, observe_spin, s));
  }
  gates.push_back(qsim::ry(n_spins, observe_spin, -std::numbers::pi / 2.0));
  return qsim::compose(gates, "decode");
}

double phase_cycle_axis(int k, int n_settings) {
  const double reference = n_settings % 2 == 1 ? std::numbers::pi / (2.0 * n_settings) : 0.0;
  return 2.0 * std::numbers::pi * k / n_settings - reference;
}

PpsTrace labeled_pps_trace(const MoleculeParams& params) {
  params.validate();
  const int n = params.n_spins;
  const int obs = params.observe_spin;

  DeviationOperator initial(n, z_on_spin(n, obs));
  DeviationOperator encoded = qsim::apply_unitary(initial, pps_encoding(n, obs));

  const auto dim = static_cast<Eigen::Index>(qsim::dimension(n));
  qsim::CMatrix sum = qsim::CMatrix::Zero(dim, dim);
  for (int k = 0; k < n; ++k) {
    const auto r = qsim::collective_rotation(n, phase_cycle_axis(k, n), std::numbers::pi / 2.0);
    sum += r.matrix() * encoded.matrix() * r.matrix().adjoint();
  }
  DeviationOperator cycled(n, sum / static_cast<double>(n));
  DeviationOperator decoded = qsim::apply_unitary(cycled, pps_decoding(n, obs));

  const DeviationOperator target = ideal_labeled_pps(n, obs);
  const double scale = (target.matrix().adjoint() * decoded.matrix()).trace().real() /
                       target.matrix().squaredNorm();
  if (!(std::abs(scale) > 1e-12)) {
    throw ContractViolation("phase-cycle residual within tolerance", "decoded state has no PPS component");
  }
  const double residual =
      (decoded.matrix() - scale * target.matrix()).cwiseAbs().maxCoeff() / std::abs(scale);
  if (residual > kPpsResidualTolerance) {
    throw ContractViolation("phase-cycle residual within tolerance",
                            "residual " + std::to_string(residual) + " at scale " + std::to_string(scale));
  }
  DeviationOperator result = decoded * (1.0 / scale);
  return {std::move(initial), std::move(encoded), std::move(cycled), std::move(decoded), scale, residual,
          std::move(result)};
}

DeviationOperator labeled_pps(const MoleculeParams& params) { return labeled_pps_trace(params).result; }

}  // namespace anyonsim::nmr
