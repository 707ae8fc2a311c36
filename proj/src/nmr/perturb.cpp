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

#include "anyonsim/nmr/perturb.hpp"

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "anyonsim/errors.hpp"

namespace anyonsim::nmr {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stage_seed(std::uint64_t seed, std::string_view stage) {
  std::uint64_t tag = 0xcbf29ce484222325ULL;
  for (char c : stage) tag = (tag ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  return splitmix64(seed ^ tag);
}

qsim::CMatrix random_hermitian(Eigen::Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0 / std::sqrt(2.0));
  qsim::CMatrix g(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = qsim::Complex(re, im);
    }
  }
  return (g + g.adjoint()) / 2.0;
}

qsim::UnitaryStep perturb_unitary(const qsim::UnitaryStep& u, double target_fidelity, std::uint64_t seed) {
  if (!(target_fidelity > 0.0 && target_fidelity <= 1.0)) {
    throw ContractViolation("0 < target fidelity <= 1", std::to_string(target_fidelity));
  }
  if (target_fidelity == 1.0) return u;
  const Eigen::Index dim = u.matrix().rows();
  const double d = static_cast<double>(dim);
  if (target_fidelity < 1.0 / (d + 1.0)) {
    throw ContractViolation("target fidelity is reachable", std::to_string(target_fidelity));
  }

  Eigen::SelfAdjointEigenSolver<qsim::CMatrix> eig(random_hermitian(dim, seed));
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  // Tr(U^dag V) = Tr(exp(i eps H)) = sum_k exp(i eps lambda_k).
  auto fidelity = [&](double eps) {
    qsim::Complex tr = 0.0;
    for (Eigen::Index k = 0; k < dim; ++k) tr += std::polar(1.0, eps * lambda[k]);
    return (std::norm(tr) + d) / (d * d + d);
  };

  double lo = 0.0;
  double hi = 1e-4;
  while (fidelity(hi) > target_fidelity) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e6) throw ContractViolation("target fidelity is reachable", std::to_string(target_fidelity));
  }
  for (int iter = 0; iter < 200 && std::abs(fidelity(0.5 * (lo + hi)) - target_fidelity) > 1e-6 * kFidelityTolerance; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (fidelity(mid) > target_fidelity ? lo : hi) = mid;
  }
  const double eps = 0.5 * (lo + hi);

  qsim::CVector phases(dim);
  for (Eigen::Index k = 0; k < dim; ++k) phases[k] = std::polar(1.0, eps * lambda[k]);
  const qsim::CMatrix& q = eig.eigenvectors();
  qsim::CMatrix v = q * phases.asDiagonal() * q.adjoint() * u.matrix();
  return qsim::UnitaryStep(u.label() + "~", std::move(v), u.duration());
}

}  // namespace anyonsim::nmr
