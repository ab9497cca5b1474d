// Copyright 2026 The Landauer Lab Authors
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

#include "landauer/entropy.hpp"

#include <cmath>
#include <limits>

namespace landauer::entropy {

namespace {

// Weight of `a` outside supp(b) above which the relative entropy diverges.
constexpr double kSupportLeak = 1e-12;

double entropy_of_spectrum(const qmat::RealVector& ev) {
  if (ev.size() == 0) return 0.0;
  const double floor = qmat::kSupportClip * std::max(ev(0), 0.0);
  double s = 0.0;
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    const double p = ev(k);
    if (p > floor) s -= p * std::log(p);
  }
  return s;
}

}  // namespace

double von_neumann_entropy(const DensityMatrix& rho) {
  return std::max(0.0, entropy_of_spectrum(qmat::eigenvalues(rho.hermitian())));
}

double relative_entropy(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("relative_entropy: dimension mismatch");
  }
  const qmat::EigenDecomposition eb = qmat::hermitian_eig(b.hermitian());
  const double floor_b = qmat::kSupportClip * std::max(eb.values(0), 0.0);

  // Diagonal of `a` in the eigenbasis of `b`.
  const qmat::ComplexMatrix a_in_b = eb.vectors.adjoint() * a.matrix() * eb.vectors;
  double cross = 0.0;
  double leak = 0.0;
  for (Eigen::Index k = 0; k < eb.values.size(); ++k) {
    const double w = a_in_b(k, k).real();
    if (eb.values(k) > floor_b) {
      cross += w * std::log(eb.values(k));
    } else {
      leak += w;
    }
  }
  if (leak > kSupportLeak) return std::numeric_limits<double>::infinity();

  const double neg_entropy_a = -entropy_of_spectrum(qmat::eigenvalues(a.hermitian()));
  return std::max(0.0, neg_entropy_a - cross);
}

double mutual_information(const DensityMatrix& omega, std::size_t d_s,
                          std::size_t d_r) {
  const DensityMatrix rho = qmat::partial_trace(omega, d_s, d_r, qmat::Keep::System);
  const DensityMatrix nu = qmat::partial_trace(omega, d_s, d_r, qmat::Keep::Reservoir);
  return relative_entropy(omega, qmat::tensor(rho, nu));
}

double mutual_information_entropy_sum(const DensityMatrix& omega,
                                      std::size_t d_s, std::size_t d_r) {
  const DensityMatrix rho = qmat::partial_trace(omega, d_s, d_r, qmat::Keep::System);
  const DensityMatrix nu = qmat::partial_trace(omega, d_s, d_r, qmat::Keep::Reservoir);
  return von_neumann_entropy(rho) + von_neumann_entropy(nu) -
         von_neumann_entropy(omega);
}

double entropy_production(const DensityMatrix& omega_u, const DensityMatrix& nu_i,
                          std::size_t d_s, std::size_t d_r) {
  if (nu_i.dim() != d_r) {
    throw DimensionError("entropy_production: reservoir state has wrong dimension");
  }
  const DensityMatrix rho_u =
      qmat::partial_trace(omega_u, d_s, d_r, qmat::Keep::System);
  return relative_entropy(omega_u, qmat::tensor(rho_u, nu_i));
}

SpectralWindow spectral_window(const HermitianOperator& h_r) {
  const qmat::RealVector ev = qmat::eigenvalues(h_r);
  if (ev.size() == 0) throw DimensionError("spectral_window: empty operator");
  return {ev(ev.size() - 1), ev(0)};
}

BalanceBound improved_bound(double delta_s, double beta, const HermitianOperator& h_r) {
  if (!(beta > 0.0)) throw DomainError("improved_bound: beta must be positive");
  const double span = spectral_window(h_r).span();
  if (!(span > 0.0)) throw DomainError("improved_bound: trivial reservoir (l = 0)");

  BalanceBound out;
  out.delta_s_max = beta * beta * span * span / 8.0;
  const double x = delta_s / out.delta_s_max;
  if (x > 1.0) {
    out.feasible = false;
    out.improved_lower_bound = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  out.improved_lower_bound = 2.0 * delta_s / (1.0 + std::sqrt(1.0 - x));
  return out;
}

double well_floor(double delta_q, const HermitianOperator& h_r) {
  const double span = spectral_window(h_r).span();
  if (!(span > 0.0)) throw DomainError("well_floor: trivial reservoir (l = 0)");
  const double r = delta_q / span;
  return 2.0 * r * r;
}

double pinsker_floor(const DensityMatrix& a, const DensityMatrix& b) {
  const double d = qmat::trace_norm(a.hermitian() - b.hermitian());
  return 0.5 * d * d;
}

}  // namespace landauer::entropy
