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

#pragma once

#include <cstddef>

#include "landauer/qmat.hpp"

/// Entropy functionals (nats, k_B = 1) and the lower bounds on heat and
/// entropy production that follow from them.
namespace landauer::entropy {

using qmat::DensityMatrix;
using qmat::HermitianOperator;

/// -tr(rho log rho) with 0 log 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// tr(a (log a - log b)). Returns +infinity when supp(a) is not contained in
/// supp(b); never negative.
double relative_entropy(const DensityMatrix& a, const DensityMatrix& b);

/// S(omega | rho (x) nu) for the marginals of a joint state on H_S (x) H_R.
double mutual_information(const DensityMatrix& omega, std::size_t d_s,
                          std::size_t d_r);
/// Same quantity through S(rho) + S(nu) - S(omega).
double mutual_information_entropy_sum(const DensityMatrix& omega,
                                      std::size_t d_s, std::size_t d_r);

/// sigma = S(omega_u | tr_R(omega_u) (x) nu_i).
double entropy_production(const DensityMatrix& omega_u, const DensityMatrix& nu_i,
                          std::size_t d_s, std::size_t d_r);

/// Spectral span and midpoint of a reservoir Hamiltonian.
struct SpectralWindow {
  double e_min = 0.0;
  double e_max = 0.0;
  double span() const { return e_max - e_min; }
  double midpoint() const { return 0.5 * (e_max + e_min); }
};

SpectralWindow spectral_window(const HermitianOperator& h_r);

struct BalanceBound {
  /// S0 = beta^2 l^2 / 8, the largest entropy decrease any process can reach.
  double delta_s_max = 0.0;
  /// Minimal beta * dQ compatible with dS; meaningful only when feasible.
  double improved_lower_bound = 0.0;
  bool feasible = true;
  /// 1/2 ||omega_u - rho_u (x) nu_i||_1^2.
  double pinsker_floor = 0.0;
  /// 2 (dQ / l)^2.
  double well_floor = 0.0;
};

/// Improved Landauer bound from combining the balance identity with
/// sigma >= 2 (dQ/l)^2. Throws DomainError when beta <= 0 or l == 0.
///
/// For dS <= S0 the minimal beta dQ is 2 S0 (1 - sqrt(1 - dS/S0)), evaluated
/// in the cancellation-free form 2 dS / (1 + sqrt(1 - dS/S0)). dS > S0 is
/// reported as infeasible.
BalanceBound improved_bound(double delta_s, double beta, const HermitianOperator& h_r);

/// 2 (dQ / l)^2. Throws DomainError when l == 0.
double well_floor(double delta_q, const HermitianOperator& h_r);

/// 1/2 ||a - b||_1^2.
double pinsker_floor(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace landauer::entropy
