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
#include <functional>
#include <vector>

#include "landauer/entropy.hpp"
#include "landauer/qmat.hpp"
#include "landauer/reservoir.hpp"

/// One-shot unitary processes acting on a system coupled to a confined
/// reservoir initially in equilibrium.
namespace landauer::processes {

using qmat::DensityMatrix;
using qmat::HermitianOperator;
using qmat::UnitaryOperator;

/// The entropy balance triple. delta_q > 0 means the reservoir gained energy.
struct ProcessLedger {
  double delta_s = 0.0;  ///< S(rho_i) - S(rho_final), nats
  double delta_q = 0.0;  ///< reservoir energy increase
  double sigma = 0.0;    ///< entropy production, nats
  double beta = 1.0;

  /// dS + sigma - beta dQ; zero up to rounding for every exact process.
  double balance_residual() const { return delta_s + sigma - beta * delta_q; }
  /// |residual| / (1 + |beta dQ|).
  double relative_balance_residual() const;
};

struct ProcessOutcome {
  DensityMatrix omega_u;
  DensityMatrix rho_u;
  DensityMatrix nu_u;
  ProcessLedger ledger;
};

/// omega_U = U (rho_i (x) nu_i) U^dagger and its balance ledger.
ProcessOutcome apply_process(const DensityMatrix& rho_i, const ReservoirSpec& r,
                             const UnitaryOperator& u);

/// Smallest eigenvalues of rho_U - e^{-l beta} rho_i and e^{l beta} rho_i - rho_U.
struct SandwichMargins {
  double lower = 0.0;
  double upper = 0.0;
  bool holds(double slack = 1e-10) const { return lower >= -slack && upper >= -slack; }
};

SandwichMargins sandwich_margins(const DensityMatrix& rho_i, const ReservoirSpec& r,
                                 const DensityMatrix& rho_u);

/// e^{-l beta} rho_i <= rho_U <= e^{l beta} rho_i for the process U. True for
/// maximally mixed rho_i and for U that act trivially on S; a swap with a
/// near-pure rho_i already breaks it. channel_sandwich_margins is the form
/// that holds for every U.
bool remark1_sandwich(const DensityMatrix& rho_i, const ReservoirSpec& r,
                      const UnitaryOperator& u);

/// Phi_U(X) = tr_R U (X (x) 1/d_R) U^*.
DensityMatrix averaged_channel(const DensityMatrix& x, std::size_t d_r, const UnitaryOperator& u);

/// Margins of e^{-l beta} Phi_U(rho_i) <= rho_U <= e^{l beta} Phi_U(rho_i),
/// which follows from e^{-l beta} / d_R <= nu_i <= e^{l beta} / d_R. Equal to
/// sandwich_margins when rho_i is maximally mixed.
SandwichMargins channel_sandwich_margins(const DensityMatrix& rho_i, const ReservoirSpec& r,
                                         const UnitaryOperator& u, const DensityMatrix& rho_u);

/// Swap unitary on H (x) H for dim(H) = dim: phi (x) psi -> psi (x) phi.
UnitaryOperator swap_unitary(std::size_t dim);

struct FlipOutcome {
  ProcessLedger ledger;
  DensityMatrix rho_u;
  DensityMatrix nu_u;
  ReservoirSpec reservoir;  ///< H_R = -log rho_f, beta = 1
};

/// Reservoir is a copy of the system prepared in rho_f (beta = 1,
/// H_R = -log rho_f), and the process swaps the two factors.
/// Throws DomainError when rho_f is not faithful.
FlipOutcome flip_process(const DensityMatrix& rho_i, const DensityMatrix& rho_f);

using StatePath = std::function<DensityMatrix(double)>;

/// Straight line (1 - t) a + t b.
StatePath linear_path(const DensityMatrix& a, const DensityMatrix& b);

struct StagedOutcome {
  double delta_q_n = 0.0;
  /// delta_q = delta_q_n; sigma is the sum of stagewise relative entropies
  /// S(rho_{n-1} | rho_n), an independent route to the same number.
  ProcessLedger ledger;
  std::size_t stages = 0;
};

/// N-stage erasure through rho(n/N): the reservoir is N copies of the system
/// prepared in rho_1..rho_N and the process cyclically shifts all factors.
/// Evaluated through the closed-form stage sum without building the
/// d^(N+1)-dimensional space. Throws DomainError when some rho(n/N), n >= 1,
/// is not faithful.
StagedOutcome staged_erasure(const StatePath& path, std::size_t stages);

struct SaturationReport {
  bool saturated = false;          ///< sigma < tol
  double sigma = 0.0;
  double spectrum_distance = 0.0;  ///< sorted-spectrum l-inf distance rho_i vs rho_U
  double reservoir_distance = 0.0; ///< ||nu_U - nu_i||_1
  double threshold = 0.0;          ///< sqrt(tol) * scale
  bool passed = true;
};

/// Saturation check: when sigma < tol the process must be a local spectrum
/// preserving one, so both distances must be below sqrt(tol) * scale. With
/// sigma >= tol the report only records the distances.
SaturationReport saturation_diagnostic(const DensityMatrix& rho_i,
                                       const DensityMatrix& rho_u,
                                       const DensityMatrix& nu_i,
                                       const DensityMatrix& nu_u,
                                       const ProcessLedger& ledger, double tol,
                                       double scale = 1.0);

struct EpsilonErasureOutcome {
  std::size_t dim = 0;
  double epsilon = 0.0;
  double delta = 0.0;          ///< admixture of 1/d in the near-pure target
  std::size_t stages = 0;
  double target_entropy = 0.0; ///< S(rho_f')
  double distance_to_pure = 0.0;
  double beta_delta_q = 0.0;
  DensityMatrix target;
  ProcessLedger ledger;
  /// (stages, beta dQ_N) for every N tried by the doubling search.
  std::vector<std::pair<std::size_t, double>> attempts;
};

/// Erasure of 1/d towards the near-pure target (1 - delta)|0><0| + delta 1/d.
/// delta is the largest value (found by bisection) with S(target) <= eps/2,
/// and N is doubled from 1 until log d - eps <= beta dQ_N <= log d + eps.
/// Throws DomainError unless 0 < eps < log d, ConvergenceError if no N up to
/// 2^20 works.
EpsilonErasureOutcome epsilon_erasure(std::size_t dim, double epsilon);

}  // namespace landauer::processes
