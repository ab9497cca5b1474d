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
#include <string>
#include <vector>

#include "landauer/interaction.hpp"
#include "landauer/processes.hpp"
#include "landauer/qmat.hpp"
#include "landauer/reservoir.hpp"

/// Hamiltonian evolution of system + confined reservoir: sudden quenches
/// with a fixed coupling K and slow protocols K_T(t) = K(t / T).
namespace landauer::dynamics {

using processes::ProcessLedger;
using qmat::DensityMatrix;
using qmat::HermitianOperator;
using qmat::UnitaryOperator;

/// Energy flux out of the reservoir, i [1 (x) H_R, K].
HermitianOperator heat_flux_observable(const HermitianOperator& k, const ReservoirSpec& r);

struct TrajectorySample {
  double t = 0.0;
  /// delta_q is formula (a) below.
  ProcessLedger ledger;
  DensityMatrix rho_k;
  double dq_reservoir = 0.0;  ///< (a) tr((nu(t) - nu_i) H_R)
  double dq_coupling = 0.0;   ///< (b) omega_i(K) - omega(t)(K)
  double dq_flux = 0.0;       ///< (c) -int_0^t omega(s)(Phi) ds, Simpson
  double energy_drift = 0.0;  ///< |tr(omega(t) H) - tr(omega_i H)|
  double spectrum_drift = 0.0;
};

struct InstantaneousOptions {
  /// Largest Simpson step for the flux integral.
  double max_quadrature_step = 0.01;
};

struct InstantaneousTrajectory {
  std::vector<TrajectorySample> samples;
  double max_ab_mismatch = 0.0;
  double max_ac_mismatch = 0.0;
  double max_energy_drift = 0.0;
  double max_spectrum_drift = 0.0;
  /// max ||rho_K(t) - rho_K(t_final)||_1 over samples in the last 10% of the
  /// horizon; small values mean the run stopped after local relaxation and
  /// before a recurrence.
  double tail_stability = 0.0;
  double h_norm = 0.0;  ///< ||H||_max of the total Hamiltonian
};

/// omega(t) = e^{-itH} (rho_i (x) nu_i) e^{itH}, H = 1 (x) H_R + K, evaluated
/// exactly in the eigenbasis of H. `times` must be non-decreasing and >= 0.
InstantaneousTrajectory evolve_instantaneous(const DensityMatrix& rho_i,
                                             const ReservoirSpec& r,
                                             const InteractionSpec& spec,
                                             const std::vector<double>& times,
                                             const InstantaneousOptions& opts = {});

/// Time-ordered propagator of H(t) = 1 (x) H_R + K(t / T) on [0, T] using
/// midpoint exponentials with a Newton-Schulz re-unitarization per step.
UnitaryOperator propagator_timedep(const SwitchingProtocol& protocol,
                                   const ReservoirSpec& r, double T, std::size_t steps);

/// e^{iT H_R} U(T), the interaction-picture cocycle.
UnitaryOperator interaction_picture(const UnitaryOperator& u, const ReservoirSpec& r,
                                    double T);

struct StepHalvingStudy {
  std::vector<std::size_t> steps;   ///< n, 2n, 4n, ...
  std::vector<double> differences;  ///< ||U_{steps[k]} - U_{steps[k+1]}||_max
  std::vector<double> ratios;       ///< differences[k] / differences[k+1]
  bool order_two = true;            ///< last ratio within [3, 5]
  std::string warning;
};

StepHalvingStudy step_halving_study(const SwitchingProtocol& protocol,
                                    const ReservoirSpec& r, double T, std::size_t steps,
                                    std::size_t levels = 3);

struct AdiabaticOptions {
  /// Fixed step count (even); 0 picks the smallest multiple of 4 with
  /// T / steps <= max_dt.
  std::size_t steps = 0;
  double max_dt = 0.02;
  /// Repeat the run with half the steps to estimate the integration error.
  bool halving_check = true;
  /// When positive, refine the step count until the Richardson estimates of
  /// sigma and dQ and the first-law residual all fall below this value. Each
  /// refinement jumps to the count an n^-2 error model predicts, capped at
  /// max_steps.
  double target_error = 0.0;
  std::size_t max_steps = std::size_t{1} << 16;
};

struct AdiabaticResult {
  double T = 0.0;
  std::size_t steps = 0;
  ProcessLedger ledger;         ///< dS_T, dQ_T (reservoir energy), sigma_T
  DensityMatrix rho_t;
  double power_integral = 0.0;  ///< int_0^T omega_t(P_T(t)) dt
  /// |dQ + omega_T(K(1)) - omega_i(K(0)) - power_integral|
  double first_law_residual = 0.0;
  double boundary_mismatch = 0.0;  ///< ||K(0) - (-log rho_i / beta) (x) 1||_max
  /// |q(n) - q(m)| / ((n/m)^2 - 1) for sigma and dQ, where m < n are the last
  /// two step counts run (m = n/2 without refinement); NaN when disabled.
  double sigma_halving_error = 0.0;
  double delta_q_halving_error = 0.0;
};

AdiabaticResult evolve_adiabatic(const SwitchingProtocol& protocol,
                                 const ReservoirSpec& r, const DensityMatrix& rho_i,
                                 double T, const AdiabaticOptions& opts = {});

struct SweepRow {
  double T = 0.0;
  double delta_s = 0.0;
  double delta_q = 0.0;
  double sigma = 0.0;
  double beta_dq_minus_ds = 0.0;
  double balance_residual = 0.0;
  double first_law_residual = 0.0;
  double sigma_halving_error = 0.0;
  std::size_t steps = 0;
};

struct SweepTable {
  std::vector<SweepRow> rows;  ///< sorted by T
  /// beta int_0^1 tr(mu_K(gamma) dK(gamma)) dgamma, the instantaneous-Gibbs
  /// estimate of the quasi-static entropy production.
  double gibbs_prediction = 0.0;
  /// Least-squares fit sigma_T ~ prefactor * T^exponent (NaN with < 2 rows
  /// or non-positive sigma).
  double power_law_exponent = 0.0;
  double power_law_prefactor = 0.0;
  bool sigma_strictly_decreasing = false;
};

/// Runs evolve_adiabatic for every T (concurrently when `parallel`). t_list
/// must be strictly increasing; throws DomainError otherwise.
SweepTable adiabatic_sweep(const SwitchingProtocol& protocol, const ReservoirSpec& r,
                           const DensityMatrix& rho_i, const std::vector<double>& t_list,
                           const AdiabaticOptions& opts = {}, bool parallel = true);

}  // namespace landauer::dynamics
