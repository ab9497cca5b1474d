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
#include <vector>

#include "landauer/interaction.hpp"
#include "landauer/qmat.hpp"
#include "landauer/reservoir.hpp"

/// Finite-dimensional equilibrium states, the target-Hamiltonian solver and
/// the free-energy identities along switching protocols.
namespace landauer::gibbs {

using qmat::DensityMatrix;
using qmat::HermitianOperator;

/// e^{-beta H} / tr e^{-beta H}, shifted by the ground energy. beta >= 0.
DensityMatrix gibbs_state(const HermitianOperator& h, double beta);

/// log tr e^{-beta H} without overflow.
double log_trace_exp(const HermitianOperator& h, double beta);

/// 1 (x) H_R + K on the full space.
HermitianOperator total_hamiltonian(const HermitianOperator& k, const ReservoirSpec& r);

/// tr_R of the Gibbs state of 1 (x) H_R + X (x) 1 + lambda V.
DensityMatrix gibbs_marginal(const HermitianOperator& x, const InteractionSpec& spec,
                             const ReservoirSpec& r);

/// Directional derivative of gibbs_marginal at X along Y (x) 1, through the
/// Duhamel formula evaluated with divided differences of e^{-beta x} in the
/// eigenbasis of the full Hamiltonian.
HermitianOperator duhamel_derivative(const HermitianOperator& x,
                                     const HermitianOperator& y,
                                     const InteractionSpec& spec,
                                     const ReservoirSpec& r);

/// Orthonormal (Hilbert-Schmidt) basis of traceless Hermitian d x d matrices,
/// d^2 - 1 elements: symmetric, antisymmetric and diagonal generalized
/// Gell-Mann matrices in that order.
std::vector<HermitianOperator> traceless_basis(std::size_t d);

/// Real symmetric matrix J_ab = <E_a, F'(X) E_b> in the traceless basis.
Eigen::MatrixXd marginal_jacobian(const HermitianOperator& x,
                                  const InteractionSpec& spec,
                                  const ReservoirSpec& r);

class SolverError : public ConvergenceError {
 public:
  enum class Kind { MaxIterations, SingularJacobian, NonFaithfulTarget };
  SolverError(Kind kind, const std::string& what) : ConvergenceError(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct TargetSolveResult {
  HermitianOperator h;          ///< traceless representative
  double trace_gauge = 0.0;     ///< tr(H0)/d removed from the traceless part
  std::size_t iterations = 0;
  double residual = 0.0;        ///< ||marginal(H) - rho_f||_1
  double jacobian_conditioning = 0.0;
  std::vector<double> residual_history;  ///< starts with the initial residual
};

/// Newton iteration with Armijo backtracking on the traceless Hermitian
/// matrices, started from -log(rho_f)/beta. spec.h_s is ignored; spec.v and
/// spec.lambda define the coupling.
TargetSolveResult solve_target_hamiltonian(const DensityMatrix& rho_f,
                                           const InteractionSpec& spec,
                                           const ReservoirSpec& r, double tol,
                                           std::size_t max_iter);

struct RadiusEstimate {
  double radius = 0.0;              ///< last lambda that converged
  std::vector<double> lambdas;      ///< converged continuation points
  std::vector<std::size_t> iterations;
  bool hit_ceiling = false;         ///< never failed up to lambda_max
};

/// Continuation in lambda from 0 upwards in steps of lambda_step, warm
/// starting every solve from the previous solution, until the solver fails
/// or lambda_max is reached.
RadiusEstimate estimate_convergence_radius(const DensityMatrix& rho_f,
                                           const InteractionSpec& spec,
                                           const ReservoirSpec& r, double lambda_step,
                                           double lambda_max, double tol = 1e-10,
                                           std::size_t max_iter = 30);

/// log tr e^{-beta (1 (x) H_R + K)}.
double log_partition(const HermitianOperator& k, const ReservoirSpec& r);

struct KuboRow {
  double gamma = 0.0;
  double expectation = 0.0;    ///< tr(mu_K(gamma) dK(gamma))
  double free_energy_slope = 0.0;  ///< -1/beta d/dgamma log Z(gamma)
};

struct KuboReport {
  std::vector<KuboRow> rows;
  double max_mismatch = 0.0;
};

/// Compares the Gibbs expectation of dK with the central difference (step h)
/// of the log-partition function at each grid point.
KuboReport kubo_identity_check(const SwitchingProtocol& protocol, const ReservoirSpec& r,
                               const std::vector<double>& grid, double h = 1e-4);

/// Composite 8-point Gauss-Legendre value of int_0^1 tr(mu_K(gamma) dK(gamma)).
double thermodynamic_integration(const SwitchingProtocol& protocol,
                                 const ReservoirSpec& r, std::size_t panels);

/// -1/beta (log Z(1) - log Z(0)).
double free_energy_difference(const SwitchingProtocol& protocol, const ReservoirSpec& r);

}  // namespace landauer::gibbs
