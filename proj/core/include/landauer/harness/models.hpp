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

#include "landauer/qmat.hpp"
#include "landauer/reservoir.hpp"

/// Reservoir and coupling builders plus the random process instances used by
/// the property sweeps.
namespace landauer::harness {

enum class Pauli { I, X, Y, Z };

qmat::ComplexMatrix pauli(Pauli p);

/// Single-site Pauli operator embedded at `site` of an n-qubit register
/// (site 0 is the leftmost tensor factor).
qmat::ComplexMatrix site_operator(std::size_t n, std::size_t site, Pauli p);

inline constexpr std::size_t kMaxReservoirDim = 4096;

/// H = sum_k J_k (X_k X_{k+1} + Y_k Y_{k+1}) / 2 + sum_k h_k Z_k / 2.
/// Requires |J| = n - 1 and |h| = n. Throws DimensionError above 4096 levels.
qmat::HermitianOperator spin_chain_hamiltonian(std::size_t n, const std::vector<double>& j,
                                               const std::vector<double>& h);

ReservoirSpec spin_chain_reservoir(std::size_t n, const std::vector<double>& j,
                                   const std::vector<double>& h, double beta);

/// Two-level reservoir diag(0, gap).
ReservoirSpec single_level_reservoir(double gap, double beta);

/// Incommensurate default couplings 1 + 0.1 sqrt(k + 2) and fields
/// 0.5 + frac(0.3 sqrt(k + 3)).
std::vector<double> default_chain_couplings(std::size_t n);
std::vector<double> default_chain_fields(std::size_t n);

/// Smallest gap between consecutive distinct eigenvalues (0 if degenerate).
double min_level_spacing(const qmat::HermitianOperator& h);

enum class CouplingKind { XX, Exchange };

/// System qubit coupled to chain site `site`: X (x) X_site, or the exchange
/// form (X (x) X_site + Y (x) Y_site) / 2.
qmat::HermitianOperator qubit_chain_coupling(std::size_t n_chain, std::size_t site,
                                             CouplingKind kind);

struct ProcessInstance {
  qmat::DensityMatrix rho_i;
  ReservoirSpec reservoir;
  qmat::UnitaryOperator u;
  /// U = U_S (x) W with [W, H_R] = 0; such processes have sigma = 0.
  bool saturating = false;
};

/// d_S from {2,3,4}, d_R from {2,4,8}, beta in [0.2, 2], GUE reservoir
/// Hamiltonian, Hilbert-Schmidt random rho_i and a Haar unitary. With
/// `saturating`, U = U_S (x) W where W is diagonal in the eigenbasis of H_R.
ProcessInstance random_process_instance(qmat::Rng& rng, bool saturating = false);

}  // namespace landauer::harness
