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

#include "landauer/qmat.hpp"

namespace landauer {

/// System Hamiltonian plus coupling: K = H_S (x) 1 + lambda V.
struct InteractionSpec {
  qmat::HermitianOperator h_s;  ///< on H_S
  qmat::HermitianOperator v;    ///< on H_S (x) H_R
  double lambda = 0.0;

  std::size_t system_dim() const { return h_s.dim(); }
  /// Throws DimensionError unless dim(V) is a multiple of dim(H_S).
  std::size_t reservoir_dim() const;

  /// H_S (x) 1 + lambda V.
  qmat::HermitianOperator coupling() const;
  /// X (x) 1 + lambda V for a replacement system Hamiltonian X.
  qmat::HermitianOperator coupling_with(const qmat::HermitianOperator& x) const;
};

/// A path gamma -> K(gamma) on [0, 1] of couplings on H_S (x) H_R together
/// with its derivative.
struct SwitchingProtocol {
  std::function<qmat::HermitianOperator(double)> k;
  std::function<qmat::HermitianOperator(double)> dk;
  std::size_t d_s = 0;
  std::size_t d_r = 0;

  std::size_t dim() const { return d_s * d_r; }
};

/// K(gamma) = K for all gamma.
SwitchingProtocol constant_protocol(const qmat::HermitianOperator& k,
                                    std::size_t d_s, std::size_t d_r);

/// K(gamma) = (1 - gamma) K0 + gamma K1.
SwitchingProtocol linear_protocol(const qmat::HermitianOperator& k0,
                                  const qmat::HermitianOperator& k1,
                                  std::size_t d_s, std::size_t d_r);

/// K(gamma) = sum_j c_j(gamma) A_j for fixed operators and smooth scalar
/// profiles with known derivatives.
struct ProtocolTerm {
  qmat::HermitianOperator op;
  std::function<double(double)> profile;
  std::function<double(double)> derivative;
};
SwitchingProtocol combination_protocol(std::vector<ProtocolTerm> terms,
                                       std::size_t d_s, std::size_t d_r);

/// Erasure protocol between system Hamiltonians -log(rho_i)/beta and
/// -log(rho_f)/beta with an interaction amplitude * sin^2(pi gamma) V that
/// vanishes at both ends. Throws DomainError for non-faithful endpoints.
SwitchingProtocol erasure_protocol(const qmat::DensityMatrix& rho_i,
                                   const qmat::DensityMatrix& rho_f,
                                   const qmat::HermitianOperator& v,
                                   double amplitude, double beta);

/// Largest max-norm discrepancy between dk and a central difference of k
/// (step h) over the probe grid.
double protocol_derivative_mismatch(const SwitchingProtocol& p,
                                    const std::vector<double>& probes,
                                    double h = 1e-5);

}  // namespace landauer
