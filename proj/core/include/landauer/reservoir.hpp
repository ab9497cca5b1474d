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

namespace landauer {

/// A confined thermal reservoir: Hamiltonian, inverse temperature and the
/// derived equilibrium data.
class ReservoirSpec {
 public:
  ReservoirSpec() = default;
  /// Throws DomainError unless beta > 0.
  ReservoirSpec(qmat::HermitianOperator h_r, double beta);

  const qmat::HermitianOperator& hamiltonian() const { return h_r_; }
  double beta() const { return beta_; }
  std::size_t dim() const { return h_r_.dim(); }

  /// e^{-beta H_R} / Z.
  const qmat::DensityMatrix& gibbs() const { return nu_i_; }
  /// log Z, computed with a ground-energy shift.
  double log_partition() const { return log_z_; }
  double partition() const;

  double e_min() const { return e_min_; }
  double e_max() const { return e_max_; }
  /// Spectral span l = e_max - e_min.
  double span() const { return e_max_ - e_min_; }
  double midpoint() const { return 0.5 * (e_max_ + e_min_); }

  /// tr(nu_i H_R).
  double mean_energy() const;

 private:
  qmat::HermitianOperator h_r_;
  double beta_ = 1.0;
  qmat::DensityMatrix nu_i_;
  double log_z_ = 0.0;
  double e_min_ = 0.0;
  double e_max_ = 0.0;
};

}  // namespace landauer
