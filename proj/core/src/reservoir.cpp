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

#include "landauer/reservoir.hpp"

#include <cmath>

#include "landauer/gibbs.hpp"

namespace landauer {

ReservoirSpec::ReservoirSpec(qmat::HermitianOperator h_r, double beta)
    : h_r_(std::move(h_r)), beta_(beta) {
  if (!(beta_ > 0.0) || !std::isfinite(beta_)) {
    throw DomainError("ReservoirSpec: beta must be positive and finite");
  }
  if (h_r_.dim() == 0) throw DimensionError("ReservoirSpec: empty Hamiltonian");
  const qmat::RealVector ev = qmat::eigenvalues(h_r_);
  e_max_ = ev(0);
  e_min_ = ev(ev.size() - 1);
  nu_i_ = gibbs::gibbs_state(h_r_, beta_);
  log_z_ = gibbs::log_trace_exp(h_r_, beta_);
}

double ReservoirSpec::partition() const { return std::exp(log_z_); }

double ReservoirSpec::mean_energy() const { return nu_i_.expect(h_r_); }

}  // namespace landauer
