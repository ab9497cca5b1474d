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

#include "landauer/interaction.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>

namespace landauer {

using qmat::HermitianOperator;

std::size_t InteractionSpec::reservoir_dim() const {
  const std::size_t d_s = h_s.dim();
  if (d_s == 0 || v.dim() % d_s != 0) {
    throw DimensionError("InteractionSpec: dim(V) is not a multiple of dim(H_S)");
  }
  return v.dim() / d_s;
}

HermitianOperator InteractionSpec::coupling() const { return coupling_with(h_s); }

HermitianOperator InteractionSpec::coupling_with(const HermitianOperator& x) const {
  const std::size_t d_r = reservoir_dim();
  if (x.dim() != h_s.dim()) {
    throw DimensionError("InteractionSpec: system operator has wrong dimension");
  }
  return qmat::tensor(x, HermitianOperator::identity(d_r)) + v * lambda;
}

SwitchingProtocol constant_protocol(const HermitianOperator& k, std::size_t d_s,
                                    std::size_t d_r) {
  if (k.dim() != d_s * d_r) throw DimensionError("constant_protocol: dimension mismatch");
  const HermitianOperator zero = HermitianOperator::zero(k.dim());
  return {[k](double) { return k; }, [zero](double) { return zero; }, d_s, d_r};
}

SwitchingProtocol linear_protocol(const HermitianOperator& k0, const HermitianOperator& k1,
                                  std::size_t d_s, std::size_t d_r) {
  if (k0.dim() != d_s * d_r || k1.dim() != d_s * d_r) {
    throw DimensionError("linear_protocol: dimension mismatch");
  }
  const HermitianOperator diff = k1 - k0;
  return {[k0, diff](double g) { return k0 + diff * g; },
          [diff](double) { return diff; }, d_s, d_r};
}

SwitchingProtocol combination_protocol(std::vector<ProtocolTerm> terms, std::size_t d_s,
                                       std::size_t d_r) {
  const std::size_t dim = d_s * d_r;
  for (const ProtocolTerm& t : terms) {
    if (t.op.dim() != dim) throw DimensionError("combination_protocol: dimension mismatch");
  }
  auto shared = std::make_shared<const std::vector<ProtocolTerm>>(std::move(terms));
  auto eval = [shared, dim](double g, bool derivative) {
    qmat::ComplexMatrix m = qmat::ComplexMatrix::Zero(dim, dim);
    for (const ProtocolTerm& t : *shared) {
      m += (derivative ? t.derivative(g) : t.profile(g)) * t.op.matrix();
    }
    return HermitianOperator(std::move(m));
  };
  return {[eval](double g) { return eval(g, false); },
          [eval](double g) { return eval(g, true); }, d_s, d_r};
}

SwitchingProtocol erasure_protocol(const qmat::DensityMatrix& rho_i,
                                   const qmat::DensityMatrix& rho_f,
                                   const HermitianOperator& v, double amplitude,
                                   double beta) {
  if (rho_i.dim() != rho_f.dim()) {
    throw DimensionError("erasure_protocol: endpoint dimension mismatch");
  }
  if (!qmat::is_faithful(rho_i) || !qmat::is_faithful(rho_f)) {
    throw DomainError("erasure_protocol: endpoint states must be faithful");
  }
  if (!(beta > 0.0)) throw DomainError("erasure_protocol: beta must be positive");
  const std::size_t d_s = rho_i.dim();
  if (v.dim() % d_s != 0) throw DimensionError("erasure_protocol: bad coupling dimension");
  const std::size_t d_r = v.dim() / d_s;
  const HermitianOperator id_r = HermitianOperator::identity(d_r);
  const HermitianOperator k0 =
      qmat::tensor(qmat::matrix_log(rho_i.hermitian()) * (-1.0 / beta), id_r);
  const HermitianOperator k1 =
      qmat::tensor(qmat::matrix_log(rho_f.hermitian()) * (-1.0 / beta), id_r);

  constexpr double pi = std::numbers::pi;
  std::vector<ProtocolTerm> terms;
  terms.push_back({k0, [](double g) { return 1.0 - g; }, [](double) { return -1.0; }});
  terms.push_back({k1, [](double g) { return g; }, [](double) { return 1.0; }});
  terms.push_back({v * amplitude,
                   [](double g) {
                     const double s = std::sin(pi * g);
                     return s * s;
                   },
                   [](double g) { return pi * std::sin(2.0 * pi * g); }});
  return combination_protocol(std::move(terms), d_s, d_r);
}

double protocol_derivative_mismatch(const SwitchingProtocol& p,
                                    const std::vector<double>& probes, double h) {
  double worst = 0.0;
  for (double g : probes) {
    const qmat::ComplexMatrix fd =
        (p.k(g + h).matrix() - p.k(g - h).matrix()) / (2.0 * h);
    worst = std::max(worst, qmat::max_abs(fd - p.dk(g).matrix()));
  }
  return worst;
}

}  // namespace landauer
