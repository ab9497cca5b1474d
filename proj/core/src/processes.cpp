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

#include "landauer/processes.hpp"

#include <cmath>
#include <sstream>

namespace landauer::processes {

using entropy::relative_entropy;
using entropy::von_neumann_entropy;

double ProcessLedger::relative_balance_residual() const {
  return std::abs(balance_residual()) / (1.0 + std::abs(beta * delta_q));
}

ProcessOutcome apply_process(const DensityMatrix& rho_i, const ReservoirSpec& r,
                             const UnitaryOperator& u) {
  const std::size_t d_s = rho_i.dim();
  const std::size_t d_r = r.dim();
  if (u.dim() != d_s * d_r) {
    std::ostringstream os;
    os << "apply_process: unitary dimension " << u.dim() << " != " << d_s << "*"
       << d_r;
    throw DimensionError(os.str());
  }
  const DensityMatrix omega_i = qmat::tensor(rho_i, r.gibbs());
  DensityMatrix omega_u = qmat::conjugate(omega_i, u);
  DensityMatrix rho_u = qmat::partial_trace(omega_u, d_s, d_r, qmat::Keep::System);
  DensityMatrix nu_u = qmat::partial_trace(omega_u, d_s, d_r, qmat::Keep::Reservoir);

  ProcessLedger ledger;
  ledger.beta = r.beta();
  ledger.delta_s = von_neumann_entropy(rho_i) - von_neumann_entropy(rho_u);
  ledger.delta_q = nu_u.expect(r.hamiltonian()) - r.mean_energy();
  ledger.sigma = relative_entropy(omega_u, qmat::tensor(rho_u, r.gibbs()));
  return {std::move(omega_u), std::move(rho_u), std::move(nu_u), ledger};
}

namespace {

SandwichMargins margins_against(const HermitianOperator& a, const ReservoirSpec& r,
                                const HermitianOperator& b) {
  const double factor = std::exp(r.span() * r.beta());
  const qmat::RealVector lo = qmat::eigenvalues(b - a * (1.0 / factor));
  const qmat::RealVector hi = qmat::eigenvalues(a * factor - b);
  return {lo(lo.size() - 1), hi(hi.size() - 1)};
}

}  // namespace

SandwichMargins sandwich_margins(const DensityMatrix& rho_i, const ReservoirSpec& r,
                                 const DensityMatrix& rho_u) {
  return margins_against(rho_i.hermitian(), r, rho_u.hermitian());
}

DensityMatrix averaged_channel(const DensityMatrix& x, std::size_t d_r,
                               const UnitaryOperator& u) {
  const DensityMatrix spread = qmat::tensor(x, DensityMatrix::maximally_mixed(d_r));
  return qmat::partial_trace(qmat::conjugate(spread, u), x.dim(), d_r, qmat::Keep::System);
}

SandwichMargins channel_sandwich_margins(const DensityMatrix& rho_i, const ReservoirSpec& r,
                                         const UnitaryOperator& u, const DensityMatrix& rho_u) {
  const DensityMatrix phi = averaged_channel(rho_i, r.dim(), u);
  return margins_against(phi.hermitian(), r, rho_u.hermitian());
}

bool remark1_sandwich(const DensityMatrix& rho_i, const ReservoirSpec& r,
                      const UnitaryOperator& u) {
  const ProcessOutcome out = apply_process(rho_i, r, u);
  return sandwich_margins(rho_i, r, out.rho_u).holds();
}

UnitaryOperator swap_unitary(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  qmat::ComplexMatrix m = qmat::ComplexMatrix::Zero(d * d, d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      m(j * d + i, i * d + j) = 1.0;
    }
  }
  return UnitaryOperator(std::move(m));
}

FlipOutcome flip_process(const DensityMatrix& rho_i, const DensityMatrix& rho_f) {
  if (rho_i.dim() != rho_f.dim()) {
    throw DimensionError("flip_process: states have different dimensions");
  }
  if (!qmat::is_faithful(rho_f)) {
    throw DomainError("flip_process: target state must be faithful");
  }
  ReservoirSpec reservoir(qmat::matrix_log(rho_f.hermitian()) * -1.0, 1.0);
  ProcessOutcome out = apply_process(rho_i, reservoir, swap_unitary(rho_i.dim()));
  return {out.ledger, std::move(out.rho_u), std::move(out.nu_u), std::move(reservoir)};
}

StatePath linear_path(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("linear_path: dimension mismatch");
  return [a, b](double t) {
    return DensityMatrix(HermitianOperator((1.0 - t) * a.matrix() + t * b.matrix()));
  };
}

StagedOutcome staged_erasure(const StatePath& path, std::size_t stages) {
  if (stages == 0) throw DomainError("staged_erasure: need at least one stage");
  const double n_total = static_cast<double>(stages);

  DensityMatrix prev = path(0.0);
  const DensityMatrix rho_initial = prev;
  double delta_q = 0.0;
  double sigma = 0.0;
  for (std::size_t n = 1; n <= stages; ++n) {
    const DensityMatrix cur = path(static_cast<double>(n) / n_total);
    if (cur.dim() != prev.dim()) {
      throw DimensionError("staged_erasure: path changes dimension");
    }
    if (!qmat::is_faithful(cur)) {
      std::ostringstream os;
      os << "staged_erasure: path is not faithful at t = " << n << "/" << stages;
      throw DomainError(os.str());
    }
    const HermitianOperator log_cur = qmat::matrix_log(cur.hermitian());
    delta_q += (cur.hermitian() - prev.hermitian()).expectation(log_cur);
    sigma += relative_entropy(prev, cur);
    prev = cur;
  }

  StagedOutcome out;
  out.stages = stages;
  out.delta_q_n = delta_q;
  out.ledger.beta = 1.0;
  out.ledger.delta_q = delta_q;
  out.ledger.sigma = sigma;
  out.ledger.delta_s = von_neumann_entropy(rho_initial) - von_neumann_entropy(prev);
  return out;
}

SaturationReport saturation_diagnostic(const DensityMatrix& rho_i,
                                       const DensityMatrix& rho_u,
                                       const DensityMatrix& nu_i,
                                       const DensityMatrix& nu_u,
                                       const ProcessLedger& ledger, double tol,
                                       double scale) {
  SaturationReport rep;
  rep.sigma = ledger.sigma;
  rep.saturated = ledger.sigma < tol;
  rep.spectrum_distance = qmat::spectrum_distance(rho_i.hermitian(), rho_u.hermitian());
  rep.reservoir_distance = qmat::trace_norm(nu_u.hermitian() - nu_i.hermitian());
  rep.threshold = std::sqrt(tol) * scale;
  rep.passed = !rep.saturated || (rep.spectrum_distance < rep.threshold &&
                                  rep.reservoir_distance < rep.threshold);
  return rep;
}

namespace {

DensityMatrix near_pure_target(std::size_t dim, double delta) {
  qmat::ComplexMatrix m =
      qmat::ComplexMatrix::Identity(dim, dim) * (delta / static_cast<double>(dim));
  m(0, 0) += 1.0 - delta;
  return DensityMatrix(HermitianOperator(std::move(m)));
}

}  // namespace

EpsilonErasureOutcome epsilon_erasure(std::size_t dim, double epsilon) {
  if (dim < 2) throw DomainError("epsilon_erasure: need d >= 2");
  const double log_d = std::log(static_cast<double>(dim));
  if (!(epsilon > 0.0 && epsilon < log_d)) {
    throw DomainError("epsilon_erasure: epsilon must lie in (0, log d)");
  }

  // S(target(delta)) increases monotonically from 0 to log d.
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (von_neumann_entropy(near_pure_target(dim, mid)) <= 0.5 * epsilon) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (!(lo > 0.0)) throw DomainError("epsilon_erasure: epsilon too small");

  EpsilonErasureOutcome out;
  out.dim = dim;
  out.epsilon = epsilon;
  out.delta = lo;
  out.target = near_pure_target(dim, lo);
  out.target_entropy = von_neumann_entropy(out.target);
  out.distance_to_pure = qmat::trace_norm(out.target.hermitian() -
                                          DensityMatrix::pure(dim, 0).hermitian());

  const StatePath path = linear_path(DensityMatrix::maximally_mixed(dim), out.target);
  for (std::size_t n = 1; n <= (std::size_t{1} << 20); n *= 2) {
    const StagedOutcome staged = staged_erasure(path, n);
    const double bdq = staged.ledger.beta * staged.delta_q_n;
    out.attempts.emplace_back(n, bdq);
    if (bdq >= log_d - epsilon && bdq <= log_d + epsilon) {
      out.stages = n;
      out.beta_delta_q = bdq;
      out.ledger = staged.ledger;
      return out;
    }
  }
  throw ConvergenceError("epsilon_erasure: no stage count up to 2^20 meets the bound");
}

}  // namespace landauer::processes
