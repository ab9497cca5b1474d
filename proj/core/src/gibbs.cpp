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

#include "landauer/gibbs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "landauer/quadrature.hpp"

namespace landauer::gibbs {

using qmat::ComplexMatrix;
using qmat::EigenDecomposition;
using qmat::RealVector;

DensityMatrix gibbs_state(const HermitianOperator& h, double beta) {
  if (!(beta >= 0.0)) throw DomainError("gibbs_state: beta must be >= 0");
  const EigenDecomposition eig = qmat::hermitian_eig(h);
  const double ground = eig.values(eig.values.size() - 1);
  RealVector w(eig.values.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    w(k) = std::exp(-beta * (eig.values(k) - ground));
  }
  w /= w.sum();
  return DensityMatrix(
      HermitianOperator(eig.vectors * w.asDiagonal() * eig.vectors.adjoint()));
}

double log_trace_exp(const HermitianOperator& h, double beta) {
  const RealVector ev = qmat::eigenvalues(h);
  const double ground = ev(ev.size() - 1);
  double acc = 0.0;
  for (Eigen::Index k = 0; k < ev.size(); ++k) acc += std::exp(-beta * (ev(k) - ground));
  return -beta * ground + std::log(acc);
}

HermitianOperator total_hamiltonian(const HermitianOperator& k, const ReservoirSpec& r) {
  if (k.dim() % r.dim() != 0) {
    throw DimensionError("total_hamiltonian: coupling dimension not a multiple of dim(H_R)");
  }
  const std::size_t d_s = k.dim() / r.dim();
  return qmat::tensor(HermitianOperator::identity(d_s), r.hamiltonian()) + k;
}

DensityMatrix gibbs_marginal(const HermitianOperator& x, const InteractionSpec& spec,
                             const ReservoirSpec& r) {
  if (spec.reservoir_dim() != r.dim()) {
    throw DimensionError("gibbs_marginal: coupling and reservoir dimensions disagree");
  }
  const DensityMatrix mu = gibbs_state(total_hamiltonian(spec.coupling_with(x), r), r.beta());
  return qmat::partial_trace(mu, x.dim(), r.dim(), qmat::Keep::System);
}

namespace {

// (e^{-beta a} - e^{-beta b}) / (a - b) relative to the ground shift, written
// as -e^{-beta m} sinh(beta delta) / delta with m the midpoint and delta the
// half gap so that the a -> b limit is continuous.
double exp_divided_difference(double a, double b, double beta) {
  const double m = 0.5 * (a + b);
  const double delta = 0.5 * (a - b);
  const double x = beta * delta;
  double sinhc;  // sinh(x) / x
  if (std::abs(delta) < 1e-8) {
    sinhc = 1.0 + x * x / 6.0;
  } else {
    sinhc = std::sinh(x) / x;
  }
  return -beta * std::exp(-beta * m) * sinhc;
}

struct GibbsSpectral {
  EigenDecomposition eig;
  RealVector weights;  // e^{-beta (a_k - ground)}
  double z = 0.0;      // sum of weights
  double ground = 0.0;
  double beta = 1.0;
};

GibbsSpectral gibbs_spectral(const HermitianOperator& h, double beta) {
  GibbsSpectral g;
  g.eig = qmat::hermitian_eig(h);
  g.beta = beta;
  g.ground = g.eig.values(g.eig.values.size() - 1);
  g.weights.resize(g.eig.values.size());
  for (Eigen::Index k = 0; k < g.weights.size(); ++k) {
    g.weights(k) = std::exp(-beta * (g.eig.values(k) - g.ground));
  }
  g.z = g.weights.sum();
  return g;
}

// Derivative of the normalized Gibbs state along B, in the eigenbasis.
ComplexMatrix normalized_gibbs_derivative_eigbasis(const GibbsSpectral& g,
                                                   const ComplexMatrix& b_full) {
  const ComplexMatrix bt = g.eig.vectors.adjoint() * b_full * g.eig.vectors;
  const Eigen::Index n = bt.rows();
  ComplexMatrix de(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      de(j, k) = bt(j, k) * exp_divided_difference(g.eig.values(j) - g.ground,
                                                   g.eig.values(k) - g.ground, g.beta);
    }
  }
  const double tr_de = de.trace().real();
  ComplexMatrix out = de / g.z;
  for (Eigen::Index k = 0; k < n; ++k) out(k, k) -= g.weights(k) / g.z * (tr_de / g.z);
  return out;
}

HermitianOperator marginal_derivative(const GibbsSpectral& g, const HermitianOperator& y,
                                      std::size_t d_s, std::size_t d_r) {
  const ComplexMatrix b_full =
      qmat::tensor(y.matrix(), ComplexMatrix::Identity(d_r, d_r));
  const ComplexMatrix d_eig = normalized_gibbs_derivative_eigbasis(g, b_full);
  const ComplexMatrix d_full = g.eig.vectors * d_eig * g.eig.vectors.adjoint();
  return HermitianOperator(qmat::partial_trace(d_full, d_s, d_r, qmat::Keep::System));
}

}  // namespace

HermitianOperator duhamel_derivative(const HermitianOperator& x, const HermitianOperator& y,
                                     const InteractionSpec& spec, const ReservoirSpec& r) {
  if (y.dim() != x.dim()) throw DimensionError("duhamel_derivative: direction dimension");
  if (spec.reservoir_dim() != r.dim()) {
    throw DimensionError("duhamel_derivative: coupling and reservoir dimensions disagree");
  }
  const GibbsSpectral g =
      gibbs_spectral(total_hamiltonian(spec.coupling_with(x), r), r.beta());
  return marginal_derivative(g, y, x.dim(), r.dim());
}

std::vector<HermitianOperator> traceless_basis(std::size_t d) {
  std::vector<HermitianOperator> basis;
  const auto n = static_cast<Eigen::Index>(d);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = j + 1; k < n; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(n, n);
      m(j, k) = inv_sqrt2;
      m(k, j) = inv_sqrt2;
      basis.emplace_back(std::move(m));
    }
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = j + 1; k < n; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(n, n);
      m(j, k) = qmat::Complex(0.0, -inv_sqrt2);
      m(k, j) = qmat::Complex(0.0, inv_sqrt2);
      basis.emplace_back(std::move(m));
    }
  }
  for (Eigen::Index l = 1; l < n; ++l) {
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    const double c = 1.0 / std::sqrt(static_cast<double>(l * (l + 1)));
    for (Eigen::Index j = 0; j < l; ++j) m(j, j) = c;
    m(l, l) = -static_cast<double>(l) * c;
    basis.emplace_back(std::move(m));
  }
  return basis;
}

namespace {

Eigen::VectorXd coordinates(const HermitianOperator& a,
                            const std::vector<HermitianOperator>& basis) {
  Eigen::VectorXd c(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    c(static_cast<Eigen::Index>(i)) = basis[i].expectation(a);
  }
  return c;
}

HermitianOperator from_coordinates(const Eigen::VectorXd& c,
                                   const std::vector<HermitianOperator>& basis,
                                   std::size_t d) {
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    m += c(static_cast<Eigen::Index>(i)) * basis[i].matrix();
  }
  return HermitianOperator(std::move(m));
}

Eigen::MatrixXd jacobian_from_spectral(const GibbsSpectral& g,
                                       const std::vector<HermitianOperator>& basis,
                                       std::size_t d_s, std::size_t d_r) {
  const auto n = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd jac(n, n);
  for (Eigen::Index b = 0; b < n; ++b) {
    const HermitianOperator col =
        marginal_derivative(g, basis[static_cast<std::size_t>(b)], d_s, d_r);
    jac.col(b) = coordinates(col, basis);
  }
  return jac;
}

struct Evaluation {
  GibbsSpectral spectral;
  HermitianOperator mismatch;  // marginal - rho_f
  double residual = 0.0;       // trace norm of mismatch
};

Evaluation evaluate(const HermitianOperator& x, const DensityMatrix& rho_f,
                    const InteractionSpec& spec, const ReservoirSpec& r) {
  Evaluation e;
  e.spectral = gibbs_spectral(total_hamiltonian(spec.coupling_with(x), r), r.beta());
  const RealVector w = e.spectral.weights / e.spectral.z;
  const ComplexMatrix mu =
      e.spectral.eig.vectors * w.asDiagonal() * e.spectral.eig.vectors.adjoint();
  const HermitianOperator marginal(
      qmat::partial_trace(mu, x.dim(), r.dim(), qmat::Keep::System));
  e.mismatch = marginal - rho_f.hermitian();
  e.residual = qmat::trace_norm(e.mismatch);
  return e;
}

HermitianOperator traceless_part(const HermitianOperator& h) {
  const double shift = h.trace() / static_cast<double>(h.dim());
  return h - HermitianOperator::identity(h.dim()) * shift;
}

TargetSolveResult newton_solve(const DensityMatrix& rho_f, const InteractionSpec& spec,
                               const ReservoirSpec& r, double tol, std::size_t max_iter,
                               HermitianOperator start, double trace_gauge) {
  const std::size_t d = rho_f.dim();
  const std::vector<HermitianOperator> basis = traceless_basis(d);

  TargetSolveResult out;
  out.trace_gauge = trace_gauge;
  HermitianOperator x = std::move(start);
  Evaluation cur = evaluate(x, rho_f, spec, r);
  out.residual_history.push_back(cur.residual);

  while (cur.residual > tol) {
    if (out.iterations >= max_iter) {
      std::ostringstream os;
      os << "solve_target_hamiltonian: no convergence in " << max_iter
         << " iterations (residual " << cur.residual << ")";
      throw SolverError(SolverError::Kind::MaxIterations, os.str());
    }
    const Eigen::MatrixXd jac = jacobian_from_spectral(cur.spectral, basis, d, r.dim());
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> jeig(0.5 * (jac + jac.transpose()));
    const double largest = jeig.eigenvalues().cwiseAbs().maxCoeff();
    const double smallest = jeig.eigenvalues().cwiseAbs().minCoeff();
    if (!(smallest > 1e-14 * largest)) {
      throw SolverError(SolverError::Kind::SingularJacobian,
                        "solve_target_hamiltonian: singular Jacobian");
    }
    out.jacobian_conditioning = largest / smallest;

    const Eigen::VectorXd f = coordinates(cur.mismatch, basis);
    const Eigen::VectorXd step = jac.ldlt().solve(-f);
    const HermitianOperator dx = from_coordinates(step, basis, d);

    // Armijo backtracking on ||F||_1.
    double t = 1.0;
    constexpr double kMinStep = 1.0 / 1048576.0;  // 2^-20
    bool accepted = false;
    while (t >= kMinStep) {
      HermitianOperator trial = x + dx * t;
      Evaluation next = evaluate(trial, rho_f, spec, r);
      if (next.residual <= (1.0 - 1e-4 * t) * cur.residual) {
        x = std::move(trial);
        cur = std::move(next);
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    ++out.iterations;
    if (!accepted) {
      throw SolverError(SolverError::Kind::MaxIterations,
                        "solve_target_hamiltonian: line search stalled");
    }
    out.residual_history.push_back(cur.residual);
  }
  out.h = traceless_part(x);
  out.residual = cur.residual;
  return out;
}

}  // namespace

Eigen::MatrixXd marginal_jacobian(const HermitianOperator& x, const InteractionSpec& spec,
                                  const ReservoirSpec& r) {
  const GibbsSpectral g =
      gibbs_spectral(total_hamiltonian(spec.coupling_with(x), r), r.beta());
  return jacobian_from_spectral(g, traceless_basis(x.dim()), x.dim(), r.dim());
}

TargetSolveResult solve_target_hamiltonian(const DensityMatrix& rho_f,
                                           const InteractionSpec& spec,
                                           const ReservoirSpec& r, double tol,
                                           std::size_t max_iter) {
  if (!(tol > 0.0)) throw DomainError("solve_target_hamiltonian: tol must be positive");
  if (!qmat::is_faithful(rho_f)) {
    throw SolverError(SolverError::Kind::NonFaithfulTarget,
                      "solve_target_hamiltonian: target must be faithful");
  }
  if (spec.system_dim() != rho_f.dim() || spec.reservoir_dim() != r.dim()) {
    throw DimensionError("solve_target_hamiltonian: dimension mismatch");
  }
  const HermitianOperator h0 = qmat::matrix_log(rho_f.hermitian()) * (-1.0 / r.beta());
  const double gauge = h0.trace() / static_cast<double>(h0.dim());
  return newton_solve(rho_f, spec, r, tol, max_iter, traceless_part(h0), gauge);
}

RadiusEstimate estimate_convergence_radius(const DensityMatrix& rho_f,
                                           const InteractionSpec& spec,
                                           const ReservoirSpec& r, double lambda_step,
                                           double lambda_max, double tol,
                                           std::size_t max_iter) {
  if (!(lambda_step > 0.0)) throw DomainError("estimate_convergence_radius: bad step");
  RadiusEstimate est;
  InteractionSpec s = spec;
  s.lambda = 0.0;
  TargetSolveResult prev = solve_target_hamiltonian(rho_f, s, r, tol, max_iter);
  est.lambdas.push_back(0.0);
  est.iterations.push_back(prev.iterations);
  for (std::size_t k = 1;; ++k) {
    const double lambda = lambda_step * static_cast<double>(k);
    if (lambda > lambda_max + 1e-12) {
      est.hit_ceiling = true;
      break;
    }
    s.lambda = lambda;
    try {
      prev = newton_solve(rho_f, s, r, tol, max_iter, prev.h, prev.trace_gauge);
    } catch (const SolverError&) {
      break;
    }
    est.lambdas.push_back(lambda);
    est.iterations.push_back(prev.iterations);
    est.radius = lambda;
  }
  return est;
}

double log_partition(const HermitianOperator& k, const ReservoirSpec& r) {
  return log_trace_exp(total_hamiltonian(k, r), r.beta());
}

namespace {

double gibbs_expectation(const SwitchingProtocol& p, const ReservoirSpec& r, double g) {
  const DensityMatrix mu = gibbs_state(total_hamiltonian(p.k(g), r), r.beta());
  return mu.expect(p.dk(g));
}

}  // namespace

KuboReport kubo_identity_check(const SwitchingProtocol& protocol, const ReservoirSpec& r,
                               const std::vector<double>& grid, double h) {
  KuboReport rep;
  for (double g : grid) {
    KuboRow row;
    row.gamma = g;
    row.expectation = gibbs_expectation(protocol, r, g);
    const double lz_plus = log_partition(protocol.k(g + h), r);
    const double lz_minus = log_partition(protocol.k(g - h), r);
    row.free_energy_slope = -(lz_plus - lz_minus) / (2.0 * h) / r.beta();
    rep.max_mismatch =
        std::max(rep.max_mismatch, std::abs(row.expectation - row.free_energy_slope));
    rep.rows.push_back(row);
  }
  return rep;
}

double thermodynamic_integration(const SwitchingProtocol& protocol, const ReservoirSpec& r,
                                 std::size_t panels) {
  if (panels == 0) throw DomainError("thermodynamic_integration: need >= 1 panel");
  const quadrature::GaussLegendreRule rule = quadrature::gauss_legendre(8);
  const double width = 1.0 / static_cast<double>(panels);
  double total = 0.0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double a = width * static_cast<double>(p);
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double g = a + 0.5 * width * (rule.nodes[q] + 1.0);
      total += 0.5 * width * rule.weights[q] * gibbs_expectation(protocol, r, g);
    }
  }
  return total;
}

double free_energy_difference(const SwitchingProtocol& protocol, const ReservoirSpec& r) {
  return -(log_partition(protocol.k(1.0), r) - log_partition(protocol.k(0.0), r)) / r.beta();
}

}  // namespace landauer::gibbs
