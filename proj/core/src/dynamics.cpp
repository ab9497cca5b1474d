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

#include "landauer/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <sstream>

#include "landauer/entropy.hpp"
#include "landauer/gibbs.hpp"
#include "landauer/quadrature.hpp"

namespace landauer::dynamics {

using qmat::Complex;
using qmat::ComplexMatrix;
using qmat::EigenDecomposition;

HermitianOperator heat_flux_observable(const HermitianOperator& k, const ReservoirSpec& r) {
  if (k.dim() % r.dim() != 0) {
    throw DimensionError("heat_flux_observable: coupling dimension not a multiple of dim(H_R)");
  }
  const std::size_t d_s = k.dim() / r.dim();
  const HermitianOperator h_r_full =
      qmat::tensor(HermitianOperator::identity(d_s), r.hamiltonian());
  return qmat::commutator_i(h_r_full, k);
}

namespace {

ComplexMatrix phase_conjugate(const ComplexMatrix& m_eig, const Eigen::VectorXcd& p) {
  // diag(p) M diag(p)^dagger
  return p.asDiagonal() * m_eig * p.conjugate().asDiagonal();
}

Eigen::VectorXcd phases(const qmat::RealVector& energies, double t) {
  Eigen::VectorXcd p(energies.size());
  for (Eigen::Index k = 0; k < energies.size(); ++k) p(k) = std::polar(1.0, -t * energies(k));
  return p;
}

std::size_t even_intervals(double length, double max_step) {
  auto m = static_cast<std::size_t>(std::ceil(length / max_step - 1e-12));
  m = std::max<std::size_t>(m, 2);
  if (m % 2 != 0) ++m;
  return m;
}

}  // namespace

InstantaneousTrajectory evolve_instantaneous(const DensityMatrix& rho_i,
                                             const ReservoirSpec& r,
                                             const InteractionSpec& spec,
                                             const std::vector<double>& times,
                                             const InstantaneousOptions& opts) {
  const std::size_t d_s = rho_i.dim();
  const std::size_t d_r = r.dim();
  if (spec.system_dim() != d_s || spec.reservoir_dim() != d_r) {
    throw DimensionError("evolve_instantaneous: interaction does not match system/reservoir");
  }
  if (!(opts.max_quadrature_step > 0.0)) {
    throw DomainError("evolve_instantaneous: max_quadrature_step must be positive");
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < 0.0 || (i > 0 && times[i] < times[i - 1])) {
      throw DomainError("evolve_instantaneous: times must be non-decreasing and >= 0");
    }
  }

  const HermitianOperator k = spec.coupling();
  const HermitianOperator h = gibbs::total_hamiltonian(k, r);
  const HermitianOperator phi = heat_flux_observable(k, r);
  const EigenDecomposition eig = qmat::hermitian_eig(h);
  const ComplexMatrix& w = eig.vectors;

  const DensityMatrix omega_i = qmat::tensor(rho_i, r.gibbs());
  const ComplexMatrix omega_eig = w.adjoint() * omega_i.matrix() * w;
  const ComplexMatrix phi_eig = w.adjoint() * phi.matrix() * w;
  // f(s) = tr(omega(s) Phi) = sum_jk omega_jk p_j conj(p_k) Phi_kj
  const ComplexMatrix flux_kernel = omega_eig.cwiseProduct(phi_eig.transpose());
  auto flux_at = [&](double s) {
    const Eigen::VectorXcd p = phases(eig.values, s);
    return (p.transpose() * flux_kernel * p.conjugate()).value().real();
  };

  const double s_i = entropy::von_neumann_entropy(rho_i);
  const double e_res_i = r.mean_energy();
  const double e_k_i = omega_i.expect(k);
  const double e_tot_i = omega_i.expect(h);
  const qmat::RealVector spec_i = qmat::eigenvalues(omega_i.hermitian());

  InstantaneousTrajectory traj;
  traj.h_norm = qmat::max_abs(h.matrix());
  double t_prev = 0.0;
  double flux_integral = 0.0;
  for (double t : times) {
    if (t > t_prev) {
      const std::size_t m = even_intervals(t - t_prev, opts.max_quadrature_step);
      const double step = (t - t_prev) / static_cast<double>(m);
      std::vector<double> f(m + 1);
      for (std::size_t j = 0; j <= m; ++j) f[j] = flux_at(t_prev + step * static_cast<double>(j));
      flux_integral += quadrature::simpson(f, step);
      t_prev = t;
    }

    const ComplexMatrix omega_t =
        w * phase_conjugate(omega_eig, phases(eig.values, t)) * w.adjoint();
    const DensityMatrix omega(HermitianOperator(omega_t / omega_t.trace().real()));
    DensityMatrix rho_t = qmat::partial_trace(omega, d_s, d_r, qmat::Keep::System);
    const DensityMatrix nu_t = qmat::partial_trace(omega, d_s, d_r, qmat::Keep::Reservoir);

    TrajectorySample sample;
    sample.t = t;
    sample.dq_reservoir = nu_t.expect(r.hamiltonian()) - e_res_i;
    sample.dq_coupling = e_k_i - omega.expect(k);
    sample.dq_flux = -flux_integral;
    sample.energy_drift = std::abs(omega.expect(h) - e_tot_i);
    sample.spectrum_drift =
        (qmat::eigenvalues(omega.hermitian()) - spec_i).cwiseAbs().maxCoeff();
    sample.ledger.beta = r.beta();
    sample.ledger.delta_q = sample.dq_reservoir;
    sample.ledger.delta_s = s_i - entropy::von_neumann_entropy(rho_t);
    sample.ledger.sigma =
        entropy::relative_entropy(omega, qmat::tensor(rho_t, r.gibbs()));
    sample.rho_k = std::move(rho_t);

    traj.max_ab_mismatch =
        std::max(traj.max_ab_mismatch, std::abs(sample.dq_reservoir - sample.dq_coupling));
    traj.max_ac_mismatch =
        std::max(traj.max_ac_mismatch, std::abs(sample.dq_reservoir - sample.dq_flux));
    traj.max_energy_drift = std::max(traj.max_energy_drift, sample.energy_drift);
    traj.max_spectrum_drift = std::max(traj.max_spectrum_drift, sample.spectrum_drift);
    traj.samples.push_back(std::move(sample));
  }

  if (!traj.samples.empty()) {
    const TrajectorySample& last = traj.samples.back();
    for (const TrajectorySample& s : traj.samples) {
      if (s.t >= 0.9 * last.t) {
        traj.tail_stability = std::max(
            traj.tail_stability,
            qmat::trace_norm(s.rho_k.hermitian() - last.rho_k.hermitian()));
      }
    }
  }
  return traj;
}

namespace {

ComplexMatrix midpoint_step(const HermitianOperator& h_mid, double dt) {
  const ComplexMatrix& m = h_mid.matrix();
  if (m.imag().cwiseAbs().maxCoeff() == 0.0) {
    // Real symmetric H: e^{-i dt H} = Q cos(dt L) Q^T - i Q sin(dt L) Q^T.
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m.real());
    if (eig.info() != Eigen::Success) throw ConvergenceError("midpoint_step: eigensolver failed");
    const Eigen::MatrixXd& q = eig.eigenvectors();
    const Eigen::ArrayXd angle = -dt * eig.eigenvalues().array();
    ComplexMatrix u(m.rows(), m.cols());
    u.real() = q * angle.cos().matrix().asDiagonal() * q.transpose();
    u.imag() = q * angle.sin().matrix().asDiagonal() * q.transpose();
    return u;
  }
  const EigenDecomposition eig = qmat::hermitian_eig(h_mid);
  return eig.vectors * phases(eig.values, dt).asDiagonal() * eig.vectors.adjoint();
}

// One Newton-Schulz iteration towards the unitary polar factor.
void reunitarize(ComplexMatrix& u) {
  const ComplexMatrix gram = u.adjoint() * u;
  u = u * (1.5 * ComplexMatrix::Identity(u.rows(), u.cols()) - 0.5 * gram);
}

void check_protocol(const SwitchingProtocol& p, const ReservoirSpec& r, double T,
                    std::size_t steps, const char* what) {
  if (!(T > 0.0)) throw DomainError(std::string(what) + ": T must be positive");
  if (steps < 2) throw DomainError(std::string(what) + ": need at least 2 steps");
  if (p.d_r != r.dim()) throw DimensionError(std::string(what) + ": reservoir dimension");
}

}  // namespace

UnitaryOperator propagator_timedep(const SwitchingProtocol& protocol, const ReservoirSpec& r,
                                   double T, std::size_t steps) {
  check_protocol(protocol, r, T, steps, "propagator_timedep");
  const double dt = T / static_cast<double>(steps);
  ComplexMatrix u = ComplexMatrix::Identity(protocol.dim(), protocol.dim());
  for (std::size_t s = 0; s < steps; ++s) {
    const double t_mid = (static_cast<double>(s) + 0.5) * dt;
    const HermitianOperator h = gibbs::total_hamiltonian(protocol.k(t_mid / T), r);
    u = midpoint_step(h, dt) * u;
    reunitarize(u);
  }
  return UnitaryOperator(std::move(u));
}

UnitaryOperator interaction_picture(const UnitaryOperator& u, const ReservoirSpec& r,
                                    double T) {
  const std::size_t d_s = u.dim() / r.dim();
  const HermitianOperator h_r_full =
      qmat::tensor(HermitianOperator::identity(d_s), r.hamiltonian());
  return qmat::unitary_exp(h_r_full, -T) * u;
}

StepHalvingStudy step_halving_study(const SwitchingProtocol& protocol,
                                    const ReservoirSpec& r, double T, std::size_t steps,
                                    std::size_t levels) {
  if (levels < 3) throw DomainError("step_halving_study: need >= 3 levels");
  StepHalvingStudy study;
  std::vector<UnitaryOperator> us;
  std::size_t n = steps;
  for (std::size_t l = 0; l < levels; ++l, n *= 2) {
    study.steps.push_back(n);
    us.push_back(propagator_timedep(protocol, r, T, n));
  }
  for (std::size_t l = 0; l + 1 < us.size(); ++l) {
    study.differences.push_back(qmat::max_abs(us[l].matrix() - us[l + 1].matrix()));
  }
  for (std::size_t l = 0; l + 1 < study.differences.size(); ++l) {
    study.ratios.push_back(study.differences[l] / study.differences[l + 1]);
  }
  const double last = study.ratios.back();
  study.order_two = last >= 3.0 && last <= 5.0;
  if (!study.order_two) {
    std::ostringstream os;
    os << "step halving ratio " << last << " outside [3, 5]";
    study.warning = os.str();
  }
  return study;
}

namespace {

struct AdiabaticRun {
  DensityMatrix omega_t;
  double power_integral = 0.0;
};

AdiabaticRun run_adiabatic(const SwitchingProtocol& protocol, const ReservoirSpec& r,
                           const DensityMatrix& omega_i, double T, std::size_t steps) {
  const double dt = T / static_cast<double>(steps);
  ComplexMatrix omega = omega_i.matrix();
  std::vector<double> power(steps + 1);
  auto power_at = [&](const ComplexMatrix& state, double t) {
    const HermitianOperator p = protocol.dk(t / T);
    return (state.array() * p.matrix().array().conjugate()).sum().real() / T;
  };
  for (std::size_t s = 0; s < steps; ++s) {
    power[s] = power_at(omega, static_cast<double>(s) * dt);
    const double t_mid = (static_cast<double>(s) + 0.5) * dt;
    const ComplexMatrix v =
        midpoint_step(gibbs::total_hamiltonian(protocol.k(t_mid / T), r), dt);
    const ComplexMatrix half = v * omega;
    ComplexMatrix next(omega.rows(), omega.cols());
    next.triangularView<Eigen::Lower>() = half * v.adjoint();
    omega = next.selfadjointView<Eigen::Lower>();
  }
  power[steps] = power_at(omega, T);
  return {DensityMatrix::normalized(omega), quadrature::simpson(power, dt)};
}

std::size_t choose_steps(double T, const AdiabaticOptions& opts) {
  if (opts.steps != 0) {
    if (opts.steps % 2 != 0) throw DomainError("evolve_adiabatic: steps must be even");
    return opts.steps;
  }
  if (!(opts.max_dt > 0.0)) throw DomainError("evolve_adiabatic: max_dt must be positive");
  auto n = static_cast<std::size_t>(std::ceil(T / opts.max_dt - 1e-12));
  n = std::max<std::size_t>(n, 4);
  return (n + 3) / 4 * 4;
}

}  // namespace

AdiabaticResult evolve_adiabatic(const SwitchingProtocol& protocol, const ReservoirSpec& r,
                                 const DensityMatrix& rho_i, double T,
                                 const AdiabaticOptions& opts) {
  std::size_t steps = choose_steps(T, opts);
  check_protocol(protocol, r, T, steps, "evolve_adiabatic");
  if (rho_i.dim() != protocol.d_s) throw DimensionError("evolve_adiabatic: system dimension");
  if (opts.target_error < 0.0) throw DomainError("evolve_adiabatic: negative target_error");
  const std::size_t d_s = protocol.d_s;
  const std::size_t d_r = protocol.d_r;

  const DensityMatrix omega_i = qmat::tensor(rho_i, r.gibbs());
  const HermitianOperator k0 = protocol.k(0.0);
  const HermitianOperator k1 = protocol.k(1.0);

  auto ledger_of = [&](const DensityMatrix& omega_t, DensityMatrix* rho_out) {
    DensityMatrix rho_t = qmat::partial_trace(omega_t, d_s, d_r, qmat::Keep::System);
    const DensityMatrix nu_t = qmat::partial_trace(omega_t, d_s, d_r, qmat::Keep::Reservoir);
    ProcessLedger l;
    l.beta = r.beta();
    l.delta_s = entropy::von_neumann_entropy(rho_i) - entropy::von_neumann_entropy(rho_t);
    l.delta_q = nu_t.expect(r.hamiltonian()) - r.mean_energy();
    l.sigma = entropy::relative_entropy(omega_t, qmat::tensor(rho_t, r.gibbs()));
    if (rho_out != nullptr) *rho_out = std::move(rho_t);
    return l;
  };
  auto first_law = [&](const AdiabaticRun& run, const ProcessLedger& l) {
    return std::abs(l.delta_q + run.omega_t.expect(k1) - omega_i.expect(k0) -
                    run.power_integral);
  };

  AdiabaticResult res;
  res.T = T;
  AdiabaticRun fine = run_adiabatic(protocol, r, omega_i, T, steps);
  res.ledger = ledger_of(fine.omega_t, &res.rho_t);
  res.first_law_residual = first_law(fine, res.ledger);
  res.sigma_halving_error = std::numeric_limits<double>::quiet_NaN();
  res.delta_q_halving_error = std::numeric_limits<double>::quiet_NaN();

  const bool refine = opts.target_error > 0.0;
  if ((opts.halving_check || refine) && steps % 4 == 0) {
    std::size_t coarse_steps = steps / 2;
    ProcessLedger coarse =
        ledger_of(run_adiabatic(protocol, r, omega_i, T, coarse_steps).omega_t, nullptr);
    for (;;) {
      // Richardson estimate of the error at `steps` for an order-two scheme.
      const double ratio = static_cast<double>(steps) / static_cast<double>(coarse_steps);
      const double denom = ratio * ratio - 1.0;
      res.sigma_halving_error = std::abs(coarse.sigma - res.ledger.sigma) / denom;
      res.delta_q_halving_error = std::abs(coarse.delta_q - res.ledger.delta_q) / denom;
      const double estimate = std::max({res.sigma_halving_error, res.delta_q_halving_error,
                                        res.first_law_residual});
      if (!refine || estimate <= opts.target_error) break;
      // Jump to the step count the n^-2 error model predicts, with 10% margin.
      const double factor = std::max(1.5, 1.1 * std::sqrt(estimate / opts.target_error));
      const auto wanted = static_cast<std::size_t>(std::ceil(static_cast<double>(steps) * factor));
      const std::size_t next = std::min(opts.max_steps / 4 * 4, (wanted + 3) / 4 * 4);
      if (next <= steps) break;
      coarse = res.ledger;
      coarse_steps = steps;
      steps = next;
      fine = run_adiabatic(protocol, r, omega_i, T, steps);
      res.ledger = ledger_of(fine.omega_t, &res.rho_t);
      res.first_law_residual = first_law(fine, res.ledger);
    }
  }
  res.steps = steps;
  res.power_integral = fine.power_integral;
  const HermitianOperator k0_expected = qmat::tensor(
      qmat::matrix_log(rho_i.hermitian()) * (-1.0 / r.beta()), HermitianOperator::identity(d_r));
  res.boundary_mismatch = qmat::max_abs(k0.matrix() - k0_expected.matrix());
  return res;
}

SweepTable adiabatic_sweep(const SwitchingProtocol& protocol, const ReservoirSpec& r,
                           const DensityMatrix& rho_i, const std::vector<double>& t_list,
                           const AdiabaticOptions& opts, bool parallel) {
  for (std::size_t i = 1; i < t_list.size(); ++i) {
    if (!(t_list[i] > t_list[i - 1])) {
      throw DomainError("adiabatic_sweep: T_list must be strictly increasing");
    }
  }
  std::vector<AdiabaticResult> results;
  if (parallel && t_list.size() > 1) {
    std::vector<std::future<AdiabaticResult>> jobs;
    for (double T : t_list) {
      jobs.push_back(std::async(std::launch::async, [&, T] {
        return evolve_adiabatic(protocol, r, rho_i, T, opts);
      }));
    }
    for (auto& j : jobs) results.push_back(j.get());
  } else {
    for (double T : t_list) results.push_back(evolve_adiabatic(protocol, r, rho_i, T, opts));
  }

  SweepTable table;
  for (const AdiabaticResult& a : results) {
    SweepRow row;
    row.T = a.T;
    row.delta_s = a.ledger.delta_s;
    row.delta_q = a.ledger.delta_q;
    row.sigma = a.ledger.sigma;
    row.beta_dq_minus_ds = a.ledger.beta * a.ledger.delta_q - a.ledger.delta_s;
    row.balance_residual = a.ledger.balance_residual();
    row.first_law_residual = a.first_law_residual;
    row.sigma_halving_error = a.sigma_halving_error;
    row.steps = a.steps;
    table.rows.push_back(row);
  }
  table.gibbs_prediction = r.beta() * gibbs::thermodynamic_integration(protocol, r, 16);

  table.sigma_strictly_decreasing = !table.rows.empty();
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    if (!(table.rows[i].sigma < table.rows[i - 1].sigma)) table.sigma_strictly_decreasing = false;
  }

  const double nan = std::numeric_limits<double>::quiet_NaN();
  table.power_law_exponent = nan;
  table.power_law_prefactor = nan;
  bool positive = table.rows.size() >= 2;
  for (const SweepRow& row : table.rows) positive = positive && row.sigma > 0.0;
  if (positive) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(table.rows.size());
    for (const SweepRow& row : table.rows) {
      const double x = std::log(row.T);
      const double y = std::log(row.sigma);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    table.power_law_exponent = slope;
    table.power_law_prefactor = std::exp((sy - slope * sx) / n);
  }
  return table;
}

}  // namespace landauer::dynamics
