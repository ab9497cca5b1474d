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

#include "landauer/harness/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "landauer/dynamics.hpp"
#include "landauer/entropy.hpp"
#include "landauer/errors.hpp"
#include "landauer/gibbs.hpp"
#include "landauer/harness/models.hpp"
#include "landauer/interaction.hpp"
#include "landauer/processes.hpp"

namespace landauer::harness {

using qmat::DensityMatrix;
using qmat::HermitianOperator;
using Rel = Check::Relation;

const std::vector<ScenarioInfo>& list_scenarios() {
  static const std::vector<ScenarioInfo> catalogue = {
      {"example1", "swap with a reservoir whose Gibbs state is rho_f; sigma = S(rho_i|rho_f)"},
      {"example2-sweep", "staged erasure along a linear path; dQ_N converges to dS as 1/N"},
      {"remark2-bounds", "Haar-random processes against the Landauer, improved and Pinsker bounds"},
      {"remark3-epsilon", "near-pure erasure whose heat cost stays within epsilon of log d"},
      {"instantaneous-quench", "sudden coupling to a spin chain; three heat formulas compared"},
      {"adiabatic-sweep", "slow erasure protocol on a 6-qubit chain; sigma_T against T"},
      {"target-solver", "Newton solve for the system Hamiltonian with a prescribed marginal"},
      {"thermo-integration", "Gibbs-state work integral against the free-energy difference"},
      {"property-fuzz", "seeded random processes checked against every bound and identity"},
  };
  return catalogue;
}

namespace {

Table make_table(std::string name, std::vector<Column> columns) {
  Table t;
  t.name = std::move(name);
  t.columns = std::move(columns);
  return t;
}

double flag(bool b) { return b ? 1.0 : 0.0; }

void add_balance_check(RunReport& rep, const ScenarioConfig& c, double max_abs_residual) {
  rep.add_check("balance_residual", max_abs_residual, c.tolerance("balance_residual"));
}

CouplingKind coupling_kind(const ScenarioConfig& c) {
  return c.protocol.coupling == "exchange" ? CouplingKind::Exchange : CouplingKind::XX;
}

HermitianOperator qubit_field(const ScenarioConfig& c) {
  return HermitianOperator::diagonal({0.5 * c.system.field, -0.5 * c.system.field});
}

// ---------------------------------------------------------------- example1

void run_example1(const ScenarioConfig& c, RunReport& rep) {
  qmat::Rng rng(c.seed);
  const std::size_t d = c.system.d_s;
  Table t = make_table("flip", {{"instance"},
                                {"d_S"},
                                {"delta_S", true},
                                {"delta_Q"},
                                {"sigma", true},
                                {"relative_entropy", true},
                                {"sigma_error", true},
                                {"nu_error"},
                                {"balance_residual", true}});
  double sigma_err = 0.0;
  double nu_err = 0.0;
  double balance = 0.0;
  for (std::size_t k = 0; k <= c.protocol.instances; ++k) {
    // Row 0 is the configured pair; the rest are random faithful pairs.
    const DensityMatrix rho_i = k == 0 ? c.system.rho_i.build(d) : qmat::random_density(d, rng);
    const DensityMatrix rho_f = k == 0 ? c.system.rho_f.build(d) : qmat::random_density(d, rng);
    const processes::FlipOutcome out = processes::flip_process(rho_i, rho_f);
    const double rel = entropy::relative_entropy(rho_i, rho_f);
    const double se = std::abs(out.ledger.sigma - rel);
    const double ne = qmat::trace_norm(out.nu_u.hermitian() - rho_i.hermitian());
    const double br = out.ledger.balance_residual();
    sigma_err = std::max(sigma_err, se);
    nu_err = std::max(nu_err, ne);
    balance = std::max(balance, std::abs(br));
    t.add_row({static_cast<double>(k), static_cast<double>(d), out.ledger.delta_s,
               out.ledger.delta_q, out.ledger.sigma, rel, se, ne, br});
  }
  rep.tables.push_back(std::move(t));
  rep.add_check("sigma_equals_relative_entropy", sigma_err, c.tolerance("sigma_match"));
  rep.add_check("nu_u_equals_rho_i", nu_err, c.tolerance("nu_match"));
  add_balance_check(rep, c, balance);
}

// ---------------------------------------------------------- example2-sweep

void run_example2(const ScenarioConfig& c, RunReport& rep) {
  const std::size_t d = c.system.d_s;
  const DensityMatrix rho_i = c.system.rho_i.build(d);
  const DensityMatrix rho_f = c.system.rho_f.build(d);
  const processes::StatePath path = processes::linear_path(rho_i, rho_f);
  std::vector<std::size_t> ns = c.protocol.n_list;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

  Table t = make_table("staged", {{"N"},
                                  {"delta_Q_N"},
                                  {"delta_S", true},
                                  {"sigma", true},
                                  {"error", true},
                                  {"balance_residual", true}});
  std::vector<double> errors;
  double balance = 0.0;
  std::size_t landauer_violations = 0;
  for (std::size_t n : ns) {
    const processes::StagedOutcome out = processes::staged_erasure(path, n);
    const double err = out.delta_q_n - out.ledger.delta_s;
    if (err < 0.0) ++landauer_violations;
    errors.push_back(err);
    balance = std::max(balance, std::abs(out.ledger.balance_residual()));
    t.add_row({static_cast<double>(n), out.delta_q_n, out.ledger.delta_s, out.ledger.sigma, err,
               out.ledger.balance_residual()});
  }
  rep.tables.push_back(std::move(t));

  std::size_t increases = 0;
  for (std::size_t k = 1; k < errors.size(); ++k) {
    if (!(errors[k] < errors[k - 1])) ++increases;
  }
  // Ratios over every decade present in the grid.
  double ratio_lo = std::numeric_limits<double>::infinity();
  double ratio_hi = -std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < ns.size(); ++a) {
    for (std::size_t b = a + 1; b < ns.size(); ++b) {
      if (ns[b] != 10 * ns[a] || ns[a] < 10) continue;
      const double ratio = errors[a] / errors[b];
      ratio_lo = std::min(ratio_lo, ratio);
      ratio_hi = std::max(ratio_hi, ratio);
    }
  }
  rep.add_check("landauer_violations", static_cast<double>(landauer_violations), 0.0);
  rep.add_check("error_not_decreasing", static_cast<double>(increases), 0.0);
  if (std::isfinite(ratio_lo)) {
    rep.add_check("decade_ratio_min", ratio_lo, c.tolerance("ratio_min"), Rel::AtLeast);
    rep.add_check("decade_ratio_max", ratio_hi, c.tolerance("ratio_max"));
    rep.summary["decade_ratio_min"] = ratio_lo;
    rep.summary["decade_ratio_max"] = ratio_hi;
  }
  rep.add_check("final_error", errors.back(), c.tolerance("final_error"));
  add_balance_check(rep, c, balance);
}

// ------------------------------------------------- random process sweeps

struct InstanceMetrics {
  processes::ProcessLedger ledger;
  processes::SandwichMargins sandwich;          ///< against rho_i
  processes::SandwichMargins channel_sandwich;  ///< against Phi_U(rho_i)
  entropy::BalanceBound bound;
  double well = 0.0;
  double pinsker_joint = 0.0;
  double pinsker_reservoir = 0.0;
  double production_gap = 0.0;  ///< beta dQ - dS, unclamped
  processes::SaturationReport saturation;
};

InstanceMetrics evaluate(const ProcessInstance& inst) {
  InstanceMetrics m;
  const processes::ProcessOutcome out = processes::apply_process(inst.rho_i, inst.reservoir, inst.u);
  m.ledger = out.ledger;
  m.sandwich = processes::sandwich_margins(inst.rho_i, inst.reservoir, out.rho_u);
  m.channel_sandwich =
      processes::channel_sandwich_margins(inst.rho_i, inst.reservoir, inst.u, out.rho_u);
  m.bound = entropy::improved_bound(out.ledger.delta_s, inst.reservoir.beta(),
                                    inst.reservoir.hamiltonian());
  m.well = entropy::well_floor(out.ledger.delta_q, inst.reservoir.hamiltonian());
  m.pinsker_joint =
      entropy::pinsker_floor(out.omega_u, qmat::tensor(out.rho_u, inst.reservoir.gibbs()));
  m.pinsker_reservoir = entropy::pinsker_floor(out.nu_u, inst.reservoir.gibbs());
  m.production_gap = out.ledger.beta * out.ledger.delta_q - out.ledger.delta_s;
  m.saturation = processes::saturation_diagnostic(inst.rho_i, out.rho_u, inst.reservoir.gibbs(),
                                                  out.nu_u, out.ledger, 1e-10);
  return m;
}

struct Violations {
  std::size_t landauer = 0;
  std::size_t improved = 0;
  std::size_t infeasible = 0;
  std::size_t well = 0;
  std::size_t pinsker_joint = 0;
  std::size_t pinsker_reservoir = 0;
  std::size_t sandwich = 0;
  std::size_t literal_sandwich = 0;
  std::size_t negative_sigma = 0;
  double max_abs_residual = 0.0;
  double max_rel_residual = 0.0;

  void tally(const InstanceMetrics& m, double slack) {
    const auto& l = m.ledger;
    const double beta_dq = l.beta * l.delta_q;
    if (beta_dq < l.delta_s - slack) ++landauer;
    if (!m.bound.feasible) {
      ++infeasible;
    } else if (beta_dq < m.bound.improved_lower_bound - slack) {
      ++improved;
    }
    if (l.sigma < m.well - slack) ++well;
    if (l.sigma < m.pinsker_joint - slack) ++pinsker_joint;
    if (l.sigma < m.pinsker_reservoir - slack) ++pinsker_reservoir;
    if (!m.channel_sandwich.holds(slack)) ++sandwich;
    if (!m.sandwich.holds(slack)) ++literal_sandwich;
    if (m.production_gap < -slack) ++negative_sigma;
    max_abs_residual = std::max(max_abs_residual, std::abs(l.balance_residual()));
    max_rel_residual = std::max(max_rel_residual, l.relative_balance_residual());
  }
};

void add_bound_checks(RunReport& rep, const ScenarioConfig& c, const Violations& v) {
  rep.add_check("relative_balance", v.max_rel_residual, c.tolerance("relative_balance"));
  rep.add_check("landauer_violations", static_cast<double>(v.landauer), 0.0);
  rep.add_check("improved_bound_violations", static_cast<double>(v.improved), 0.0);
  rep.add_check("delta_s_above_s0", static_cast<double>(v.infeasible), 0.0);
  rep.add_check("well_floor_violations", static_cast<double>(v.well), 0.0);
  rep.add_check("pinsker_joint_violations", static_cast<double>(v.pinsker_joint), 0.0);
  rep.add_check("pinsker_reservoir_violations", static_cast<double>(v.pinsker_reservoir), 0.0);
}

std::vector<Column> instance_columns() {
  return {{"instance"},
          {"saturating"},
          {"d_S"},
          {"d_R"},
          {"beta"},
          {"delta_S", true},
          {"delta_Q"},
          {"sigma", true},
          {"beta_dQ_minus_dS", true},
          {"balance_residual", true},
          {"S0", true},
          {"improved_bound", true},
          {"well_floor", true},
          {"pinsker_joint", true},
          {"pinsker_reservoir", true},
          {"sandwich_lower"},
          {"sandwich_upper"},
          {"channel_sandwich_lower"},
          {"channel_sandwich_upper"},
          {"spectrum_distance"},
          {"bounds_ok"}};
}

std::vector<double> instance_row(std::size_t k, const ProcessInstance& inst,
                                 const InstanceMetrics& m, double slack) {
  const auto& l = m.ledger;
  Violations one;
  one.tally(m, slack);
  const bool ok = one.landauer + one.improved + one.infeasible + one.well + one.pinsker_joint +
                      one.pinsker_reservoir + one.sandwich + one.negative_sigma ==
                  0;
  return {static_cast<double>(k),
          flag(inst.saturating),
          static_cast<double>(inst.rho_i.dim()),
          static_cast<double>(inst.reservoir.dim()),
          l.beta,
          l.delta_s,
          l.delta_q,
          l.sigma,
          m.production_gap,
          l.balance_residual(),
          m.bound.delta_s_max,
          m.bound.improved_lower_bound,
          m.well,
          m.pinsker_joint,
          m.pinsker_reservoir,
          m.sandwich.lower,
          m.sandwich.upper,
          m.channel_sandwich.lower,
          m.channel_sandwich.upper,
          m.saturation.spectrum_distance,
          flag(ok)};
}

void run_remark2(const ScenarioConfig& c, RunReport& rep) {
  qmat::Rng rng(c.seed);
  const double slack = c.tolerance("bound_slack");
  Table t = make_table("bounds", instance_columns());
  Violations v;
  for (std::size_t k = 0; k < c.protocol.instances; ++k) {
    const ProcessInstance inst = random_process_instance(rng);
    const InstanceMetrics m = evaluate(inst);
    v.tally(m, slack);
    t.add_row(instance_row(k, inst, m, slack));
  }
  rep.tables.push_back(std::move(t));
  add_bound_checks(rep, c, v);
  add_balance_check(rep, c, v.max_abs_residual);
}

void run_fuzz(const ScenarioConfig& c, RunReport& rep) {
  qmat::Rng rng(c.seed);
  const double slack = c.tolerance("bound_slack");
  Table t = make_table("fuzz", instance_columns());
  Violations v;
  std::size_t saturated = 0;
  double saturated_spectrum = 0.0;
  double saturated_reservoir = 0.0;
  for (std::size_t k = 0; k < c.protocol.instances; ++k) {
    // Every tenth draw is a constructed zero-production process.
    const ProcessInstance inst = random_process_instance(rng, k % 10 == 9);
    const InstanceMetrics m = evaluate(inst);
    v.tally(m, slack);
    if (m.ledger.sigma < 1e-10) {
      ++saturated;
      saturated_spectrum = std::max(saturated_spectrum, m.saturation.spectrum_distance);
      saturated_reservoir = std::max(saturated_reservoir, m.saturation.reservoir_distance);
    }
    t.add_row(instance_row(k, inst, m, slack));
  }
  rep.tables.push_back(std::move(t));
  rep.add_check("instances", static_cast<double>(c.protocol.instances), 500.0, Rel::AtLeast);
  rep.add_check("negative_sigma", static_cast<double>(v.negative_sigma), 0.0);
  // The rho_i form of the sandwich is only a theorem for maximally mixed
  // rho_i; its violation count is reported, the channel form is checked.
  rep.add_check("channel_sandwich_violations", static_cast<double>(v.sandwich), 0.0);
  rep.summary["rho_i_sandwich_violations"] = static_cast<double>(v.literal_sandwich);
  add_bound_checks(rep, c, v);
  rep.add_check("saturated_spectrum_distance", saturated_spectrum,
                c.tolerance("saturation_spectrum"));
  rep.summary["saturated_instances"] = static_cast<double>(saturated);
  rep.summary["saturated_reservoir_distance"] = saturated_reservoir;
  add_balance_check(rep, c, v.max_abs_residual);
}

// ---------------------------------------------------------- remark3-epsilon

void run_remark3(const ScenarioConfig& c, RunReport& rep) {
  const std::size_t d = c.system.d_s;
  const double eps = c.protocol.epsilon;
  const processes::EpsilonErasureOutcome out = processes::epsilon_erasure(d, eps);
  const double log_d = std::log(static_cast<double>(d));

  Table attempts = make_table("attempts", {{"N"}, {"beta_dQ", true}, {"lower_target", true}});
  for (const auto& [n, bq] : out.attempts) {
    attempts.add_row({static_cast<double>(n), bq, log_d - eps});
  }
  Table result = make_table("epsilon", {{"d"},
                                        {"epsilon", true},
                                        {"delta"},
                                        {"N"},
                                        {"target_entropy", true},
                                        {"distance_to_pure"},
                                        {"beta_dQ", true},
                                        {"delta_S", true},
                                        {"sigma", true},
                                        {"balance_residual", true}});
  result.add_row({static_cast<double>(d), eps, out.delta, static_cast<double>(out.stages),
                  out.target_entropy, out.distance_to_pure, out.beta_delta_q, out.ledger.delta_s,
                  out.ledger.sigma, out.ledger.balance_residual()});
  rep.tables.push_back(std::move(result));
  rep.tables.push_back(std::move(attempts));
  rep.add_check("beta_dq_above_log_d_minus_eps", out.beta_delta_q, log_d - eps, Rel::AtLeast);
  rep.add_check("target_entropy", out.target_entropy, c.tolerance("target_entropy"));
  add_balance_check(rep, c, std::abs(out.ledger.balance_residual()));
}

// ------------------------------------------------------ quench tables

Table quench_table(const dynamics::InstantaneousTrajectory& traj, const DensityMatrix* target) {
  std::vector<Column> cols = {{"t"},
                              {"delta_S", true},
                              {"delta_Q"},
                              {"sigma", true},
                              {"beta_dQ_minus_dS", true},
                              {"dq_reservoir"},
                              {"dq_coupling"},
                              {"dq_flux"},
                              {"balance_residual", true},
                              {"energy_drift"}};
  if (target) cols.push_back({"distance_to_target"});
  Table t = make_table("quench", std::move(cols));
  for (const auto& s : traj.samples) {
    const auto& l = s.ledger;
    std::vector<double> row = {s.t,
                               l.delta_s,
                               l.delta_q,
                               l.sigma,
                               l.beta * l.delta_q - l.delta_s,
                               s.dq_reservoir,
                               s.dq_coupling,
                               s.dq_flux,
                               l.balance_residual(),
                               s.energy_drift};
    if (target) row.push_back(qmat::trace_norm(s.rho_k.hermitian() - target->hermitian()));
    t.add_row(std::move(row));
  }
  return t;
}

double max_balance(const dynamics::InstantaneousTrajectory& traj) {
  double m = 0.0;
  for (const auto& s : traj.samples) m = std::max(m, std::abs(s.ledger.balance_residual()));
  return m;
}

std::vector<double> sorted_times(std::vector<double> t) {
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t;
}

// ----------------------------------------------------- instantaneous-quench

void run_quench(const ScenarioConfig& c, RunReport& rep) {
  const ReservoirSpec r = c.reservoir.build();
  const DensityMatrix rho_i = c.system.rho_i.build(2);
  InteractionSpec spec{qubit_field(c),
                       qubit_chain_coupling(c.reservoir.n_qubits, c.protocol.coupling_site,
                                            coupling_kind(c)),
                       c.protocol.lambda};
  const auto traj = dynamics::evolve_instantaneous(rho_i, r, spec, sorted_times(c.protocol.t_list));
  rep.tables.push_back(quench_table(traj, nullptr));
  rep.add_check("dq_reservoir_vs_coupling", traj.max_ab_mismatch, c.tolerance("ab_mismatch"));
  rep.add_check("dq_reservoir_vs_flux", traj.max_ac_mismatch, c.tolerance("ac_mismatch"));
  rep.add_check("energy_conservation", traj.max_energy_drift, c.tolerance("energy_drift"));
  rep.add_check("sigma_final_positive", traj.samples.back().ledger.sigma,
                c.tolerance("sigma_final_min"), Rel::Above);
  rep.summary["tail_stability"] = traj.tail_stability;
  rep.summary["min_level_spacing"] = min_level_spacing(r.hamiltonian());
  add_balance_check(rep, c, max_balance(traj));
}

// ---------------------------------------------------------- adiabatic-sweep

SwitchingProtocol bundled_erasure(const ScenarioConfig& c, const DensityMatrix& rho_i,
                                  const DensityMatrix& rho_f, double beta) {
  const HermitianOperator v =
      qubit_chain_coupling(c.reservoir.n_qubits, c.protocol.coupling_site, coupling_kind(c));
  return erasure_protocol(rho_i, rho_f, v, c.protocol.lambda, beta);
}

void run_adiabatic(const ScenarioConfig& c, RunReport& rep) {
  const ReservoirSpec r = c.reservoir.build();
  const DensityMatrix rho_i = c.system.rho_i.build(2);
  const DensityMatrix rho_f = c.system.rho_f.build(2);
  const SwitchingProtocol protocol = bundled_erasure(c, rho_i, rho_f, r.beta());
  dynamics::AdiabaticOptions opts;
  opts.steps = c.protocol.steps;
  opts.max_dt = c.protocol.max_dt;
  opts.target_error = c.protocol.target_error;
  const dynamics::SweepTable sweep =
      dynamics::adiabatic_sweep(protocol, r, rho_i, sorted_times(c.protocol.t_list), opts);

  const double fl_tol = c.tolerance("first_law");
  const double bal_tol = c.tolerance("balance_residual");
  Table t = make_table("adiabatic", {{"T"},
                                     {"steps"},
                                     {"delta_S", true},
                                     {"delta_Q"},
                                     {"sigma", true},
                                     {"beta_dQ_minus_dS", true},
                                     {"balance_residual", true},
                                     {"first_law_residual"},
                                     {"sigma_halving_error", true},
                                     {"balance_ok"},
                                     {"first_law_ok"}});
  double balance = 0.0;
  double first_law = 0.0;
  double halving = 0.0;
  for (const auto& row : sweep.rows) {
    balance = std::max(balance, std::abs(row.balance_residual));
    first_law = std::max(first_law, row.first_law_residual);
    halving = std::max(halving, row.sigma_halving_error);
    t.add_row({row.T, static_cast<double>(row.steps), row.delta_s, row.delta_q, row.sigma,
               row.beta_dq_minus_ds, row.balance_residual, row.first_law_residual,
               row.sigma_halving_error, flag(std::abs(row.balance_residual) <= bal_tol),
               flag(row.first_law_residual <= fl_tol)});
  }
  rep.tables.push_back(std::move(t));

  std::size_t non_decreasing = 0;
  for (std::size_t k = 1; k < sweep.rows.size(); ++k) {
    if (!(sweep.rows[k].sigma < sweep.rows[k - 1].sigma)) ++non_decreasing;
  }
  rep.add_check("sigma_strictly_decreasing", static_cast<double>(non_decreasing), 0.0);
  if (sweep.rows.size() >= 2) {
    rep.add_check("sigma_last_over_first", sweep.rows.back().sigma / sweep.rows.front().sigma,
                  c.tolerance("sigma_ratio"));
  }
  rep.add_check("first_law_residual", first_law, fl_tol);
  rep.add_check("sigma_halving_error", halving, c.tolerance("halving_error"));
  rep.add_check("gibbs_prediction_zero", std::abs(sweep.gibbs_prediction),
                c.tolerance("gibbs_prediction"));
  add_balance_check(rep, c, balance);

  rep.summary["gibbs_prediction"] = sweep.gibbs_prediction;
  rep.summary["power_law_exponent"] = sweep.power_law_exponent;
  rep.summary["power_law_prefactor"] = sweep.power_law_prefactor;
  rep.summary["min_level_spacing"] = min_level_spacing(r.hamiltonian());

  // Propagator convergence at the shortest duration.
  const auto& first = sweep.rows.front();
  if (first.steps >= 8) {
    const dynamics::StepHalvingStudy study =
        dynamics::step_halving_study(protocol, r, first.T, 64, 3);
    if (!study.ratios.empty()) rep.summary["step_halving_ratio"] = study.ratios.back();
    if (!study.order_two) rep.warnings.push_back(study.warning);
  }
}

// ------------------------------------------------------------ target-solver

void run_target_solver(const ScenarioConfig& c, RunReport& rep) {
  const ReservoirSpec r = c.reservoir.build();
  const DensityMatrix rho_i = c.system.rho_i.build(2);
  const DensityMatrix rho_f = c.system.rho_f.build(2);
  const HermitianOperator v =
      qubit_chain_coupling(c.reservoir.n_qubits, c.protocol.coupling_site, coupling_kind(c));
  const double tol = c.tolerance("residual");

  InteractionSpec spec0{qubit_field(c), v, 0.0};
  const gibbs::TargetSolveResult zero = gibbs::solve_target_hamiltonian(rho_f, spec0, r, tol, 50);
  const HermitianOperator h0 = qmat::matrix_log(rho_f.hermitian()) * (-1.0 / r.beta());
  const HermitianOperator h0_found =
      zero.h + HermitianOperator::identity(2) * zero.trace_gauge;
  rep.add_check("lambda0_newton_steps", static_cast<double>(zero.iterations),
                c.tolerance("lambda0_steps"));
  rep.add_check("lambda0_matches_minus_log_rho_f",
                qmat::max_abs(h0_found.matrix() - h0.matrix()), c.tolerance("lambda0_match"));

  InteractionSpec spec{qubit_field(c), v, c.protocol.lambda};
  const gibbs::TargetSolveResult sol = gibbs::solve_target_hamiltonian(rho_f, spec, r, tol, 50);
  Table newton = make_table("newton", {{"iteration"}, {"residual"}});
  for (std::size_t k = 0; k < sol.residual_history.size(); ++k) {
    newton.add_row({static_cast<double>(k), sol.residual_history[k]});
  }
  rep.add_check("marginal_residual", sol.residual, tol);
  rep.add_check("newton_iterations", static_cast<double>(sol.iterations),
                c.tolerance("max_iterations"));
  rep.summary["jacobian_conditioning"] = sol.jacobian_conditioning;

  // Jacobian at the solution against central differences of the marginal.
  const std::vector<HermitianOperator> basis = gibbs::traceless_basis(2);
  const Eigen::MatrixXd jac = gibbs::marginal_jacobian(sol.h, spec, r);
  double fd_err = 0.0;
  const double step = 1e-5;
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const DensityMatrix plus = gibbs::gibbs_marginal(sol.h + basis[b] * step, spec, r);
    const DensityMatrix minus = gibbs::gibbs_marginal(sol.h - basis[b] * step, spec, r);
    const HermitianOperator diff((plus.matrix() - minus.matrix()) / (2.0 * step));
    for (std::size_t a = 0; a < basis.size(); ++a) {
      const double fd = basis[a].expectation(diff);
      fd_err = std::max(fd_err, std::abs(fd - jac(static_cast<Eigen::Index>(a),
                                                  static_cast<Eigen::Index>(b))));
    }
  }
  rep.add_check("jacobian_fd_relative", fd_err / jac.cwiseAbs().maxCoeff(),
                c.tolerance("jacobian_fd"));

  // Quadratic form tr(Y D[Y]) on random traceless directions.
  qmat::Rng rng(c.seed);
  double q_max = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < 100; ++k) {
    const HermitianOperator y0 = qmat::random_hermitian(2, rng);
    const HermitianOperator y = y0 - HermitianOperator::identity(2) * (y0.trace() / 2.0);
    const double norm2 = y.expectation(y);
    const HermitianOperator dy = gibbs::duhamel_derivative(sol.h, y, spec, r);
    q_max = std::max(q_max, y.expectation(dy) / norm2);
  }
  rep.add_check("quadratic_form_negative", q_max, 0.0, Rel::Below);

  const gibbs::RadiusEstimate radius =
      gibbs::estimate_convergence_radius(rho_f, spec, r, 0.05, 2.0);
  Table cont = make_table("continuation", {{"lambda"}, {"iterations"}});
  for (std::size_t k = 0; k < radius.lambdas.size(); ++k) {
    cont.add_row({radius.lambdas[k],
                  k < radius.iterations.size() ? static_cast<double>(radius.iterations[k]) : 0.0});
  }
  rep.summary["empirical_radius"] = radius.radius;
  rep.summary["radius_hit_ceiling"] = flag(radius.hit_ceiling);
  rep.add_check("empirical_radius_positive", radius.radius, 0.0, Rel::Above);

  // Quench with the solved coupling: the Gibbs state of K_lambda has rho_f as
  // its marginal, the product initial state relaxes toward it only locally.
  const HermitianOperator h_lambda = sol.h + HermitianOperator::identity(2) * sol.trace_gauge;
  InteractionSpec quench{h_lambda, v, c.protocol.lambda};
  const auto traj =
      dynamics::evolve_instantaneous(rho_i, r, quench, sorted_times(c.protocol.t_list));
  rep.add_check("dq_reservoir_vs_coupling", traj.max_ab_mismatch, c.tolerance("ab_mismatch"));
  add_balance_check(rep, c, max_balance(traj));

  rep.tables.push_back(std::move(newton));
  rep.tables.push_back(std::move(cont));
  rep.tables.push_back(quench_table(traj, &rho_f));
}

// -------------------------------------------------------- thermo-integration

SwitchingProtocol random_protocol(std::size_t d_r, qmat::Rng& rng) {
  const std::size_t dim = 2 * d_r;
  std::vector<ProtocolTerm> terms;
  terms.push_back({qmat::random_hermitian(dim, rng, 0.5), [](double) { return 1.0; },
                   [](double) { return 0.0; }});
  terms.push_back({qmat::random_hermitian(dim, rng, 0.5), [](double g) { return g; },
                   [](double) { return 1.0; }});
  terms.push_back({qmat::random_hermitian(dim, rng, 0.5),
                   [](double g) { return std::sin(std::numbers::pi * g); },
                   [](double g) { return std::numbers::pi * std::cos(std::numbers::pi * g); }});
  return combination_protocol(std::move(terms), 2, d_r);
}

void run_thermo(const ScenarioConfig& c, RunReport& rep) {
  const ReservoirSpec r = c.reservoir.build();
  const DensityMatrix rho_i = c.system.rho_i.build(2);
  const DensityMatrix rho_f = c.system.rho_f.build(2);
  qmat::Rng rng(c.seed);
  constexpr std::size_t kPanels = 16;

  Table ti = make_table("integration", {{"protocol"},
                                        {"work_integral"},
                                        {"free_energy_difference"},
                                        {"mismatch"}});
  double ti_err = 0.0;
  std::vector<SwitchingProtocol> protocols;
  for (std::size_t k = 0; k < c.protocol.instances; ++k) {
    protocols.push_back(random_protocol(r.dim(), rng));
    const double w = gibbs::thermodynamic_integration(protocols.back(), r, kPanels);
    const double f = gibbs::free_energy_difference(protocols.back(), r);
    ti_err = std::max(ti_err, std::abs(w - f));
    ti.add_row({static_cast<double>(k + 1), w, f, w - f});
  }
  const SwitchingProtocol erasure = bundled_erasure(c, rho_i, rho_f, r.beta());
  const double w0 = gibbs::thermodynamic_integration(erasure, r, kPanels);
  const double f0 = gibbs::free_energy_difference(erasure, r);
  ti.add_row({0.0, w0, f0, w0 - f0});
  rep.add_check("integral_matches_free_energy", ti_err, c.tolerance("ti_match"));
  rep.add_check("matched_endpoints_integral_zero", std::abs(w0), c.tolerance("endpoint_zero"));

  std::vector<double> grid;
  for (int k = 1; k < 20; ++k) grid.push_back(0.05 * k);
  Table kubo = make_table("kubo", {{"protocol"}, {"gamma"}, {"expectation"}, {"free_energy_slope"}});
  double kubo_err = 0.0;
  auto kubo_rows = [&](const SwitchingProtocol& p, double id) {
    const gibbs::KuboReport k = gibbs::kubo_identity_check(p, r, grid);
    kubo_err = std::max(kubo_err, k.max_mismatch);
    for (const auto& row : k.rows) kubo.add_row({id, row.gamma, row.expectation, row.free_energy_slope});
  };
  kubo_rows(erasure, 0.0);
  if (!protocols.empty()) kubo_rows(protocols.front(), 1.0);
  rep.add_check("kubo_pointwise", kubo_err, c.tolerance("kubo"));

  // Dynamical run of the erasure protocol for the balance bookkeeping.
  Table dyn = make_table("adiabatic", {{"T"},
                                       {"delta_S", true},
                                       {"delta_Q"},
                                       {"sigma", true},
                                       {"beta_dQ_minus_dS", true},
                                       {"balance_residual", true},
                                       {"first_law_residual"}});
  double balance = 0.0;
  double first_law = 0.0;
  dynamics::AdiabaticOptions opts;
  opts.steps = c.protocol.steps;
  opts.max_dt = c.protocol.max_dt;
  opts.target_error = c.protocol.target_error;
  opts.halving_check = false;
  for (double T : sorted_times(c.protocol.t_list)) {
    if (!(T > 0.0)) continue;
    const dynamics::AdiabaticResult res = dynamics::evolve_adiabatic(erasure, r, rho_i, T, opts);
    const auto& l = res.ledger;
    balance = std::max(balance, std::abs(l.balance_residual()));
    first_law = std::max(first_law, res.first_law_residual);
    dyn.add_row({T, l.delta_s, l.delta_q, l.sigma, l.beta * l.delta_q - l.delta_s,
                 l.balance_residual(), res.first_law_residual});
  }
  rep.add_check("first_law_residual", first_law, c.tolerance("first_law"));
  add_balance_check(rep, c, balance);
  rep.tables.push_back(std::move(ti));
  rep.tables.push_back(std::move(kubo));
  rep.tables.push_back(std::move(dyn));
}

}  // namespace

RunReport run_scenario(const ScenarioConfig& config) {
  RunReport rep;
  rep.scenario = config.scenario;
  rep.provenance = {config_hash(config), config.seed, version()};
  const std::string& s = config.scenario;
  if (s == "example1") {
    run_example1(config, rep);
  } else if (s == "example2-sweep") {
    run_example2(config, rep);
  } else if (s == "remark2-bounds") {
    run_remark2(config, rep);
  } else if (s == "remark3-epsilon") {
    run_remark3(config, rep);
  } else if (s == "instantaneous-quench") {
    run_quench(config, rep);
  } else if (s == "adiabatic-sweep") {
    run_adiabatic(config, rep);
  } else if (s == "target-solver") {
    run_target_solver(config, rep);
  } else if (s == "thermo-integration") {
    run_thermo(config, rep);
  } else if (s == "property-fuzz") {
    run_fuzz(config, rep);
  } else {
    throw ConfigError("unknown scenario '" + s + "'");
  }
  return rep;
}

}  // namespace landauer::harness
