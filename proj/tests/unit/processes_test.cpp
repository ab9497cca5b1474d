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
#include <numbers>

#include <gtest/gtest.h>

#include "landauer/harness/models.hpp"
#include "oracles.hpp"

namespace landauer::processes {
namespace {

using qmat::ComplexMatrix;
using qmat::Rng;

ReservoirSpec two_level(double beta = 1.0) {
  return ReservoirSpec(HermitianOperator::diagonal({0.0, 1.0}), beta);
}

ReservoirSpec random_reservoir(std::size_t d, Rng& rng) {
  return ReservoirSpec(qmat::random_hermitian(d, rng), 0.9);
}

TEST(ApplyProcess, IdentityIsFree) {
  Rng rng(1);
  const auto rho = qmat::random_density(3, rng);
  const auto out = apply_process(rho, random_reservoir(4, rng), qmat::UnitaryOperator::identity(12));
  EXPECT_NEAR(out.ledger.delta_s, 0.0, 1e-13);
  EXPECT_NEAR(out.ledger.delta_q, 0.0, 1e-13);
  EXPECT_NEAR(out.ledger.sigma, 0.0, 1e-12);
}

TEST(ApplyProcess, LocalUnitaryIsFree) {
  Rng rng(2);
  const auto rho = qmat::random_density(3, rng);
  const auto u = qmat::tensor(qmat::haar_unitary(3, rng), qmat::UnitaryOperator::identity(2));
  const auto out = apply_process(rho, random_reservoir(2, rng), u);
  EXPECT_NEAR(out.ledger.delta_s, 0.0, 1e-13);
  EXPECT_NEAR(out.ledger.delta_q, 0.0, 1e-13);
  EXPECT_NEAR(out.ledger.sigma, 0.0, 1e-12);
}

TEST(ApplyProcess, SwapOnTwoLevelReservoir) {
  const auto out = apply_process(DensityMatrix::maximally_mixed(2), two_level(), swap_unitary(2));
  const double expected = 0.5 - std::exp(-1.0) / (1.0 + std::exp(-1.0));
  EXPECT_NEAR(expected, 0.231058578630005, 1e-12);
  EXPECT_NEAR(out.ledger.delta_q, expected, 1e-14);
}

TEST(ApplyProcess, MatchesOracleLedgerAndBalances) {
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    const auto inst = harness::random_process_instance(rng);
    const auto out = apply_process(inst.rho_i, inst.reservoir, inst.u);
    const auto d_s = inst.rho_i.dim();
    const auto d_r = inst.reservoir.dim();
    const ComplexMatrix omega = inst.u.matrix() *
                                oracle::kron(inst.rho_i.matrix(), inst.reservoir.gibbs().matrix()) *
                                inst.u.matrix().adjoint();
    const ComplexMatrix rho_u = oracle::partial_trace(omega, d_s, d_r, true);
    const ComplexMatrix nu_u = oracle::partial_trace(omega, d_s, d_r, false);
    EXPECT_LE(oracle::max_abs(out.rho_u.matrix() - rho_u), 1e-13);
    const double ds = oracle::entropy(inst.rho_i.matrix()) - oracle::entropy(rho_u);
    const double dq =
        ((nu_u - inst.reservoir.gibbs().matrix()) * inst.reservoir.hamiltonian().matrix())
            .trace()
            .real();
    EXPECT_NEAR(out.ledger.delta_s, ds, 1e-10);
    EXPECT_NEAR(out.ledger.delta_q, dq, 1e-10);
    EXPECT_LE(out.ledger.relative_balance_residual(), 1e-9);
    EXPECT_GE(out.ledger.sigma, 0.0);
  }
}

TEST(Sandwich, IdentityProcessHolds) {
  Rng rng(4);
  const auto rho = qmat::random_density(2, rng);
  EXPECT_TRUE(remark1_sandwich(rho, two_level(), qmat::UnitaryOperator::identity(4)));
}

TEST(Sandwich, HoldsForMaximallyMixedSystem) {
  Rng rng(5);
  const auto rho = DensityMatrix::maximally_mixed(2);
  for (int k = 0; k < 500; ++k) {
    const auto r = random_reservoir(2, rng);
    EXPECT_TRUE(remark1_sandwich(rho, r, qmat::haar_unitary(4, rng)));
  }
}

// A swap hands the system the reservoir's Gibbs state, which need not lie
// within a factor e^{beta l} of a near-pure rho_i.
TEST(Sandwich, SwapWithNearPureSystemBreaksRhoIForm) {
  const auto rho = DensityMatrix::diagonal({0.999, 0.001});
  const auto r = two_level();
  const auto u = swap_unitary(2);
  EXPECT_FALSE(remark1_sandwich(rho, r, u));
  const auto out = apply_process(rho, r, u);
  const auto m = sandwich_margins(rho, r, out.rho_u);
  EXPECT_NEAR(m.upper, std::exp(1.0) * 0.001 - std::exp(-1.0) / (1.0 + std::exp(-1.0)), 1e-12);
  EXPECT_TRUE(channel_sandwich_margins(rho, r, u, out.rho_u).holds());
}

TEST(Sandwich, ChannelFormHoldsOnRandomInstances) {
  Rng rng(6);
  for (int k = 0; k < 300; ++k) {
    const auto inst = harness::random_process_instance(rng);
    const auto out = apply_process(inst.rho_i, inst.reservoir, inst.u);
    EXPECT_TRUE(channel_sandwich_margins(inst.rho_i, inst.reservoir, inst.u, out.rho_u).holds());
    EXPECT_TRUE(qmat::is_faithful(out.rho_u));
  }
}

TEST(Sandwich, ChannelFormReducesToRhoIFormForMaximallyMixed) {
  Rng rng(7);
  const auto rho = DensityMatrix::maximally_mixed(3);
  const auto r = random_reservoir(2, rng);
  const auto u = qmat::haar_unitary(6, rng);
  const auto out = apply_process(rho, r, u);
  const auto a = sandwich_margins(rho, r, out.rho_u);
  const auto b = channel_sandwich_margins(rho, r, u, out.rho_u);
  EXPECT_NEAR(a.lower, b.lower, 1e-14);
  EXPECT_NEAR(a.upper, b.upper, 1e-14);
}

TEST(AveragedChannel, MatchesOracle) {
  Rng rng(8);
  const auto x = qmat::random_density(2, rng);
  const auto u = qmat::haar_unitary(6, rng);
  const ComplexMatrix joint = oracle::kron(x.matrix(), ComplexMatrix::Identity(3, 3) / 3.0);
  const ComplexMatrix ref =
      oracle::partial_trace(u.matrix() * joint * u.matrix().adjoint(), 2, 3, true);
  EXPECT_LE(oracle::max_abs(averaged_channel(x, 3, u).matrix() - ref), 1e-14);
}

TEST(Flip, Examples) {
  Rng rng(9);
  const auto rho = qmat::random_density(3, rng);
  const auto same = flip_process(rho, rho);
  EXPECT_NEAR(same.ledger.sigma, 0.0, 1e-12);
  EXPECT_NEAR(same.ledger.delta_q, same.ledger.delta_s, 1e-12);

  const auto half = DensityMatrix::maximally_mixed(2);
  const auto target = DensityMatrix::diagonal({0.75, 0.25});
  const auto f = flip_process(half, target);
  EXPECT_NEAR(f.ledger.sigma, 0.143841036225890, 1e-12);
  EXPECT_LE(oracle::max_abs(f.nu_u.matrix() - half.matrix()), 1e-15);
  EXPECT_LE(oracle::max_abs(f.rho_u.matrix() - target.matrix()), 1e-15);
}

TEST(Flip, LedgerAgainstRelativeEntropy) {
  Rng rng(10);
  for (int k = 0; k < 30; ++k) {
    const auto a = qmat::random_density(3, rng);
    const auto b = qmat::random_density(3, rng);
    const auto f = flip_process(a, b);
    EXPECT_NEAR(f.ledger.beta * f.ledger.delta_q - f.ledger.delta_s,
                oracle::relative_entropy(a.matrix(), b.matrix()), 1e-9);
    EXPECT_LE(oracle::max_abs(f.nu_u.matrix() - a.matrix()), 1e-12);
    EXPECT_LE(entropy::well_floor(f.ledger.delta_q, f.reservoir.hamiltonian()),
              f.ledger.sigma + 1e-12);
  }
}

TEST(Flip, RejectsNonFaithfulTarget) {
  EXPECT_THROW(flip_process(DensityMatrix::maximally_mixed(2), DensityMatrix::pure(2, 0)),
               DomainError);
}

TEST(Staged, ConstantPathIsFree) {
  Rng rng(11);
  const auto rho = qmat::random_density(3, rng);
  for (std::size_t n : {1u, 7u, 100u}) {
    const auto out = staged_erasure(linear_path(rho, rho), n);
    EXPECT_NEAR(out.delta_q_n, 0.0, 1e-13);
    EXPECT_NEAR(out.ledger.sigma, 0.0, 1e-12);
  }
}

TEST(Staged, LinearQubitPathConvergesAtFirstOrder) {
  const auto path =
      linear_path(DensityMatrix::maximally_mixed(2), DensityMatrix::diagonal({0.75, 0.25}));
  const double ds = std::log(2.0) + 0.75 * std::log(0.75) + 0.25 * std::log(0.25);
  EXPECT_NEAR(ds, 0.130812035941137, 1e-12);
  double previous = std::numeric_limits<double>::infinity();
  std::vector<double> scaled;
  for (std::size_t n = 10; n <= 1280; n *= 2) {
    const auto out = staged_erasure(path, n);
    const double err = out.delta_q_n - ds;
    EXPECT_GT(err, 0.0);
    EXPECT_LT(err, previous);
    EXPECT_NEAR(out.ledger.balance_residual(), 0.0, 1e-12);
    previous = err;
    scaled.push_back(static_cast<double>(n) * (out.delta_q_n - staged_erasure(path, 2 * n).delta_q_n));
  }
  // N (dQ_N - dQ_2N) settles to half the first-order constant.
  EXPECT_NEAR(scaled.back() / scaled[scaled.size() - 2], 1.0, 1e-2);
}

TEST(Staged, SigmaIsSumOfStagewiseRelativeEntropies) {
  const auto a = DensityMatrix::diagonal({0.6, 0.3, 0.1});
  const auto b = DensityMatrix::diagonal({0.2, 0.5, 0.3});
  const auto path = linear_path(a, b);
  const std::size_t n = 5;
  double sigma = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    const double s = static_cast<double>(k - 1) / n;
    const double t = static_cast<double>(k) / n;
    sigma += oracle::relative_entropy(path(s).matrix(), path(t).matrix());
  }
  EXPECT_NEAR(staged_erasure(path, n).ledger.sigma, sigma, 1e-12);
}

TEST(Staged, ClosedLoopHeatVanishes) {
  const StatePath loop = [](double t) {
    const double x = 0.3 * std::sin(std::numbers::pi * t);
    return DensityMatrix::diagonal({0.5 + x, 0.5 - x});
  };
  const double q100 = staged_erasure(loop, 100).delta_q_n;
  const double q1000 = staged_erasure(loop, 1000).delta_q_n;
  EXPECT_GT(q100, 0.0);
  EXPECT_LT(q1000, q100);
  EXPECT_LT(q1000, 1e-3);
}

TEST(Staged, RejectsPathLeavingFaithfulStates) {
  const auto path = linear_path(DensityMatrix::maximally_mixed(2), DensityMatrix::pure(2, 0));
  EXPECT_THROW(staged_erasure(path, 4), DomainError);
  EXPECT_THROW(staged_erasure(path, 0), DomainError);
}

TEST(Saturation, ConstructedProcessesSaturate) {
  Rng rng(12);
  for (int k = 0; k < 50; ++k) {
    const auto inst = harness::random_process_instance(rng, true);
    const auto out = apply_process(inst.rho_i, inst.reservoir, inst.u);
    const auto rep = saturation_diagnostic(inst.rho_i, out.rho_u, inst.reservoir.gibbs(),
                                           out.nu_u, out.ledger, 1e-10);
    EXPECT_TRUE(rep.saturated);
    EXPECT_TRUE(rep.passed);
    EXPECT_LE(rep.spectrum_distance, 1e-10);
    EXPECT_LE(rep.reservoir_distance, 1e-10);
    EXPECT_LT(std::abs(out.ledger.delta_s), 1e-8);
    EXPECT_LT(std::abs(out.ledger.delta_q), 1e-8);
  }
}

TEST(Saturation, FlipWithDistinctTargetDoesNot) {
  const auto f =
      flip_process(DensityMatrix::maximally_mixed(2), DensityMatrix::diagonal({0.75, 0.25}));
  const auto rep = saturation_diagnostic(DensityMatrix::maximally_mixed(2), f.rho_u,
                                         f.reservoir.gibbs(), f.nu_u, f.ledger, 1e-10);
  EXPECT_FALSE(rep.saturated);
  EXPECT_GT(rep.sigma, 0.1);
}

TEST(EpsilonErasure, QubitTenthOfANat) {
  const auto out = epsilon_erasure(2, 0.1);
  EXPECT_GE(out.beta_delta_q, std::log(2.0) - 0.1);
  EXPECT_LE(out.beta_delta_q, std::log(2.0) + 0.1);
  EXPECT_LE(out.target_entropy, 0.05);
  EXPECT_GE(out.ledger.delta_s, std::log(2.0) - 0.1);
  EXPECT_NEAR(out.target_entropy, entropy::von_neumann_entropy(out.target), 1e-14);
}

TEST(EpsilonErasure, LooseEpsilonNeedsOneStage) {
  EXPECT_EQ(epsilon_erasure(3, std::log(3.0) - 1e-3).stages, 1u);
}

TEST(EpsilonErasure, RejectsOutOfRangeEpsilon) {
  EXPECT_THROW(epsilon_erasure(2, 0.0), DomainError);
  EXPECT_THROW(epsilon_erasure(2, 1.0), DomainError);
  EXPECT_THROW(epsilon_erasure(1, 0.1), DomainError);
}

}  // namespace
}  // namespace landauer::processes
