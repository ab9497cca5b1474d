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

#include "landauer/entropy.hpp"

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace landauer::entropy {
namespace {

using qmat::ComplexMatrix;
using qmat::Rng;

DensityMatrix bell_state() {
  ComplexMatrix psi = ComplexMatrix::Zero(4, 1);
  psi(0, 0) = psi(3, 0) = 1.0 / std::sqrt(2.0);
  return DensityMatrix(ComplexMatrix(psi * psi.adjoint()));
}

TEST(VonNeumann, Examples) {
  for (std::size_t d = 1; d <= 5; ++d) {
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed(d)),
                std::log(static_cast<double>(d)), 1e-14);
  }
  EXPECT_EQ(von_neumann_entropy(DensityMatrix::pure(3, 2)), 0.0);
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix::diagonal({0.75, 0.25})), 0.562335144618808,
              1e-12);
}

TEST(VonNeumann, MatchesGeneralEigensolverOracle) {
  Rng rng(1);
  for (int k = 0; k < 20; ++k) {
    const auto rho = qmat::random_density(5, rng);
    EXPECT_NEAR(von_neumann_entropy(rho), oracle::entropy(rho.matrix()), 1e-12);
  }
}

TEST(VonNeumann, UnitarilyInvariant) {
  Rng rng(2);
  for (int k = 0; k < 20; ++k) {
    const auto rho = qmat::random_density(4, rng);
    const auto u = qmat::haar_unitary(4, rng);
    EXPECT_LE(std::abs(von_neumann_entropy(rho) - von_neumann_entropy(qmat::conjugate(rho, u))),
              1e-10);
  }
}

TEST(RelativeEntropy, Examples) {
  Rng rng(3);
  const auto rho = qmat::random_density(3, rng);
  EXPECT_NEAR(relative_entropy(rho, rho), 0.0, 1e-13);
  EXPECT_NEAR(relative_entropy(DensityMatrix::maximally_mixed(2),
                               DensityMatrix::diagonal({0.25, 0.75})),
              0.5 * std::log(4.0 / 3.0), 1e-14);
  EXPECT_EQ(relative_entropy(DensityMatrix::diagonal({1, 0}), DensityMatrix::diagonal({0, 1})),
            std::numeric_limits<double>::infinity());
}

TEST(RelativeEntropy, PureFirstArgumentInsideSupportIsFinite) {
  const double s = relative_entropy(DensityMatrix::pure(2, 0), DensityMatrix::diagonal({0.5, 0.5}));
  EXPECT_NEAR(s, std::log(2.0), 1e-14);
}

TEST(RelativeEntropy, MatchesLogarithmOracle) {
  Rng rng(4);
  for (int k = 0; k < 20; ++k) {
    const auto a = qmat::random_density(4, rng);
    const auto b = qmat::random_density(4, rng);
    EXPECT_NEAR(relative_entropy(a, b), oracle::relative_entropy(a.matrix(), b.matrix()), 1e-10);
  }
}

TEST(RelativeEntropy, JointConvexity) {
  Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    const auto a1 = qmat::random_density(3, rng);
    const auto a2 = qmat::random_density(3, rng);
    const auto b1 = qmat::random_density(3, rng);
    const auto b2 = qmat::random_density(3, rng);
    const DensityMatrix a(ComplexMatrix(0.5 * (a1.matrix() + a2.matrix())));
    const DensityMatrix b(ComplexMatrix(0.5 * (b1.matrix() + b2.matrix())));
    EXPECT_LE(relative_entropy(a, b),
              0.5 * relative_entropy(a1, b1) + 0.5 * relative_entropy(a2, b2) + 1e-10);
  }
}

TEST(MutualInformation, Examples) {
  Rng rng(6);
  const auto product = qmat::tensor(qmat::random_density(2, rng), qmat::random_density(3, rng));
  EXPECT_NEAR(mutual_information(product, 2, 3), 0.0, 1e-12);
  EXPECT_NEAR(mutual_information(bell_state(), 2, 2), 2.0 * std::log(2.0), 1e-12);
  for (int k = 0; k < 50; ++k) {
    const auto omega = qmat::random_density(6, rng);
    const double i = mutual_information(omega, 3, 2);
    EXPECT_GE(i, -1e-10);
    EXPECT_NEAR(i, mutual_information_entropy_sum(omega, 3, 2), 1e-11);
  }
}

TEST(EntropyProduction, ProductWithEquilibriumIsZero) {
  Rng rng(7);
  const auto rho = qmat::random_density(2, rng);
  const auto nu = qmat::random_density(4, rng);
  EXPECT_NEAR(entropy_production(qmat::tensor(rho, nu), nu, 2, 4), 0.0, 1e-12);
}

TEST(EntropyProduction, BalanceOnRandomTwoQubitProcess) {
  Rng rng(8);
  for (int k = 0; k < 20; ++k) {
    const auto rho_i = qmat::random_density(2, rng);
    const HermitianOperator h_r = qmat::random_hermitian(2, rng);
    const double beta = 0.7;
    const DensityMatrix nu_i(ComplexMatrix(oracle::gibbs(h_r.matrix(), beta)));
    const auto u = qmat::haar_unitary(4, rng);
    const auto omega = qmat::conjugate(qmat::tensor(rho_i, nu_i), u);
    const auto rho_u = qmat::partial_trace(omega, 2, 2, qmat::Keep::System);
    const auto nu_u = qmat::partial_trace(omega, 2, 2, qmat::Keep::Reservoir);
    const double ds = oracle::entropy(rho_i.matrix()) - oracle::entropy(rho_u.matrix());
    const double dq = (nu_u.matrix() - nu_i.matrix()).cwiseProduct(h_r.matrix().transpose()).sum().real();
    EXPECT_NEAR(entropy_production(omega, nu_i, 2, 2), beta * dq - ds, 1e-9);
  }
}

TEST(ImprovedBound, Examples) {
  const HermitianOperator h_r = HermitianOperator::diagonal({0.0, 2.0});
  const double beta = 1.5;
  const double s0 = beta * beta * 4.0 / 8.0;
  EXPECT_EQ(improved_bound(0.0, beta, h_r).improved_lower_bound, 0.0);
  const auto at_s0 = improved_bound(s0, beta, h_r);
  EXPECT_TRUE(at_s0.feasible);
  EXPECT_NEAR(at_s0.improved_lower_bound, 2.0 * s0, 1e-14);
  EXPECT_NEAR(at_s0.delta_s_max, s0, 1e-15);
  EXPECT_NEAR(improved_bound(0.5 * s0, beta, h_r).improved_lower_bound / (0.5 * s0),
              1.0 + (1.0 - std::sqrt(0.5)) / (1.0 + std::sqrt(0.5)), 1e-12);
  EXPECT_FALSE(improved_bound(1.01 * s0, beta, h_r).feasible);
}

TEST(ImprovedBound, CancellationFreeNearZero) {
  const HermitianOperator h_r = HermitianOperator::diagonal({0.0, 1.0});
  const double ds = 1e-12;
  // 2 dS / (1 + sqrt(1 - dS/S0)) -> dS (1 + dS / (4 S0)) for small dS.
  EXPECT_NEAR(improved_bound(ds, 1.0, h_r).improved_lower_bound / ds, 1.0, 1e-10);
}

TEST(ImprovedBound, RejectsDegenerateInput) {
  EXPECT_THROW(improved_bound(0.1, 0.0, HermitianOperator::diagonal({0, 1})), DomainError);
  EXPECT_THROW(improved_bound(0.1, 1.0, HermitianOperator::identity(2)), DomainError);
}

TEST(WellFloor, Examples) {
  const HermitianOperator h_r = HermitianOperator::diagonal({-1.0, 0.5, 2.0});
  EXPECT_EQ(well_floor(0.0, h_r), 0.0);
  EXPECT_NEAR(well_floor(1.5, h_r), 0.5, 1e-15);
  EXPECT_THROW(well_floor(1.0, HermitianOperator::identity(2)), DomainError);
}

TEST(SpectralWindow, SpanAndMidpoint) {
  const auto w = spectral_window(HermitianOperator::diagonal({0.5, -1.0, 3.0}));
  EXPECT_DOUBLE_EQ(w.span(), 4.0);
  EXPECT_DOUBLE_EQ(w.midpoint(), 1.0);
}

TEST(PinskerFloor, MatchesTraceNorm) {
  const auto a = DensityMatrix::maximally_mixed(2);
  const auto b = DensityMatrix::diagonal({0.75, 0.25});
  EXPECT_NEAR(pinsker_floor(a, b), 0.125, 1e-15);
  EXPECT_LE(pinsker_floor(a, b), relative_entropy(a, b));
}

}  // namespace
}  // namespace landauer::entropy
