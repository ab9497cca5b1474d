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

#include "landauer/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "landauer/errors.hpp"

namespace landauer::quadrature {
namespace {

TEST(GaussLegendre, IntegratesPolynomialsExactly) {
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto rule = gauss_legendre(n);
    ASSERT_EQ(rule.nodes.size(), n);
    for (std::size_t p = 0; p <= 2 * n - 1; ++p) {
      double q = 0.0;
      for (std::size_t i = 0; i < n; ++i) q += rule.weights[i] * std::pow(rule.nodes[i], p);
      const double exact = p % 2 ? 0.0 : 2.0 / static_cast<double>(p + 1);
      EXPECT_NEAR(q, exact, 1e-14) << "n=" << n << " p=" << p;
    }
  }
}

TEST(GaussLegendre, NodesAscendingAndSymmetric) {
  const auto rule = gauss_legendre(8);
  for (std::size_t i = 1; i < 8; ++i) EXPECT_LT(rule.nodes[i - 1], rule.nodes[i]);
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_NEAR(rule.nodes[i], -rule.nodes[7 - i], 1e-15);
    EXPECT_NEAR(rule.weights[i], rule.weights[7 - i], 1e-15);
  }
}

TEST(Simpson, ExactForCubics) {
  std::vector<double> f;
  const double h = 0.25;
  for (int i = 0; i <= 8; ++i) {
    const double x = i * h;
    f.push_back(x * x * x - 2 * x + 1);
  }
  EXPECT_NEAR(simpson(f, h), 4.0 - 4.0 + 2.0, 1e-14);
}

TEST(Simpson, FourthOrderConvergence) {
  auto err = [](int m) {
    std::vector<double> f;
    const double h = std::numbers::pi / (2 * m);
    for (int i = 0; i <= 2 * m; ++i) f.push_back(std::sin(i * h));
    return std::abs(simpson(f, h) - 2.0);
  };
  EXPECT_NEAR(err(8) / err(16), 16.0, 0.5);
}

TEST(Simpson, OddIntervalCountThrows) {
  const std::vector<double> f{0.0, 1.0};
  EXPECT_THROW(simpson(f, 0.1), DomainError);
}

TEST(Simpson, CumulativeMatchesPrefixes) {
  std::vector<double> f;
  const double h = 0.1;
  for (int i = 0; i <= 10; ++i) f.push_back(std::exp(i * h));
  const auto c = simpson_cumulative(f, h);
  ASSERT_EQ(c.size(), 6u);
  EXPECT_EQ(c[0], 0.0);
  for (std::size_t j = 1; j < c.size(); ++j) {
    EXPECT_NEAR(c[j], simpson(std::span<const double>(f.data(), 2 * j + 1), h), 1e-15);
  }
  EXPECT_NEAR(c.back(), std::exp(1.0) - 1.0, 1e-6);
}

}  // namespace
}  // namespace landauer::quadrature
