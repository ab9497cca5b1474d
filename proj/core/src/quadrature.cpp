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

#include "landauer/errors.hpp"

namespace landauer::quadrature {

GaussLegendreRule gauss_legendre(std::size_t n) {
  if (n == 0) throw DomainError("gauss_legendre: need n >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double nn = static_cast<double>(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (nn + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = nn * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

double simpson(std::span<const double> samples, double h) {
  const std::size_t intervals = samples.empty() ? 0 : samples.size() - 1;
  if (intervals == 0) return 0.0;
  if (intervals % 2 != 0) throw DomainError("simpson: need an even number of intervals");
  double acc = samples.front() + samples.back();
  for (std::size_t k = 1; k < intervals; ++k) {
    acc += (k % 2 == 1 ? 4.0 : 2.0) * samples[k];
  }
  return acc * h / 3.0;
}

std::vector<double> simpson_cumulative(std::span<const double> samples, double h) {
  const std::size_t intervals = samples.empty() ? 0 : samples.size() - 1;
  if (intervals % 2 != 0) {
    throw DomainError("simpson_cumulative: need an even number of intervals");
  }
  std::vector<double> out;
  out.reserve(intervals / 2 + 1);
  double acc = 0.0;
  out.push_back(acc);
  for (std::size_t k = 0; k + 2 < samples.size(); k += 2) {
    acc += (samples[k] + 4.0 * samples[k + 1] + samples[k + 2]) * h / 3.0;
    out.push_back(acc);
  }
  return out;
}

}  // namespace landauer::quadrature
