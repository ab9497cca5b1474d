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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace landauer::quadrature {

struct GaussLegendreRule {
  std::vector<double> nodes;    ///< on [-1, 1], ascending
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule, nodes by Newton iteration on P_n.
GaussLegendreRule gauss_legendre(std::size_t n);

/// Composite Simpson rule over equally spaced samples f_0..f_{2m} with
/// spacing h. Throws DomainError for an odd number of intervals.
double simpson(std::span<const double> samples, double h);

/// Cumulative Simpson values at every even sample index: out[j] is the
/// integral from sample 0 to sample 2j.
std::vector<double> simpson_cumulative(std::span<const double> samples, double h);

}  // namespace landauer::quadrature
