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

#include <string>
#include <vector>

#include "landauer/harness/config.hpp"
#include "landauer/harness/report.hpp"

namespace landauer::harness {

struct ScenarioInfo {
  std::string name;
  std::string summary;
};

/// The nine bundled scenarios in catalogue order.
const std::vector<ScenarioInfo>& list_scenarios();

/// Runs the named scenario. Numerical failures propagate as landauer::Error;
/// check failures are recorded in the report, never thrown. Every report
/// carries a "balance_residual" check.
RunReport run_scenario(const ScenarioConfig& config);

}  // namespace landauer::harness
