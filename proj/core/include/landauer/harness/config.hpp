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
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "landauer/qmat.hpp"
#include "landauer/reservoir.hpp"

/// Scenario configuration. The JSON schema mirrors these structs one to one;
/// see README.md for the field list and per-scenario defaults.
namespace landauer::harness {

struct StateSpec {
  enum class Kind { MaximallyMixed, Diagonal, Pure };
  Kind kind = Kind::MaximallyMixed;
  std::vector<double> values;  ///< Diagonal: populations, summing to one
  std::size_t index = 0;       ///< Pure: computational basis index

  qmat::DensityMatrix build(std::size_t dim) const;
};

struct SystemConfig {
  std::size_t d_s = 2;
  StateSpec rho_i;
  StateSpec rho_f;
  /// Qubit scenarios use H_S = field * Z / 2 where no target fixes H_S.
  double field = 1.0;
};

struct ReservoirConfig {
  enum class Model { SingleLevel, SpinChain };
  Model model = Model::SpinChain;
  std::size_t n_qubits = 6;
  std::vector<double> couplings;  ///< n - 1 entries
  std::vector<double> fields;     ///< n entries
  double gap = 1.0;               ///< single-level only
  double beta = 1.0;

  ReservoirSpec build() const;
};

struct ProtocolConfig {
  /// flip | staged | instantaneous | adiabatic | random-unitary
  std::string kind;
  std::vector<std::size_t> n_list;  ///< staged stage counts
  double lambda = 0.2;              ///< coupling strength (amplitude for adiabatic)
  std::vector<double> t_list;       ///< quench sample times or adiabatic durations
  std::size_t steps = 0;            ///< adiabatic fixed step count, 0 = from max_dt
  double max_dt = 0.02;
  double target_error = 0.0;        ///< adiabatic refinement target, 0 = off
  std::string path = "linear";
  std::string coupling = "xx";      ///< xx | exchange
  std::size_t coupling_site = 0;
  double epsilon = 0.1;
  std::size_t instances = 0;        ///< random draws for sampling scenarios
};

struct ScenarioConfig {
  std::string scenario;
  SystemConfig system;
  ReservoirConfig reservoir;
  ProtocolConfig protocol;
  std::uint64_t seed = 1;
  std::map<std::string, double> tolerances;
  std::string output;

  double tolerance(const std::string& name) const;
};

/// Fully populated defaults for a bundled scenario; throws ConfigError for an
/// unknown name.
ScenarioConfig default_config(std::string_view scenario);

/// Parses JSON text. Fields absent from the document keep the scenario
/// defaults; unknown keys, wrong types and inconsistent values throw
/// ConfigError.
ScenarioConfig parse_config(std::string_view json_text);
ScenarioConfig load_config(const std::filesystem::path& path);

/// Canonical pretty-printed JSON; parse_config(to_json(c)) reproduces c.
std::string to_json(const ScenarioConfig& config);

/// FNV-1a 64 over the canonical JSON with the output directory removed.
std::uint64_t config_hash(const ScenarioConfig& config);

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace landauer::harness
