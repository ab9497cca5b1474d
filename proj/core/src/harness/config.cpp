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

#include "landauer/harness/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include "json.hpp"
#include "landauer/errors.hpp"
#include "landauer/harness/models.hpp"

namespace landauer::harness {

using nlohmann::json;

qmat::DensityMatrix StateSpec::build(std::size_t dim) const {
  switch (kind) {
    case Kind::MaximallyMixed:
      return qmat::DensityMatrix::maximally_mixed(dim);
    case Kind::Pure:
      if (index >= dim) throw ConfigError("pure state index out of range");
      return qmat::DensityMatrix::pure(dim, index);
    case Kind::Diagonal:
      if (values.size() != dim) throw ConfigError("diagonal state: expected d_S populations");
      return qmat::DensityMatrix::diagonal(values);
  }
  throw ConfigError("unknown state kind");
}

ReservoirSpec ReservoirConfig::build() const {
  if (model == Model::SingleLevel) return single_level_reservoir(gap, beta);
  return spin_chain_reservoir(n_qubits, couplings, fields, beta);
}

double ScenarioConfig::tolerance(const std::string& name) const {
  const auto it = tolerances.find(name);
  if (it == tolerances.end()) throw ConfigError("missing tolerance '" + name + "'");
  return it->second;
}

namespace {

StateSpec diag_state(std::initializer_list<double> v) {
  StateSpec s;
  s.kind = StateSpec::Kind::Diagonal;
  s.values = v;
  return s;
}

std::string expected_kind(std::string_view scenario) {
  if (scenario == "example1") return "flip";
  if (scenario == "example2-sweep" || scenario == "remark3-epsilon") return "staged";
  if (scenario == "instantaneous-quench" || scenario == "target-solver") return "instantaneous";
  if (scenario == "adiabatic-sweep" || scenario == "thermo-integration") return "adiabatic";
  if (scenario == "remark2-bounds" || scenario == "property-fuzz") return "random-unitary";
  throw ConfigError("unknown scenario '" + std::string(scenario) + "'");
}

void set_chain(ReservoirConfig& r, std::size_t n) {
  r.model = ReservoirConfig::Model::SpinChain;
  r.n_qubits = n;
  r.couplings = default_chain_couplings(n);
  r.fields = default_chain_fields(n);
}

}  // namespace

ScenarioConfig default_config(std::string_view scenario) {
  ScenarioConfig c;
  c.scenario = std::string(scenario);
  c.protocol.kind = expected_kind(scenario);
  c.output = "out/" + c.scenario;
  c.system.rho_f = diag_state({0.75, 0.25});
  set_chain(c.reservoir, 6);
  c.tolerances["balance_residual"] = 1e-8;
  auto& tol = c.tolerances;

  if (scenario == "example1") {
    c.protocol.instances = 50;
    tol["sigma_match"] = 1e-9;
    tol["nu_match"] = 1e-10;
  } else if (scenario == "example2-sweep") {
    c.protocol.n_list = {1, 2, 5, 10, 20, 50, 100, 200, 500, 1000};
    tol["ratio_min"] = 8.0;
    tol["ratio_max"] = 12.0;
    tol["final_error"] = 2e-4;
  } else if (scenario == "remark2-bounds" || scenario == "property-fuzz") {
    c.protocol.instances = 500;
    tol["bound_slack"] = 1e-10;
    tol["relative_balance"] = 1e-9;
    if (scenario == "property-fuzz") tol["saturation_spectrum"] = 1e-5;
  } else if (scenario == "remark3-epsilon") {
    c.protocol.epsilon = 0.1;
    tol["target_entropy"] = 0.05;
  } else if (scenario == "instantaneous-quench") {
    c.system.rho_i = diag_state({0.8, 0.2});
    set_chain(c.reservoir, 4);
    c.protocol.lambda = 0.2;
    c.protocol.t_list = {0.5, 1.0, 2.0, 5.0, 10.0, 20.0};
    tol["ab_mismatch"] = 1e-9;
    tol["ac_mismatch"] = 1e-6;
    tol["energy_drift"] = 1e-9;
    tol["sigma_final_min"] = 1e-6;
  } else if (scenario == "adiabatic-sweep") {
    c.system.rho_f = diag_state({0.9, 0.1});
    c.protocol.lambda = 1.0;
    c.protocol.t_list = {5.0, 10.0, 20.0, 40.0};
    c.protocol.max_dt = 0.05;
    c.protocol.target_error = 1e-7;
    tol["first_law"] = 1e-6;
    tol["sigma_ratio"] = 0.5;
    tol["gibbs_prediction"] = 1e-8;
    tol["halving_error"] = 1e-6;
  } else if (scenario == "target-solver") {
    c.system.rho_f = diag_state({0.7, 0.3});
    set_chain(c.reservoir, 2);
    c.protocol.lambda = 0.1;
    c.protocol.t_list = {1.0, 5.0, 10.0};
    tol["residual"] = 1e-8;
    tol["max_iterations"] = 10.0;
    tol["jacobian_fd"] = 1e-6;
    tol["lambda0_steps"] = 1.0;
    tol["lambda0_match"] = 1e-10;
    tol["ab_mismatch"] = 1e-9;
  } else if (scenario == "thermo-integration") {
    c.system.rho_f = diag_state({0.9, 0.1});
    set_chain(c.reservoir, 3);
    c.protocol.lambda = 1.0;
    c.protocol.instances = 20;
    c.protocol.t_list = {5.0};
    c.protocol.target_error = 1e-7;
    tol["ti_match"] = 1e-8;
    tol["endpoint_zero"] = 1e-8;
    tol["kubo"] = 1e-6;
    tol["first_law"] = 1e-6;
  }
  return c;
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError(where + ": " + what);
}

void reject_unknown(const json& obj, const std::string& where,
                    std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(where, "expected an object");
  for (const auto& item : obj.items()) {
    const bool ok = std::any_of(allowed.begin(), allowed.end(),
                                [&](const char* a) { return item.key() == a; });
    if (!ok) fail(where, "unknown key '" + item.key() + "'");
  }
}

double get_real(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(where, "expected a finite number");
  return x;
}

std::size_t get_count(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    fail(where, "expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::string get_string(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a string");
  return v.get<std::string>();
}

std::vector<double> get_reals(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array");
  std::vector<double> out;
  for (const auto& x : v) out.push_back(get_real(x, where));
  return out;
}

std::vector<std::size_t> get_counts(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array");
  std::vector<std::size_t> out;
  for (const auto& x : v) out.push_back(get_count(x, where));
  return out;
}

StateSpec parse_state(const json& v, const std::string& where) {
  StateSpec s;
  std::string type;
  if (v.is_string()) {
    type = v.get<std::string>();
  } else {
    reject_unknown(v, where, {"type", "values", "index"});
    if (!v.contains("type")) fail(where, "missing 'type'");
    type = get_string(v.at("type"), where + ".type");
  }
  if (type == "maximally-mixed") {
    s.kind = StateSpec::Kind::MaximallyMixed;
  } else if (type == "diagonal") {
    s.kind = StateSpec::Kind::Diagonal;
    if (!v.is_object() || !v.contains("values")) fail(where, "diagonal state needs 'values'");
    s.values = get_reals(v.at("values"), where + ".values");
  } else if (type == "pure") {
    s.kind = StateSpec::Kind::Pure;
    if (v.is_object() && v.contains("index")) s.index = get_count(v.at("index"), where + ".index");
  } else {
    fail(where, "unknown state type '" + type + "'");
  }
  return s;
}

json state_json(const StateSpec& s) {
  switch (s.kind) {
    case StateSpec::Kind::MaximallyMixed:
      return {{"type", "maximally-mixed"}};
    case StateSpec::Kind::Pure:
      return {{"type", "pure"}, {"index", s.index}};
    case StateSpec::Kind::Diagonal:
      return {{"type", "diagonal"}, {"values", s.values}};
  }
  return {};
}

void validate_state(const StateSpec& s, std::size_t d, const std::string& where) {
  if (s.kind == StateSpec::Kind::Pure && s.index >= d) fail(where, "pure index out of range");
  if (s.kind != StateSpec::Kind::Diagonal) return;
  if (s.values.size() != d) fail(where, "need exactly d_S populations");
  double sum = 0.0;
  for (double p : s.values) {
    if (p < 0.0) fail(where, "negative population");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) fail(where, "populations must sum to one");
}

void validate(const ScenarioConfig& c) {
  if (c.protocol.kind != expected_kind(c.scenario)) {
    fail("protocol.kind", "scenario '" + c.scenario + "' runs a '" + expected_kind(c.scenario) +
                              "' protocol");
  }
  const std::size_t d = c.system.d_s;
  if (d < 2) fail("system.d_S", "need d_S >= 2");
  validate_state(c.system.rho_i, d, "system.rho_i");
  validate_state(c.system.rho_f, d, "system.rho_f");
  if (!(c.reservoir.beta > 0.0)) fail("reservoir.beta", "need beta > 0");
  if (c.reservoir.model == ReservoirConfig::Model::SpinChain) {
    const std::size_t n = c.reservoir.n_qubits;
    if (n == 0 || n > 12) fail("reservoir.n_qubits", "need 1 <= n_qubits <= 12");
    if (c.reservoir.couplings.size() + 1 != n) fail("reservoir.couplings", "need n_qubits - 1 entries");
    if (c.reservoir.fields.size() != n) fail("reservoir.fields", "need n_qubits entries");
  }
  const bool qubit_coupled = c.scenario == "instantaneous-quench" ||
                             c.scenario == "adiabatic-sweep" || c.scenario == "target-solver" ||
                             c.scenario == "thermo-integration";
  if (qubit_coupled) {
    if (d != 2) fail("system.d_S", "scenario '" + c.scenario + "' couples a qubit system");
    if (c.reservoir.model != ReservoirConfig::Model::SpinChain) {
      fail("reservoir.model", "scenario '" + c.scenario + "' needs a spin-chain reservoir");
    }
    if (c.protocol.coupling_site >= c.reservoir.n_qubits) {
      fail("protocol.coupling_site", "site outside the chain");
    }
  }
  if (c.protocol.coupling != "xx" && c.protocol.coupling != "exchange") {
    fail("protocol.coupling", "expected 'xx' or 'exchange'");
  }
  if (c.protocol.path != "linear") fail("protocol.path", "only 'linear' paths are bundled");
  if (c.protocol.kind == "staged" && c.scenario == "example2-sweep") {
    if (c.protocol.n_list.empty()) fail("protocol.N", "need at least one stage count");
    for (std::size_t n : c.protocol.n_list) {
      if (n == 0) fail("protocol.N", "stage counts must be positive");
    }
  }
  if (c.scenario == "remark3-epsilon" && !(c.protocol.epsilon > 0.0 && c.protocol.epsilon < 1.0)) {
    fail("protocol.epsilon", "need 0 < epsilon < 1");
  }
  for (double t : c.protocol.t_list) {
    if (!(t >= 0.0)) fail("protocol.T_list", "times must be non-negative");
  }
  if (c.protocol.kind == "adiabatic" || c.protocol.kind == "instantaneous") {
    if (c.protocol.t_list.empty()) fail("protocol.T_list", "need at least one time");
  }
  if (c.protocol.kind == "adiabatic") {
    for (double t : c.protocol.t_list) {
      if (!(t > 0.0)) fail("protocol.T_list", "durations must be positive");
    }
    if (!(c.protocol.max_dt > 0.0)) fail("protocol.max_dt", "need max_dt > 0");
    if (c.protocol.steps % 2 != 0) fail("protocol.steps", "need an even step count");
    if (c.protocol.target_error < 0.0) fail("protocol.target_error", "need target_error >= 0");
  }
  for (const auto& [name, value] : c.tolerances) {
    if (!(value >= 0.0)) fail("tolerances." + name, "need a non-negative value");
  }
}

}  // namespace

ScenarioConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  reject_unknown(doc, "config",
                 {"scenario", "system", "reservoir", "protocol", "seed", "tolerances", "output"});
  if (!doc.contains("scenario")) fail("config", "missing 'scenario'");
  ScenarioConfig c = default_config(get_string(doc.at("scenario"), "scenario"));

  if (doc.contains("system")) {
    const json& s = doc.at("system");
    reject_unknown(s, "system", {"d_S", "rho_i", "rho_f", "field"});
    if (s.contains("d_S")) c.system.d_s = get_count(s.at("d_S"), "system.d_S");
    if (s.contains("rho_i")) c.system.rho_i = parse_state(s.at("rho_i"), "system.rho_i");
    if (s.contains("rho_f")) c.system.rho_f = parse_state(s.at("rho_f"), "system.rho_f");
    if (s.contains("field")) c.system.field = get_real(s.at("field"), "system.field");
  }

  if (doc.contains("reservoir")) {
    const json& r = doc.at("reservoir");
    reject_unknown(r, "reservoir", {"model", "n_qubits", "couplings", "fields", "gap", "beta"});
    if (r.contains("model")) {
      const std::string m = get_string(r.at("model"), "reservoir.model");
      if (m == "spin-chain") {
        c.reservoir.model = ReservoirConfig::Model::SpinChain;
      } else if (m == "single-level") {
        c.reservoir.model = ReservoirConfig::Model::SingleLevel;
      } else {
        fail("reservoir.model", "expected 'spin-chain' or 'single-level'");
      }
    }
    if (r.contains("n_qubits")) {
      c.reservoir.n_qubits = get_count(r.at("n_qubits"), "reservoir.n_qubits");
      // A new chain length resets the default profiles unless given explicitly.
      c.reservoir.couplings = default_chain_couplings(c.reservoir.n_qubits);
      c.reservoir.fields = default_chain_fields(c.reservoir.n_qubits);
    }
    if (r.contains("couplings")) {
      c.reservoir.couplings = get_reals(r.at("couplings"), "reservoir.couplings");
    }
    if (r.contains("fields")) c.reservoir.fields = get_reals(r.at("fields"), "reservoir.fields");
    if (r.contains("gap")) c.reservoir.gap = get_real(r.at("gap"), "reservoir.gap");
    if (r.contains("beta")) c.reservoir.beta = get_real(r.at("beta"), "reservoir.beta");
  }

  if (doc.contains("protocol")) {
    const json& p = doc.at("protocol");
    reject_unknown(p, "protocol",
                   {"kind", "N", "lambda", "T_list", "steps", "max_dt", "target_error", "path",
                    "coupling", "coupling_site", "epsilon", "instances"});
    if (p.contains("kind")) c.protocol.kind = get_string(p.at("kind"), "protocol.kind");
    if (p.contains("N")) c.protocol.n_list = get_counts(p.at("N"), "protocol.N");
    if (p.contains("lambda")) c.protocol.lambda = get_real(p.at("lambda"), "protocol.lambda");
    if (p.contains("T_list")) c.protocol.t_list = get_reals(p.at("T_list"), "protocol.T_list");
    if (p.contains("steps")) c.protocol.steps = get_count(p.at("steps"), "protocol.steps");
    if (p.contains("max_dt")) c.protocol.max_dt = get_real(p.at("max_dt"), "protocol.max_dt");
    if (p.contains("target_error")) {
      c.protocol.target_error = get_real(p.at("target_error"), "protocol.target_error");
    }
    if (p.contains("path")) c.protocol.path = get_string(p.at("path"), "protocol.path");
    if (p.contains("coupling")) c.protocol.coupling = get_string(p.at("coupling"), "protocol.coupling");
    if (p.contains("coupling_site")) {
      c.protocol.coupling_site = get_count(p.at("coupling_site"), "protocol.coupling_site");
    }
    if (p.contains("epsilon")) c.protocol.epsilon = get_real(p.at("epsilon"), "protocol.epsilon");
    if (p.contains("instances")) {
      c.protocol.instances = get_count(p.at("instances"), "protocol.instances");
    }
  }

  if (doc.contains("seed")) {
    const json& s = doc.at("seed");
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0)) {
      fail("seed", "expected a non-negative integer");
    }
    c.seed = s.get<std::uint64_t>();
  }

  if (doc.contains("tolerances")) {
    const json& t = doc.at("tolerances");
    if (!t.is_object()) fail("tolerances", "expected an object");
    for (const auto& item : t.items()) {
      if (!c.tolerances.count(item.key())) {
        fail("tolerances", "unknown tolerance '" + item.key() + "' for scenario '" +
                               c.scenario + "'");
      }
      c.tolerances[item.key()] = get_real(item.value(), "tolerances." + item.key());
    }
  }

  if (doc.contains("output")) c.output = get_string(doc.at("output"), "output");
  validate(c);
  return c;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

namespace {

json config_json(const ScenarioConfig& c) {
  json doc;
  doc["scenario"] = c.scenario;
  doc["system"] = {{"d_S", c.system.d_s},
                   {"rho_i", state_json(c.system.rho_i)},
                   {"rho_f", state_json(c.system.rho_f)},
                   {"field", c.system.field}};
  doc["reservoir"] = {
      {"model", c.reservoir.model == ReservoirConfig::Model::SpinChain ? "spin-chain"
                                                                       : "single-level"},
      {"n_qubits", c.reservoir.n_qubits},
      {"couplings", c.reservoir.couplings},
      {"fields", c.reservoir.fields},
      {"gap", c.reservoir.gap},
      {"beta", c.reservoir.beta}};
  doc["protocol"] = {{"kind", c.protocol.kind},
                     {"N", c.protocol.n_list},
                     {"lambda", c.protocol.lambda},
                     {"T_list", c.protocol.t_list},
                     {"steps", c.protocol.steps},
                     {"max_dt", c.protocol.max_dt},
                     {"target_error", c.protocol.target_error},
                     {"path", c.protocol.path},
                     {"coupling", c.protocol.coupling},
                     {"coupling_site", c.protocol.coupling_site},
                     {"epsilon", c.protocol.epsilon},
                     {"instances", c.protocol.instances}};
  doc["seed"] = c.seed;
  doc["tolerances"] = c.tolerances;
  doc["output"] = c.output;
  return doc;
}

}  // namespace

std::string to_json(const ScenarioConfig& config) { return config_json(config).dump(2) + "\n"; }

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t config_hash(const ScenarioConfig& config) {
  json doc = config_json(config);
  doc.erase("output");
  return fnv1a(doc.dump());
}

}  // namespace landauer::harness
