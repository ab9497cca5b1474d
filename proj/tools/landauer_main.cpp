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

// landauer run <config.json> [--out DIR] [--seed N] [--bits]
// landauer list
// landauer check <config.json>
// landauer init <scenario> [--out FILE]
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 config error,
// 3 numerical error.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "landauer/errors.hpp"
#include "landauer/harness/config.hpp"
#include "landauer/harness/report.hpp"
#include "landauer/harness/scenarios.hpp"

namespace {

namespace h = landauer::harness;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

int cmd_list() {
  for (const auto& s : h::list_scenarios()) {
    std::cout << std::left << std::setw(22) << s.name << s.summary << "\n";
  }
  return kExitPass;
}

int cmd_check(const std::string& path) {
  const h::ScenarioConfig cfg = h::load_config(path);
  std::cout << "ok: " << cfg.scenario << " (config hash " << std::hex << h::config_hash(cfg)
            << std::dec << ")\n";
  return kExitPass;
}

int cmd_init(const std::string& scenario, const std::string& out) {
  const std::string text = h::to_json(h::default_config(scenario));
  if (out.empty()) {
    std::cout << text;
    return kExitPass;
  }
  std::ofstream f(out, std::ios::binary | std::ios::trunc);
  if (!f) throw landauer::Error("cannot write '" + out + "'");
  f << text;
  return kExitPass;
}

int cmd_run(const std::string& path, const std::string& out_dir,
            std::optional<std::uint64_t> seed, bool bits) {
  h::ScenarioConfig cfg = h::load_config(path);
  if (seed) cfg.seed = *seed;
  if (!out_dir.empty()) cfg.output = out_dir;
  const h::RunReport report = h::run_scenario(cfg);
  h::write_report(report, cfg.output, bits);
  for (const auto& c : report.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << "  measured=" << h::format_real(c.measured)
              << "  tolerance=" << h::format_real(c.tolerance) << "\n";
  }
  for (const auto& w : report.warnings) std::cout << "warning: " << w << "\n";
  std::cout << cfg.scenario << ": " << (report.passed() ? "all checks passed" : "check failure")
            << " -> " << cfg.output << "\n";
  return report.passed() ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-dimensional Landauer erasure scenarios"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed_value = 0;
  bool bits = false;
  auto* run = app.add_subcommand("run", "run a scenario config and write report.json and CSVs");
  run->add_option("config", config_path, "scenario config (JSON)")->required();
  run->add_option("--out", out_dir, "output directory (overrides the config)");
  auto* seed_opt = run->add_option("--seed", seed_value, "RNG seed (overrides the config)");
  run->add_flag("--bits", bits, "report entropy columns in bits");

  auto* list = app.add_subcommand("list", "list bundled scenarios");

  std::string check_path;
  auto* check = app.add_subcommand("check", "validate a config without running it");
  check->add_option("config", check_path, "scenario config (JSON)")->required();

  std::string init_name;
  std::string init_out;
  auto* init = app.add_subcommand("init", "print the default config of a scenario");
  init->add_option("scenario", init_name, "scenario name")->required();
  init->add_option("--out", init_out, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  try {
    if (*list) return cmd_list();
    if (*check) return cmd_check(check_path);
    if (*init) return cmd_init(init_name, init_out);
    std::optional<std::uint64_t> seed;
    if (*seed_opt) seed = seed_value;
    return cmd_run(config_path, out_dir, seed, bits);
  } catch (const landauer::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  }
}
