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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <locale>
#include <numbers>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "landauer/harness/config.hpp"
#include "landauer/harness/models.hpp"
#include "landauer/harness/report.hpp"
#include "landauer/harness/scenarios.hpp"
#include "oracles.hpp"

namespace landauer::harness {
namespace {

using qmat::ComplexMatrix;

TEST(SpinChain, SingleSite) {
  const auto r = spin_chain_reservoir(1, {}, {1.0}, 1.0);
  const auto e = qmat::eigenvalues(r.hamiltonian());
  EXPECT_NEAR(e(0), 0.5, 1e-15);
  EXPECT_NEAR(e(1), -0.5, 1e-15);
  EXPECT_NEAR(r.span(), 1.0, 1e-15);
}

TEST(SpinChain, XYDimerClosedForm) {
  const double j = 1.3;
  const auto e = qmat::eigenvalues(spin_chain_hamiltonian(2, {j}, {0.0, 0.0}));
  EXPECT_NEAR(e(0), j, 1e-14);
  EXPECT_NEAR(e(1), 0.0, 1e-14);
  EXPECT_NEAR(e(2), 0.0, 1e-14);
  EXPECT_NEAR(e(3), -j, 1e-14);
}

TEST(SpinChain, DefaultParametersGiveNondegenerateSpectrum) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto h = spin_chain_hamiltonian(n, default_chain_couplings(n), default_chain_fields(n));
    EXPECT_GT(min_level_spacing(h), 1e-6) << "n=" << n;
  }
}

TEST(SpinChain, MatchesKroneckerAssembly) {
  const std::vector<double> j{0.7, 1.1};
  const std::vector<double> h{0.2, -0.4, 0.9};
  const auto x = pauli(Pauli::X), y = pauli(Pauli::Y), z = pauli(Pauli::Z);
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  auto three = [&](const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c) {
    return oracle::kron(oracle::kron(a, b), c);
  };
  const ComplexMatrix ref = 0.5 * j[0] * (three(x, x, id) + three(y, y, id)) +
                            0.5 * j[1] * (three(id, x, x) + three(id, y, y)) +
                            0.5 * h[0] * three(z, id, id) + 0.5 * h[1] * three(id, z, id) +
                            0.5 * h[2] * three(id, id, z);
  EXPECT_LE(oracle::max_abs(spin_chain_hamiltonian(3, j, h).matrix() - ref), 1e-15);
}

TEST(SpinChain, RejectsBadInput) {
  EXPECT_THROW(spin_chain_hamiltonian(3, {1.0}, {0, 0, 0}), DimensionError);
  EXPECT_THROW(spin_chain_hamiltonian(13, std::vector<double>(12, 1.0), std::vector<double>(13, 0.0)),
               DimensionError);
  EXPECT_THROW(site_operator(2, 2, Pauli::X), DimensionError);
}

TEST(Coupling, ExchangeAndXX) {
  const auto x = pauli(Pauli::X), y = pauli(Pauli::Y);
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  const auto xx = qubit_chain_coupling(2, 1, CouplingKind::XX);
  EXPECT_LE(oracle::max_abs(xx.matrix() - oracle::kron(x, oracle::kron(id, x))), 1e-15);
  const auto ex = qubit_chain_coupling(2, 0, CouplingKind::Exchange);
  const ComplexMatrix ref = 0.5 * (oracle::kron(x, oracle::kron(x, id)) +
                                   oracle::kron(y, oracle::kron(y, id)));
  EXPECT_LE(oracle::max_abs(ex.matrix() - ref), 1e-15);
}

TEST(Instances, DrawsCoverTheStatedRanges) {
  qmat::Rng rng(5);
  std::set<std::size_t> ds, dr;
  for (int k = 0; k < 200; ++k) {
    const auto inst = random_process_instance(rng, k % 3 == 0);
    ds.insert(inst.rho_i.dim());
    dr.insert(inst.reservoir.dim());
    EXPECT_GE(inst.reservoir.beta(), 0.2);
    EXPECT_LE(inst.reservoir.beta(), 2.0);
    EXPECT_EQ(inst.u.dim(), inst.rho_i.dim() * inst.reservoir.dim());
  }
  EXPECT_EQ(ds, (std::set<std::size_t>{2, 3, 4}));
  EXPECT_EQ(dr, (std::set<std::size_t>{2, 4, 8}));
}

TEST(Config, EveryScenarioRoundTrips) {
  const auto& list = list_scenarios();
  ASSERT_EQ(list.size(), 9u);
  for (const auto& s : list) {
    EXPECT_FALSE(s.summary.empty());
    const auto c = default_config(s.name);
    const std::string text = to_json(c);
    const auto back = parse_config(text);
    EXPECT_EQ(to_json(back), text) << s.name;
    EXPECT_EQ(config_hash(back), config_hash(c));
    EXPECT_EQ(c.tolerance("balance_residual"), 1e-8);
  }
}

TEST(Config, MissingFieldsKeepDefaults) {
  const auto c = parse_config(R"({"scenario": "adiabatic-sweep", "seed": 9})");
  const auto d = default_config("adiabatic-sweep");
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(c.protocol.t_list, d.protocol.t_list);
  EXPECT_EQ(c.reservoir.n_qubits, 6u);
}

TEST(Config, OutputDoesNotAffectHash) {
  auto a = default_config("example1");
  auto b = a;
  b.output = "elsewhere";
  EXPECT_EQ(config_hash(a), config_hash(b));
  b.seed = 2;
  EXPECT_NE(config_hash(a), config_hash(b));
}

TEST(Config, RejectsInvalidDocuments) {
  const char* bad[] = {
      R"({"scenario": "nope"})",
      R"({"scenario": "example1", "extra": 1})",
      R"({"scenario": "example1", "system": {"rho_i": {"type": "diagonal", "values": [0.5, 0.6]}}})",
      R"({"scenario": "example1", "system": {"rho_i": {"type": "diagonal", "values": [1.5, -0.5]}}})",
      R"({"scenario": "example1", "system": {"rho_i": {"type": "blurry"}}})",
      R"({"scenario": "example1", "tolerances": {"not_a_check": 1}})",
      R"({"scenario": "example1", "seed": "one"})",
      R"({"scenario": "adiabatic-sweep", "protocol": {"T_list": [5, -1]}})",
      R"({"scenario": "adiabatic-sweep", "protocol": {"steps": 7}})",
      R"({"scenario": "adiabatic-sweep", "system": {"d_S": 3}})",
      R"({"scenario": "instantaneous-quench", "reservoir": {"model": "single-level"}})",
      R"({"scenario": "example1", "reservoir": {"beta": 0}})",
      R"([1, 2])",
      R"({"seed": 1})",
      "{",
  };
  for (const char* text : bad) EXPECT_THROW(parse_config(text), ConfigError) << text;
}

TEST(Config, LoadReportsMissingFile) {
  EXPECT_THROW(load_config("/nonexistent/config.json"), ConfigError);
}

TEST(Report, RealFormattingIsLocaleIndependent) {
  struct Comma : std::numpunct<char> {
    char do_decimal_point() const override { return ','; }
  };
  const std::locale old = std::locale::global(std::locale(std::locale::classic(), new Comma));
  const std::string s = format_real(0.1);
  std::locale::global(old);
  EXPECT_EQ(s, "0.10000000000000001");
  EXPECT_EQ(format_real(-2.5), "-2.5");
  EXPECT_EQ(format_real(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_real(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(format_real(std::nan("")), "nan");
  EXPECT_EQ(std::stod(format_real(std::numbers::pi)), std::numbers::pi);
}

TEST(Report, CsvHeaderAndBits) {
  Table t{"demo", {{"T"}, {"sigma", true}}, {}};
  t.add_row({1.0, std::log(2.0)});
  EXPECT_EQ(t.to_csv(), "T,sigma\n1,0.69314718055994529\n");
  EXPECT_EQ(t.to_csv(true), "T,sigma\n1,1\n");
  EXPECT_THROW(t.add_row({1.0}), DimensionError);
}

TEST(Report, ChecksAndRelations) {
  RunReport r;
  EXPECT_TRUE(r.add_check("a", 1.0, 1.0).passed);
  EXPECT_FALSE(r.add_check("b", 1.0, 1.0, Check::Relation::Below).passed);
  EXPECT_TRUE(r.add_check("c", 2.0, 1.0, Check::Relation::Above).passed);
  EXPECT_FALSE(r.add_check("d", std::nan(""), 1.0).passed);
  EXPECT_THROW(r.add_check("a", 0.0, 1.0), Error);
  EXPECT_FALSE(r.passed());
  EXPECT_NE(r.find_check("c"), nullptr);
  EXPECT_EQ(r.find_check("zz"), nullptr);
}

TEST(Report, WriteProducesCsvPerTableAndJson) {
  const auto dir = std::filesystem::temp_directory_path() / "landauer_report_test";
  std::filesystem::remove_all(dir);
  const auto rep = run_scenario(default_config("example2-sweep"));
  const auto files = write_report(rep, dir);
  ASSERT_EQ(files.size(), rep.tables.size() + 1);
  EXPECT_EQ(files.back().filename(), "report.json");
  std::ifstream csv(dir / "staged.csv");
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header.rfind("N,", 0), 0u);
  std::filesystem::remove_all(dir);
}

TEST(Scenarios, FastScenariosPassAndCarryBalanceCheck) {
  for (const char* name : {"example1", "example2-sweep", "remark2-bounds", "remark3-epsilon"}) {
    const auto rep = run_scenario(default_config(name));
    EXPECT_TRUE(rep.passed()) << name;
    const Check* c = rep.find_check("balance_residual");
    ASSERT_NE(c, nullptr) << name;
    EXPECT_EQ(c->tolerance, 1e-8);
    EXPECT_EQ(rep.provenance.seed, default_config(name).seed);
  }
}

TEST(Scenarios, Example1SigmaColumnIsRelativeEntropy) {
  const auto rep = run_scenario(default_config("example1"));
  const Table* t = rep.find_table("flip");
  ASSERT_NE(t, nullptr);
  // Row 0 is the configured pair 1/2 -> diag(3/4, 1/4), then the random pairs.
  EXPECT_EQ(t->rows.size(), 51u);
  std::size_t col = 0;
  while (t->columns[col].name != "sigma") ++col;
  EXPECT_NEAR(t->rows[0][col], 0.5 * std::log(0.5 / 0.75) + 0.5 * std::log(0.5 / 0.25), 1e-9);
}

TEST(Scenarios, PropertyFuzzIsDeterministic) {
  const auto c = default_config("property-fuzz");
  const auto a = run_scenario(c);
  const auto b = run_scenario(c);
  EXPECT_EQ(a.hash(), b.hash());
  EXPECT_EQ(a.to_json(), b.to_json());
  EXPECT_TRUE(a.passed());
  auto other = c;
  other.seed = c.seed + 1;
  EXPECT_NE(run_scenario(other).hash(), a.hash());
}

}  // namespace
}  // namespace landauer::harness
