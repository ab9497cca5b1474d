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

#include "landauer/harness/report.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <locale>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "landauer/errors.hpp"
#include "landauer/harness/config.hpp"

#ifndef LANDAUER_VERSION_STRING
#define LANDAUER_VERSION_STRING "0.0.0"
#endif

namespace landauer::harness {

using nlohmann::json;

const char* version() { return LANDAUER_VERSION_STRING; }

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(17) << x;
  return os.str();
}

void Table::add_row(std::vector<double> row) {
  if (row.size() != columns.size()) {
    throw DimensionError("table '" + name + "': row arity does not match the header");
  }
  rows.push_back(std::move(row));
}

std::string Table::to_csv(bool bits) const {
  std::string out;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c) out += ',';
    out += columns[c].name;
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      const double v = bits && columns[c].entropic ? row[c] / std::numbers::ln2 : row[c];
      out += format_real(v);
    }
    out += '\n';
  }
  return out;
}

const Check& RunReport::add_check(const std::string& name, double measured, double tolerance,
                                  Check::Relation relation) {
  if (find_check(name)) throw Error("duplicate check '" + name + "'");
  Check c;
  c.name = name;
  c.measured = measured;
  c.tolerance = tolerance;
  c.relation = relation;
  switch (relation) {
    case Check::Relation::AtMost:
      c.passed = measured <= tolerance;
      break;
    case Check::Relation::AtLeast:
      c.passed = measured >= tolerance;
      break;
    case Check::Relation::Below:
      c.passed = measured < tolerance;
      break;
    case Check::Relation::Above:
      c.passed = measured > tolerance;
      break;
  }
  checks.push_back(std::move(c));
  return checks.back();
}

const Check* RunReport::find_check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const Table* RunReport::find_table(const std::string& name) const {
  for (const auto& t : tables) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

bool RunReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

namespace {

// JSON has no non-finite numbers; those travel as strings.
json real_json(double x) {
  if (std::isfinite(x)) return x;
  return format_real(x);
}

const char* relation_text(Check::Relation r) {
  switch (r) {
    case Check::Relation::AtMost:
      return "<=";
    case Check::Relation::AtLeast:
      return ">=";
    case Check::Relation::Below:
      return "<";
    case Check::Relation::Above:
      return ">";
  }
  return "?";
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

json body_json(const RunReport& r, bool bits) {
  json doc;
  doc["scenario"] = r.scenario;
  doc["passed"] = r.passed();
  doc["units"] = bits ? "bits" : "nats";
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"pass", c.passed},
                      {"measured", real_json(c.measured)},
                      {"tolerance", real_json(c.tolerance)},
                      {"relation", relation_text(c.relation)}});
  }
  doc["checks"] = std::move(checks);
  json tables = json::array();
  for (const auto& t : r.tables) {
    json cols = json::array();
    for (const auto& c : t.columns) cols.push_back(c.name);
    tables.push_back({{"name", t.name},
                      {"file", t.name + ".csv"},
                      {"columns", std::move(cols)},
                      {"rows", t.rows.size()}});
  }
  doc["tables"] = std::move(tables);
  json summary = json::object();
  for (const auto& [k, v] : r.summary) summary[k] = real_json(v);
  doc["summary"] = std::move(summary);
  doc["warnings"] = r.warnings;
  doc["provenance"] = {{"config_hash", hex64(r.provenance.config_hash)},
                       {"seed", r.provenance.seed},
                       {"version", r.provenance.version}};
  return doc;
}

}  // namespace

std::uint64_t RunReport::hash() const {
  std::uint64_t h = fnv1a(body_json(*this, false).dump());
  for (const auto& t : tables) h = fnv1a(t.to_csv(false), h);
  return h;
}

std::string RunReport::to_json(bool bits) const {
  json doc = body_json(*this, bits);
  doc["report_hash"] = hex64(hash());
  return doc.dump(2) + "\n";
}

std::vector<std::filesystem::path> write_report(const RunReport& report,
                                                const std::filesystem::path& dir, bool bits) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create output directory '" + dir.string() + "': " + ec.message());
  std::vector<std::filesystem::path> written;
  auto emit = [&](const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + p.string() + "'");
    out << text;
    written.push_back(p);
  };
  for (const auto& t : report.tables) emit(dir / (t.name + ".csv"), t.to_csv(bits));
  emit(dir / "report.json", report.to_json(bits));
  return written;
}

}  // namespace landauer::harness
