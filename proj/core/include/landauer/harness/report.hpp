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

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace landauer::harness {

const char* version();

/// 17 significant digits, '.' decimal, "inf" / "-inf" / "nan" for
/// non-finite values. Independent of the global locale.
std::string format_real(double x);

struct Column {
  std::string name;
  /// Entropy-valued column, divided by log 2 in bit units.
  bool entropic = false;
};

struct Table {
  std::string name;  ///< file stem
  std::vector<Column> columns;
  std::vector<std::vector<double>> rows;

  /// Throws DimensionError on an arity mismatch.
  void add_row(std::vector<double> row);
  std::string to_csv(bool bits = false) const;
};

struct Check {
  enum class Relation { AtMost, AtLeast, Below, Above };
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
  Relation relation = Relation::AtMost;
};

struct Provenance {
  std::uint64_t config_hash = 0;
  std::uint64_t seed = 0;
  std::string version;
};

struct RunReport {
  std::string scenario;
  std::vector<Check> checks;
  std::vector<Table> tables;
  /// Scalar results worth surfacing outside the tables (fit exponents, radii).
  std::map<std::string, double> summary;
  std::vector<std::string> warnings;
  Provenance provenance;

  /// Adds measured <= tolerance (>=, < and > for AtLeast, Below and Above).
  /// A NaN measurement fails.
  /// Throws Error if a check of that name already exists.
  const Check& add_check(const std::string& name, double measured, double tolerance,
                         Check::Relation relation = Check::Relation::AtMost);
  const Check* find_check(const std::string& name) const;
  const Table* find_table(const std::string& name) const;
  bool passed() const;

  std::string to_json(bool bits = false) const;
  /// FNV-1a over the JSON body and every CSV in nat units.
  std::uint64_t hash() const;
};

/// Writes report.json and <table>.csv into `dir` (created if needed) and
/// returns the written paths in order.
std::vector<std::filesystem::path> write_report(const RunReport& report,
                                                const std::filesystem::path& dir,
                                                bool bits = false);

}  // namespace landauer::harness
