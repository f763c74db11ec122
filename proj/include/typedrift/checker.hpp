// Copyright 2026 The typedrift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TYPEDRIFT_CHECKER_HPP
#define TYPEDRIFT_CHECKER_HPP

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "typedrift/corpus.hpp"

namespace typedrift {

// Identity of a type error after normalization: kind name plus numeric code.
// Positions and message text never participate in downstream comparisons.
struct DiagnosticKey {
  std::string kind;
  int code = 0;

  auto operator<=>(const DiagnosticKey&) const = default;

  std::string display() const { return kind + " [" + std::to_string(code) + "]"; }
};

struct Diagnostic {
  std::string file;  // "<project>" for whole-project conditions
  int line = 1;
  DiagnosticKey key;
  std::string message;
};

struct TypeReport {
  std::string snapshot_id;
  std::string checker_name;
  std::string checker_version;
  std::vector<Diagnostic> diagnostics;       // ordered by (file, line, kind)
  std::vector<std::string> unparsed_lines;   // raw-output lines that did not parse
};

// Multiset of diagnostic keys; total multiplicity always equals the source
// report's diagnostic count.
class NormalizedReport {
 public:
  using Counts = std::map<DiagnosticKey, int>;

  NormalizedReport() = default;
  explicit NormalizedReport(Counts counts);

  const Counts& counts() const { return counts_; }
  int count(const DiagnosticKey& key) const;
  int total() const;
  bool empty() const { return counts_.empty(); }

  void add(const DiagnosticKey& key, int n = 1);

  // Multiset union (m1 ⊎ m2).
  NormalizedReport merged_with(const NormalizedReport& other) const;

  std::vector<DiagnosticKey> distinct_keys() const;  // sorted

  friend bool operator==(const NormalizedReport&, const NormalizedReport&) = default;

 private:
  Counts counts_;
};

NormalizedReport normalize(const TypeReport& report);

// The fixed kind/code table used by the built-in checker and its fixtures.
const std::vector<std::pair<std::string, int>>& diagnostic_code_table();
DiagnosticKey diagnostic_key(const std::string& kind);  // looks up the table

// Built-in hermetic micro-checker. Rules, each with a fixed key:
//   R1 Parsing failure [404]
//   R2 Unbound name [10]
//   R3 Undefined attribute [16]
//   R4 Unsupported operand [58]
//   R5 Missing return annotation [3] / Missing parameter annotation [2] /
//      Missing attribute annotation [4]
// A file that fails R1 contributes nothing else.
TypeReport micro_check(const ProjectSnapshot& snapshot);

// Parses line-oriented checker output. The shipped "pyre" dialect reads
// `path:line:col Kind [code]: message` lines; anything else in the input
// becomes an unparsed-line warning.
TypeReport parse_external_output(const std::string& raw, const std::string& dialect);

class CheckerAdapter {
 public:
  virtual ~CheckerAdapter() = default;
  virtual std::string name() const = 0;
  virtual std::string version() const { return "0"; }
  virtual bool reentrant() const { return false; }
  // Throws Error(ErrorKind::Check) when the checker cannot produce a report.
  virtual TypeReport check(const ProjectSnapshot& snapshot) = 0;
};

class MicroChecker final : public CheckerAdapter {
 public:
  std::string name() const override { return "micro"; }
  std::string version() const override;
  bool reentrant() const override { return true; }
  TypeReport check(const ProjectSnapshot& snapshot) override;
};

// Replays recorded reports keyed by snapshot id; unknown snapshots are a
// contract violation so fixture gaps fail loudly.
class ReplayChecker final : public CheckerAdapter {
 public:
  explicit ReplayChecker(std::map<std::string, TypeReport> reports);
  static ReplayChecker from_json(const std::string& json_text);

  std::string name() const override { return "replay"; }
  bool reentrant() const override { return true; }
  TypeReport check(const ProjectSnapshot& snapshot) override;

 private:
  std::map<std::string, TypeReport> reports_;
};

// Runs an external checker command against a materialized snapshot copy and
// parses its stdout with the configured dialect.
class CommandChecker final : public CheckerAdapter {
 public:
  CommandChecker(std::vector<std::string> argv, std::string dialect,
                 double timeout_seconds, std::string version = "external");

  std::string name() const override { return "command"; }
  std::string version() const override { return version_; }
  TypeReport check(const ProjectSnapshot& snapshot) override;

 private:
  std::vector<std::string> argv_;
  std::string dialect_;
  double timeout_seconds_;
  std::string version_;
};

TypeReport run_checker(CheckerAdapter& adapter, const ProjectSnapshot& snapshot);

}  // namespace typedrift

#endif  // TYPEDRIFT_CHECKER_HPP
