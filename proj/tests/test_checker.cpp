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

#include <doctest.h>

#include "fixtures.hpp"
#include "typedrift/checker.hpp"
#include "typedrift/engine.hpp"
#include "typedrift/serde.hpp"

using namespace typedrift;

namespace {

NormalizedReport marks_baseline() {
  NormalizedReport expected;
  expected.add(diagnostic_key("Missing return annotation"), 3);
  expected.add(diagnostic_key("Missing parameter annotation"), 3);
  expected.add(diagnostic_key("Missing attribute annotation"), 1);
  return expected;
}

}  // namespace

TEST_CASE("micro-checker reproduces the dunder program baseline") {
  auto report = micro_check(testing::marks_snapshot());
  CHECK(report.diagnostics.size() == 7);
  CHECK(normalize(report) == marks_baseline());
}

TEST_CASE("micro-checker on an empty snapshot reports nothing") {
  auto report = micro_check(ProjectSnapshot());
  CHECK(report.diagnostics.empty());
  CHECK(normalize(report).empty());
}

TEST_CASE("micro-checker flags an attribute that is never defined") {
  auto report = micro_check(testing::snapshot_of("dog.py", testing::kUndefinedAttrSource));
  bool found = false;
  for (const auto& d : report.diagnostics) {
    if (d.key == diagnostic_key("Undefined attribute")) found = true;
  }
  CHECK(found);
}

TEST_CASE("micro-checker reports only a parsing failure for broken files") {
  auto report = micro_check(testing::snapshot_of("cat.py", testing::kMissingColonSource));
  REQUIRE(report.diagnostics.size() == 1);
  CHECK(report.diagnostics[0].key == diagnostic_key("Parsing failure"));
  CHECK(report.diagnostics[0].line == 1);
}

TEST_CASE("micro-checker flags unbound names") {
  auto report = micro_check(testing::snapshot_of("m.py", "x = undefined_thing\n"));
  REQUIRE(report.diagnostics.size() == 1);
  CHECK(report.diagnostics[0].key == diagnostic_key("Unbound name"));
}

TEST_CASE("micro-checker after the dunder rename adds exactly one operand error") {
  ProjectSnapshot before = testing::marks_snapshot();
  TargetSite site = resolve_span(before, "marks.py", "Mark.__lt__");

  RefactoringRequest request;
  request.type = RefactoringType::RenameMethod;
  request.target = site;
  request.params["new_name"] = "compare";

  EngineOutcome outcome = builtin_rename(before, request);
  REQUIRE(outcome.status == EngineOutcome::Status::Applied);

  auto after_report = micro_check(outcome.refactored);
  NormalizedReport expected = marks_baseline();
  expected.add(diagnostic_key("Unsupported operand"), 1);
  CHECK(normalize(after_report) == expected);
}

TEST_CASE("normalize preserves multiplicities and drops positions") {
  TypeReport report;
  report.snapshot_id = "s";
  Diagnostic d;
  d.key = diagnostic_key("Unbound name");
  d.file = "a.py";
  d.line = 1;
  report.diagnostics = {d, d, d};
  report.diagnostics[1].line = 7;
  report.diagnostics[2].file = "b.py";

  auto normalized = normalize(report);
  CHECK(normalized.total() == 3);
  CHECK(normalized.count(diagnostic_key("Unbound name")) == 3);
}

TEST_CASE("normalize conservation holds for generated reports") {
  TypeReport report;
  const auto& table = diagnostic_code_table();
  for (int i = 0; i < 20; ++i) {
    Diagnostic d;
    d.file = "f" + std::to_string(i % 3) + ".py";
    d.line = i + 1;
    d.key = {table[static_cast<size_t>(i) % table.size()].first,
             table[static_cast<size_t>(i) % table.size()].second};
    report.diagnostics.push_back(std::move(d));
  }
  CHECK(normalize(report).total() == 20);
}

TEST_CASE("external output dialect extracts kind and code") {
  auto report = parse_external_output(
      "pkg/m.py:18:6 Unsupported operand [58]: unsupported operand types\n", "pyre");
  REQUIRE(report.diagnostics.size() == 1);
  CHECK(report.diagnostics[0].file == "pkg/m.py");
  CHECK(report.diagnostics[0].line == 18);
  CHECK(report.diagnostics[0].key.kind == "Unsupported operand");
  CHECK(report.diagnostics[0].key.code == 58);
}

TEST_CASE("external output parser handles banners empty input and garbage") {
  auto empty = parse_external_output("", "pyre");
  CHECK(empty.diagnostics.empty());
  CHECK(empty.unparsed_lines.empty());

  auto mixed = parse_external_output(
      "Checking 3 files...\n"
      "a.py:1:0 Missing return annotation [3]: no return type\n"
      "a.py:2:4 Missing parameter annotation [2]: no annotation\n",
      "pyre");
  CHECK(mixed.diagnostics.size() == 2);
  CHECK(mixed.unparsed_lines.size() == 1);

  CHECK_THROWS_AS(parse_external_output("nothing useful here\n", "pyre"), Error);
}

TEST_CASE("replay checker replays recorded reports exactly") {
  ProjectSnapshot snapshot = testing::marks_snapshot();
  TypeReport recorded = micro_check(snapshot);

  Json bundle{{"entries", Json::array({Json{{"snapshot_id", snapshot.id()},
                                            {"report", to_json(recorded)}}})}};
  auto checker = ReplayChecker::from_json(bundle.dump());
  TypeReport replayed = run_checker(checker, snapshot);
  CHECK(to_json(replayed).dump() == to_json(recorded).dump());

  ProjectSnapshot other = testing::snapshot_of("other.py", "x = 1\n");
  CHECK_THROWS_AS((void)run_checker(checker, other), Error);
}

TEST_CASE("diagnostic code table pins calibrated codes") {
  CHECK(diagnostic_key("Missing parameter annotation").code == 2);
  CHECK(diagnostic_key("Missing return annotation").code == 3);
  CHECK(diagnostic_key("Missing attribute annotation").code == 4);
  CHECK(diagnostic_key("Unsupported operand").code == 58);
}

TEST_CASE("report order is file then line then kind") {
  auto report = micro_check(ProjectSnapshot::from_files({
      {"b.py", "def f(x):\n    return undefined_one\n"},
      {"a.py", "def g(y):\n    return undefined_two\n"},
  }));
  REQUIRE(report.diagnostics.size() >= 4);
  for (size_t i = 1; i < report.diagnostics.size(); ++i) {
    const auto& prev = report.diagnostics[i - 1];
    const auto& cur = report.diagnostics[i];
    bool ordered = prev.file < cur.file ||
                   (prev.file == cur.file &&
                    (prev.line < cur.line ||
                     (prev.line == cur.line && prev.key.kind <= cur.key.kind)));
    CHECK(ordered);
  }
}
