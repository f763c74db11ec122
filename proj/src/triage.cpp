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

#include "typedrift/triage.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace typedrift {

const char* classification_name(Classification c) {
  switch (c) {
    case Classification::Correct: return "correct";
    case Classification::Failure: return "failure";
    case Classification::CannotApply: return "cannot_apply";
    case Classification::Crashed: return "crashed";
  }
  return "cannot_apply";
}

Classification classification_from(const std::string& name) {
  if (name == "correct") return Classification::Correct;
  if (name == "failure") return Classification::Failure;
  if (name == "cannot_apply") return Classification::CannotApply;
  if (name == "crashed") return Classification::Crashed;
  throw Error(ErrorKind::Input, "unknown classification: " + name);
}

const char* triage_label_name(TriageLabel label) {
  switch (label) {
    case TriageLabel::Unreviewed: return "unreviewed";
    case TriageLabel::FalsePositive: return "false_positive";
    case TriageLabel::Confirmed: return "confirmed";
  }
  return "unreviewed";
}

TriageLabel triage_label_from(const std::string& name) {
  if (name == "unreviewed") return TriageLabel::Unreviewed;
  if (name == "false_positive" || name == "false-positive") return TriageLabel::FalsePositive;
  if (name == "confirmed") return TriageLabel::Confirmed;
  throw Error(ErrorKind::Input, "unknown triage label: " + name);
}

OutcomeSummary OutcomeSummary::from(const EngineOutcome& outcome) {
  OutcomeSummary summary;
  summary.status = outcome.status;
  summary.no_op = outcome.no_op;
  summary.reason = outcome.reason;
  summary.detail = outcome.detail;
  summary.captured = outcome.captured;
  if (outcome.status == EngineOutcome::Status::Applied) {
    summary.refactored_snapshot_id = outcome.refactored.id();
  }
  return summary;
}

Classification classify(EngineOutcome::Status status,
                        const std::optional<IntroducedErrors>& introduced) {
  switch (status) {
    case EngineOutcome::Status::CannotApply:
      return Classification::CannotApply;
    case EngineOutcome::Status::Crashed:
      return Classification::Crashed;
    case EngineOutcome::Status::Applied:
      if (!introduced.has_value()) {
        throw Error(ErrorKind::Contract, "applied outcome without a diff");
      }
      return introduced->empty() ? Classification::Correct : Classification::Failure;
  }
  return Classification::CannotApply;
}

std::string FailureGroup::key_display() const {
  std::string out;
  for (const auto& k : key) {
    if (!out.empty()) out += ", ";
    out += k.display();
  }
  return "{" + out + "}";
}

std::string FailureGroup::key_slug() const {
  std::string out;
  for (const auto& k : key) {
    if (!out.empty()) out += "+";
    for (char c : k.kind) {
      out += (std::isalnum(static_cast<unsigned char>(c)) != 0) ? static_cast<char>(std::tolower(c)) : '-';
    }
    out += "-" + std::to_string(k.code);
  }
  return out.empty() ? "empty" : out;
}

namespace {

// Same portable draw as the strategy module.
uint64_t bounded(std::mt19937_64& rng, uint64_t n) {
  if (n <= 1) return 0;
  uint64_t limit = std::numeric_limits<uint64_t>::max() -
                   std::numeric_limits<uint64_t>::max() % n;
  for (;;) {
    uint64_t draw = rng();
    if (draw < limit) return draw % n;
  }
}

}  // namespace

std::vector<FailureGroup> group_failures(std::span<const AttemptRecord> failures,
                                         uint64_t seed) {
  std::map<std::vector<DiagnosticKey>, std::vector<int>> partition;
  for (const auto& record : failures) {
    if (record.classification != Classification::Failure) {
      throw Error(ErrorKind::Contract, "group_failures expects only Failure records");
    }
    if (!record.introduced.has_value()) {
      throw Error(ErrorKind::Contract, "failure record without introduced errors");
    }
    partition[record.introduced->introduced.distinct_keys()].push_back(record.attempt_id);
  }

  std::mt19937_64 rng(seed);
  std::vector<FailureGroup> groups;
  groups.reserve(partition.size());
  for (auto& [key, members] : partition) {
    FailureGroup group;
    group.key = key;
    std::sort(members.begin(), members.end());
    group.members = std::move(members);
    group.representative =
        group.members[bounded(rng, group.members.size())];
    groups.push_back(std::move(group));
  }
  return groups;  // map iteration is already sorted by key
}

RunSummaryRow summarize_run(std::span<const AttemptRecord> records,
                            const std::string& refactoring_label,
                            const std::string& strategy_label) {
  RunSummaryRow row;
  row.refactoring = refactoring_label;
  row.strategy = strategy_label;
  row.variables = static_cast<int>(records.size());
  for (const auto& record : records) {
    switch (record.classification) {
      case Classification::CannotApply:
      case Classification::Crashed:
        // Table-compatible accounting folds crashes into Cannot Apply.
        row.cannot_apply += 1;
        break;
      case Classification::Failure:
        if (record.triage_label == TriageLabel::FalsePositive) {
          row.false_positives += 1;
        } else {
          row.failures += 1;
        }
        break;
      case Classification::Correct:
        row.correct += 1;
        break;
    }
  }
  return row;
}

RunSummaryRow summary_totals(std::span<const RunSummaryRow> rows) {
  RunSummaryRow total;
  total.refactoring = "Total";
  for (const auto& row : rows) {
    total.variables += row.variables;
    total.cannot_apply += row.cannot_apply;
    total.failures += row.failures;
    total.false_positives += row.false_positives;
    total.correct += row.correct;
  }
  return total;
}

}  // namespace typedrift
