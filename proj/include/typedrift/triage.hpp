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

#ifndef TYPEDRIFT_TRIAGE_HPP
#define TYPEDRIFT_TRIAGE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "typedrift/diff.hpp"
#include "typedrift/engine.hpp"

namespace typedrift {

enum class Classification { Correct, Failure, CannotApply, Crashed };
enum class TriageLabel { Unreviewed, FalsePositive, Confirmed };

const char* classification_name(Classification c);
Classification classification_from(const std::string& name);
const char* triage_label_name(TriageLabel label);
TriageLabel triage_label_from(const std::string& name);

// Engine outcome without the refactored file contents; the snapshot itself
// lives in content-addressed storage.
struct OutcomeSummary {
  EngineOutcome::Status status = EngineOutcome::Status::CannotApply;
  bool no_op = false;
  std::string reason;
  std::string detail;
  std::string captured;
  std::string refactored_snapshot_id;  // Applied only

  static OutcomeSummary from(const EngineOutcome& outcome);
};

struct AttemptRecord {
  int attempt_id = 0;
  RefactoringRequest request;
  OutcomeSummary outcome;
  std::optional<NormalizedReport> before;      // Applied only
  std::optional<NormalizedReport> after;       // Applied only
  std::optional<IntroducedErrors> introduced;  // Applied only
  Classification classification = Classification::CannotApply;
  TriageLabel triage_label = TriageLabel::Unreviewed;
  std::string attempt_error;  // internal error captured by crash containment
};

Classification classify(EngineOutcome::Status status,
                        const std::optional<IntroducedErrors>& introduced);

// Failures sharing the same distinct-kind set form one bug candidate.
struct FailureGroup {
  std::vector<DiagnosticKey> key;  // sorted distinct keys
  std::vector<int> members;        // attempt ids
  int representative = -1;

  std::string key_display() const;
  std::string key_slug() const;  // filesystem-safe
};

std::vector<FailureGroup> group_failures(std::span<const AttemptRecord> failures,
                                         uint64_t seed);

struct RunSummaryRow {
  std::string refactoring;
  std::string strategy;
  int variables = 0;
  int cannot_apply = 0;  // CannotApply plus Crashed
  int failures = 0;      // Failure not labeled FalsePositive
  int false_positives = 0;
  int correct = 0;

  bool row_sum_ok() const {
    return variables == cannot_apply + failures + false_positives + correct;
  }

  friend bool operator==(const RunSummaryRow&, const RunSummaryRow&) = default;
};

RunSummaryRow summarize_run(std::span<const AttemptRecord> records,
                            const std::string& refactoring_label,
                            const std::string& strategy_label);

RunSummaryRow summary_totals(std::span<const RunSummaryRow> rows);

}  // namespace typedrift

#endif  // TYPEDRIFT_TRIAGE_HPP
