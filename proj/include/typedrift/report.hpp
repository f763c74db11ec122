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

#ifndef TYPEDRIFT_REPORT_HPP
#define TYPEDRIFT_REPORT_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "typedrift/reduce.hpp"
#include "typedrift/triage.hpp"

namespace typedrift {

struct RunSummary {
  std::vector<RunSummaryRow> rows;
};

// Plain-text table mirroring the run-summary columns, totals line appended.
// Refuses to print any row that violates the row-sum invariant.
std::string emit_summary(const RunSummary& summary);
std::string summary_to_json_text(const RunSummary& summary);

enum class ReportFormat { Markdown, Json };

struct BugReportInputs {
  FailureGroup group;
  AttemptRecord representative;
  std::optional<ReductionResult> reduction;  // absent marks the report unreduced
  std::string engine_name;
  std::string engine_version;
  std::string checker_name;
  std::string checker_version;
  std::string strategy;
};

// Deterministic document bytes for one failure group.
std::string emit_bug_report(const BugReportInputs& inputs, ReportFormat format);

// On-disk layout:
//   <store>/run-<id>/config.json
//   <store>/run-<id>/snapshots/<snapshot-id>/...        (content-addressed)
//   <store>/run-<id>/attempts/<n>/{request,outcome,diff}.json
//   <store>/run-<id>/attempts/<n>/{before,after}.report.json
//   <store>/run-<id>/attempts/<n>/triage.json            (written on review)
//   <store>/run-<id>/summary.{txt,json}
//   <store>/run-<id>/bugs/<group>/{report.md,report.json,repro/...}
class RunStore {
 public:
  static RunStore create(const std::filesystem::path& store_root, const std::string& run_id,
                         const std::string& config_json);
  static RunStore open(const std::filesystem::path& run_dir);  // StoreError when corrupt

  const std::filesystem::path& dir() const { return dir_; }
  const std::string& run_id() const { return run_id_; }
  std::string config_json() const;

  void put_snapshot(const ProjectSnapshot& snapshot);
  ProjectSnapshot load_snapshot(const std::string& snapshot_id) const;
  bool has_snapshot(const std::string& snapshot_id) const;

  void put_attempt(const AttemptRecord& record,
                   const std::optional<TypeReport>& before_report,
                   const std::optional<TypeReport>& after_report);
  AttemptRecord load_attempt(int attempt_id) const;
  std::vector<AttemptRecord> load_attempts() const;
  std::vector<int> attempt_ids() const;

  void set_triage_label(int attempt_id, TriageLabel label);

  void put_summary(const RunSummary& summary);
  std::optional<RunSummary> load_summary() const;

  void put_bug_report(const FailureGroup& group, const std::string& markdown,
                      const std::string& json_text,
                      const std::optional<ReductionResult>& reduction);

 private:
  RunStore(std::filesystem::path dir, std::string run_id);

  std::filesystem::path dir_;
  std::string run_id_;
};

}  // namespace typedrift

#endif  // TYPEDRIFT_REPORT_HPP
