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

#include "typedrift/serde.hpp"

namespace typedrift {

Json to_json(const DiagnosticKey& key) {
  return Json{{"kind", key.kind}, {"code", key.code}};
}

DiagnosticKey diagnostic_key_from_json(const Json& j) {
  return {j.at("kind").get<std::string>(), j.at("code").get<int>()};
}

Json to_json(const Diagnostic& diagnostic) {
  return Json{{"file", diagnostic.file},
              {"line", diagnostic.line},
              {"kind", diagnostic.key.kind},
              {"code", diagnostic.key.code},
              {"message", diagnostic.message}};
}

Diagnostic diagnostic_from_json(const Json& j) {
  Diagnostic d;
  d.file = j.at("file").get<std::string>();
  d.line = j.at("line").get<int>();
  d.key = {j.at("kind").get<std::string>(), j.at("code").get<int>()};
  d.message = j.value("message", "");
  return d;
}

Json to_json(const TypeReport& report) {
  Json diagnostics = Json::array();
  for (const auto& d : report.diagnostics) diagnostics.push_back(to_json(d));
  Json j{{"snapshot_id", report.snapshot_id},
         {"checker", {{"name", report.checker_name}, {"version", report.checker_version}}},
         {"diagnostics", diagnostics}};
  if (!report.unparsed_lines.empty()) j["unparsed_lines"] = report.unparsed_lines;
  return j;
}

TypeReport type_report_from_json(const Json& j) {
  TypeReport report;
  report.snapshot_id = j.value("snapshot_id", "");
  if (j.contains("checker")) {
    report.checker_name = j.at("checker").value("name", "");
    report.checker_version = j.at("checker").value("version", "");
  }
  for (const auto& d : j.value("diagnostics", Json::array())) {
    report.diagnostics.push_back(diagnostic_from_json(d));
  }
  for (const auto& line : j.value("unparsed_lines", Json::array())) {
    report.unparsed_lines.push_back(line.get<std::string>());
  }
  return report;
}

Json to_json(const NormalizedReport& report) {
  Json keys = Json::array();
  for (const auto& [key, count] : report.counts()) {
    keys.push_back(Json{{"kind", key.kind}, {"code", key.code}, {"count", count}});
  }
  return Json{{"keys", keys}};
}

NormalizedReport normalized_report_from_json(const Json& j) {
  NormalizedReport::Counts counts;
  for (const auto& entry : j.value("keys", Json::array())) {
    counts[{entry.at("kind").get<std::string>(), entry.at("code").get<int>()}] =
        entry.at("count").get<int>();
  }
  return NormalizedReport(std::move(counts));
}

Json to_json(const IntroducedErrors& errors) {
  return Json{{"before_snapshot_id", errors.before_snapshot_id},
              {"after_snapshot_id", errors.after_snapshot_id},
              {"introduced", to_json(errors.introduced)},
              {"disappeared", to_json(errors.disappeared)}};
}

IntroducedErrors introduced_errors_from_json(const Json& j) {
  IntroducedErrors errors;
  errors.before_snapshot_id = j.value("before_snapshot_id", "");
  errors.after_snapshot_id = j.value("after_snapshot_id", "");
  errors.introduced = normalized_report_from_json(j.at("introduced"));
  errors.disappeared = normalized_report_from_json(j.at("disappeared"));
  return errors;
}

Json to_json(const TargetSite& site) {
  return Json{{"file", site.file},
              {"kind", target_kind_name(site.kind)},
              {"qualified_name", site.qualified_name},
              {"start", site.start},
              {"end", site.end}};
}

TargetSite target_site_from_json(const Json& j) {
  TargetSite site;
  site.file = j.at("file").get<std::string>();
  site.kind = target_kind_from(j.at("kind").get<std::string>());
  site.qualified_name = j.at("qualified_name").get<std::string>();
  site.start = j.at("start").get<uint32_t>();
  site.end = j.at("end").get<uint32_t>();
  return site;
}

Json to_json(const TargetIndex& index) {
  Json targets = Json::array();
  for (const auto& [kind, sites] : index.targets) {
    (void)kind;
    for (const auto& site : sites) targets.push_back(to_json(site));
  }
  Json warnings = Json::array();
  for (const auto& warning : index.warnings) {
    warnings.push_back(Json{{"file", warning.file}, {"message", warning.message}});
  }
  Json j{{"snapshot_id", index.snapshot_id}, {"targets", targets}};
  if (!warnings.empty()) j["warnings"] = warnings;
  return j;
}

Json to_json(const RefactoringRequest& request) {
  return Json{{"refactoring_type", refactoring_type_name(request.type)},
              {"target", to_json(request.target)},
              {"params", request.params},
              {"seed_tag", request.seed_tag}};
}

RefactoringRequest request_from_json(const Json& j) {
  RefactoringRequest request;
  request.type = refactoring_type_from(j.at("refactoring_type").get<std::string>());
  request.target = target_site_from_json(j.at("target"));
  for (const auto& [key, value] : j.value("params", Json::object()).items()) {
    request.params[key] = value.get<std::string>();
  }
  request.seed_tag = j.value("seed_tag", "");
  return request;
}

Json engine_request_file_json(const RefactoringRequest& request) {
  return Json{{"refactoring_type", refactoring_type_name(request.type)},
              {"file", request.target.file},
              {"start", request.target.start},
              {"end", request.target.end},
              {"params", request.params}};
}

Json to_json(const OutcomeSummary& outcome) {
  Json j{{"status", outcome_status_name(outcome.status)}};
  if (outcome.no_op) j["no_op"] = true;
  if (!outcome.reason.empty()) j["reason"] = outcome.reason;
  if (!outcome.detail.empty()) j["detail"] = outcome.detail;
  if (!outcome.captured.empty()) j["captured"] = outcome.captured;
  if (!outcome.refactored_snapshot_id.empty()) {
    j["refactored_snapshot_id"] = outcome.refactored_snapshot_id;
  }
  return j;
}

OutcomeSummary outcome_summary_from_json(const Json& j) {
  OutcomeSummary outcome;
  outcome.status = outcome_status_from(j.at("status").get<std::string>());
  outcome.no_op = j.value("no_op", false);
  outcome.reason = j.value("reason", "");
  outcome.detail = j.value("detail", "");
  outcome.captured = j.value("captured", "");
  outcome.refactored_snapshot_id = j.value("refactored_snapshot_id", "");
  return outcome;
}

Json to_json(const AttemptRecord& record) {
  Json j{{"attempt_id", record.attempt_id},
         {"request", to_json(record.request)},
         {"outcome", to_json(record.outcome)},
         {"classification", classification_name(record.classification)},
         {"triage_label", triage_label_name(record.triage_label)}};
  if (record.before) j["before"] = to_json(*record.before);
  if (record.after) j["after"] = to_json(*record.after);
  if (record.introduced) j["introduced"] = to_json(*record.introduced);
  if (!record.attempt_error.empty()) j["attempt_error"] = record.attempt_error;
  return j;
}

AttemptRecord attempt_record_from_json(const Json& j) {
  AttemptRecord record;
  record.attempt_id = j.at("attempt_id").get<int>();
  record.request = request_from_json(j.at("request"));
  record.outcome = outcome_summary_from_json(j.at("outcome"));
  record.classification = classification_from(j.at("classification").get<std::string>());
  record.triage_label = triage_label_from(j.at("triage_label").get<std::string>());
  if (j.contains("before")) record.before = normalized_report_from_json(j.at("before"));
  if (j.contains("after")) record.after = normalized_report_from_json(j.at("after"));
  if (j.contains("introduced")) {
    record.introduced = introduced_errors_from_json(j.at("introduced"));
  }
  record.attempt_error = j.value("attempt_error", "");
  return record;
}

Json to_json(const RunSummaryRow& row) {
  return Json{{"refactoring", row.refactoring},
              {"strategy", row.strategy},
              {"variables", row.variables},
              {"cannot_apply", row.cannot_apply},
              {"failures", row.failures},
              {"false_positives", row.false_positives},
              {"correct", row.correct}};
}

RunSummaryRow summary_row_from_json(const Json& j) {
  RunSummaryRow row;
  row.refactoring = j.at("refactoring").get<std::string>();
  row.strategy = j.at("strategy").get<std::string>();
  row.variables = j.at("variables").get<int>();
  row.cannot_apply = j.at("cannot_apply").get<int>();
  row.failures = j.at("failures").get<int>();
  row.false_positives = j.at("false_positives").get<int>();
  row.correct = j.at("correct").get<int>();
  return row;
}

std::string dump_pretty(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Input, std::string("invalid JSON in ") + what + ": " + e.what());
  }
}

}  // namespace typedrift
