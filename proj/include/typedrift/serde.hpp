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

#ifndef TYPEDRIFT_SERDE_HPP
#define TYPEDRIFT_SERDE_HPP

#include <json.hpp>

#include "typedrift/diff.hpp"
#include "typedrift/engine.hpp"
#include "typedrift/triage.hpp"

namespace typedrift {

// JSON conversions for every artifact that crosses a file boundary. nlohmann
// objects keep keys sorted, so equal values serialize to identical bytes.

using Json = nlohmann::json;

Json to_json(const DiagnosticKey& key);
DiagnosticKey diagnostic_key_from_json(const Json& j);

Json to_json(const Diagnostic& diagnostic);
Diagnostic diagnostic_from_json(const Json& j);

Json to_json(const TypeReport& report);
TypeReport type_report_from_json(const Json& j);

Json to_json(const NormalizedReport& report);
NormalizedReport normalized_report_from_json(const Json& j);

Json to_json(const IntroducedErrors& errors);
IntroducedErrors introduced_errors_from_json(const Json& j);

Json to_json(const TargetSite& site);
TargetSite target_site_from_json(const Json& j);

Json to_json(const TargetIndex& index);

Json to_json(const RefactoringRequest& request);
RefactoringRequest request_from_json(const Json& j);

// Engine-facing request file: exactly (refactoring_type, file, start, end, params).
Json engine_request_file_json(const RefactoringRequest& request);

Json to_json(const OutcomeSummary& outcome);
OutcomeSummary outcome_summary_from_json(const Json& j);

Json to_json(const AttemptRecord& record);
AttemptRecord attempt_record_from_json(const Json& j);

Json to_json(const RunSummaryRow& row);
RunSummaryRow summary_row_from_json(const Json& j);

std::string dump_pretty(const Json& j);  // 2-space indent, trailing newline

Json parse_json(const std::string& text, const char* what);  // InputError on bad JSON

}  // namespace typedrift

#endif  // TYPEDRIFT_SERDE_HPP
