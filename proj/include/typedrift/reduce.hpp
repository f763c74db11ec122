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

#ifndef TYPEDRIFT_REDUCE_HPP
#define TYPEDRIFT_REDUCE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "typedrift/checker.hpp"
#include "typedrift/engine.hpp"

namespace typedrift {

enum class Granularity {
  ModuleStatement,
  ClassMember,
  FunctionBodyStatement,
  Decorator,
  Import,
};

const char* granularity_name(Granularity g);

// A removable region: whole source lines covering one syntax-tree unit.
struct ReductionUnit {
  std::string file;
  Granularity granularity = Granularity::ModuleStatement;
  uint32_t first_line = 1;  // 1-based, inclusive
  uint32_t last_line = 1;
  bool sole_suite_statement = false;  // removal must leave a `pass` behind
  std::string indent;                 // of the unit's first line
};

// Units in document order for one granularity across all parsable files.
std::vector<ReductionUnit> enumerate_units(const ProjectSnapshot& snapshot, Granularity g);

// Removes the unit's lines, inserting a `pass` placeholder when the parent
// suite would become empty. Returns nothing when the edit is syntactically
// incoherent or does not change the file.
std::optional<ProjectSnapshot> remove_unit(const ProjectSnapshot& snapshot,
                                           const ReductionUnit& unit);

// True iff the target still resolves, the engine applies, and the distinct
// introduced-error kinds equal `target_keys` exactly. Never throws.
bool reduction_oracle(const ProjectSnapshot& candidate, const RefactoringRequest& request,
                      const std::vector<DiagnosticKey>& target_keys, EngineAdapter& engine,
                      CheckerAdapter& checker);

struct ReductionResult {
  ProjectSnapshot minimized;
  RefactoringRequest relocated_request;
  std::vector<DiagnosticKey> reproduced_keys;
  int iterations = 0;          // full passes over all granularities
  int oracle_evaluations = 0;
  bool partial = false;        // budget exhausted before a clean fixpoint
};

// Greedy linear passes, coarse to fine; a removal is kept only while the
// oracle stays true. The default budget bounds oracle evaluations per bug.
ReductionResult minimize(const ProjectSnapshot& snapshot, const RefactoringRequest& request,
                         const std::vector<DiagnosticKey>& target_keys,
                         EngineAdapter& engine, CheckerAdapter& checker,
                         int budget = 2000);

}  // namespace typedrift

#endif  // TYPEDRIFT_REDUCE_HPP
