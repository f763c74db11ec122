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

#ifndef TYPEDRIFT_STRATEGY_HPP
#define TYPEDRIFT_STRATEGY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "typedrift/corpus.hpp"
#include "typedrift/engine.hpp"

namespace typedrift {

enum class StrategyKind { ProjectMethodNames, ProjectFieldNames, Keywords };

const char* strategy_kind_name(StrategyKind kind);
StrategyKind strategy_kind_from(const std::string& name);

struct StrategyOptions {
  // Overrides the embedded reserved-word list for the Keywords strategy.
  std::vector<std::string> keyword_pool;
};

// Candidate new-name pool for a strategy over a snapshot: the distinct
// method/field names enumerated from the snapshot, or the reserved words of
// the subject-language version.
std::vector<std::string> strategy_pool(StrategyKind strategy, const ProjectSnapshot& snapshot,
                                       const StrategyOptions& options = {});

// Deterministically draws (target, value) pairs without replacement. No
// request pairs a target with its own current name.
std::vector<RefactoringRequest> generate_requests(const TargetIndex& index,
                                                  RefactoringType type,
                                                  StrategyKind strategy,
                                                  const std::vector<std::string>& pool,
                                                  uint64_t seed, size_t limit);

// Convenience overload that builds the pool from the snapshot.
std::vector<RefactoringRequest> generate_requests(const TargetIndex& index,
                                                  const ProjectSnapshot& snapshot,
                                                  RefactoringType type,
                                                  StrategyKind strategy, uint64_t seed,
                                                  size_t limit,
                                                  const StrategyOptions& options = {});

// Target kinds a refactoring type draws from.
std::vector<TargetKind> target_kinds_for(RefactoringType type);

}  // namespace typedrift

#endif  // TYPEDRIFT_STRATEGY_HPP
