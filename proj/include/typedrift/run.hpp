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

#ifndef TYPEDRIFT_RUN_HPP
#define TYPEDRIFT_RUN_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "typedrift/report.hpp"
#include "typedrift/strategy.hpp"

namespace typedrift {

struct AdapterSpec {
  std::string name;                // builtin-rename | micro | replay | command
  std::vector<std::string> argv;   // command adapters
  std::string bundle_path;         // replay adapters
  std::string dialect = "pyre";    // command checkers
};

struct RunConfig {
  std::string project_root;
  std::vector<std::string> include_globs;  // default **/*.py
  AdapterSpec engine{.name = "builtin-rename"};
  AdapterSpec checker{.name = "micro"};
  RefactoringType refactoring = RefactoringType::RenameMethod;
  StrategyKind strategy = StrategyKind::ProjectMethodNames;
  uint64_t seed = 1;
  size_t limit = 10;
  size_t workers = 1;
  double engine_timeout_s = 120.0;
  double checker_timeout_s = 300.0;
  std::string store_path = "runs";
  bool reduce = true;
  int reduce_budget = 2000;
  std::vector<std::string> keyword_pool;  // overrides the embedded list

  // Throws ConfigError; called before any work starts.
  void validate() const;
};

RunConfig run_config_from_json(const std::string& json_text);
std::string run_config_to_json(const RunConfig& config);

// Environment variables TYPEDRIFT_ENGINE_CMD / TYPEDRIFT_CHECKER_CMD override
// the command path of command adapters only.
std::unique_ptr<EngineAdapter> make_engine(const RunConfig& config);
std::unique_ptr<CheckerAdapter> make_checker(const RunConfig& config);

struct DetectResult {
  int exit_code = 0;  // 0 clean, 2 failure groups exist
  std::string run_dir;
  std::string run_id;
  RunSummary summary;
  std::vector<FailureGroup> groups;
  size_t attempts = 0;
};

// The full pipeline: load, enumerate, generate, apply/check/diff/classify
// per attempt, group, optionally reduce representatives, persist, summarize.
// Per-attempt errors are recorded in the store and never abort the run.
DetectResult run_detect(const RunConfig& config);

}  // namespace typedrift

#endif  // TYPEDRIFT_RUN_HPP
