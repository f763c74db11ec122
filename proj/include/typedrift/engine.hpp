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

#ifndef TYPEDRIFT_ENGINE_HPP
#define TYPEDRIFT_ENGINE_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "typedrift/corpus.hpp"

namespace typedrift {

enum class RefactoringType {
  RenameField,
  RenameMethod,
  RenameClass,
  InlineMethod,
  ExtractMethod,
  MoveFieldMethod,
  UseFunction,
};

const char* refactoring_type_name(RefactoringType type);
RefactoringType refactoring_type_from(const std::string& name);

struct RefactoringRequest {
  RefactoringType type = RefactoringType::RenameMethod;
  TargetSite target;
  std::map<std::string, std::string> params;  // e.g. new_name, destination
  std::string seed_tag;                       // the draw that produced it

  // Stable identity of (type, target, params); the seed tag is excluded so
  // replay bundles survive re-generation.
  std::string fingerprint() const;
};

struct EngineOutcome {
  enum class Status { Applied, CannotApply, Crashed };

  Status status = Status::CannotApply;
  ProjectSnapshot refactored;  // meaningful only when Applied
  bool no_op = false;          // Applied with unchanged content
  std::string reason;          // CannotApply: the engine's refusal message
  std::string detail;          // Crashed: condensed cause
  std::string captured;        // Crashed: raw engine output, verbatim

  static EngineOutcome applied(ProjectSnapshot refactored, bool no_op = false);
  static EngineOutcome cannot_apply(std::string reason);
  static EngineOutcome crashed(std::string detail, std::string captured = {});
};

const char* outcome_status_name(EngineOutcome::Status status);
EngineOutcome::Status outcome_status_from(const std::string& name);

class EngineAdapter {
 public:
  virtual ~EngineAdapter() = default;
  virtual std::string name() const = 0;
  virtual std::string version() const { return "0"; }
  virtual bool supports(RefactoringType type) const = 0;
  virtual bool reentrant() const { return false; }
  virtual EngineOutcome apply(const ProjectSnapshot& snapshot,
                              const RefactoringRequest& request) = 0;
};

// Uniform entry point: unsupported types are a ContractError, adapter
// exceptions become Crashed outcomes, and the input snapshot is verified
// unchanged afterwards.
EngineOutcome apply_refactoring(EngineAdapter& adapter, const ProjectSnapshot& snapshot,
                                const RefactoringRequest& request);

// Deliberately precondition-free rename engine: it renames the declaration
// and every reference it can resolve statically, and applies even renames
// that are semantically unsafe (dunders, reserved words, collisions). It is
// the hermetic source of the bug classes the harness must detect.
EngineOutcome builtin_rename(const ProjectSnapshot& snapshot,
                             const RefactoringRequest& request);

class BuiltinRenameEngine final : public EngineAdapter {
 public:
  std::string name() const override { return "builtin-rename"; }
  std::string version() const override;
  bool supports(RefactoringType type) const override;
  bool reentrant() const override { return true; }
  EngineOutcome apply(const ProjectSnapshot& snapshot,
                      const RefactoringRequest& request) override;
};

// Replays recorded outcomes keyed by (snapshot_id, request fingerprint).
class ReplayEngine final : public EngineAdapter {
 public:
  struct Entry {
    std::string snapshot_id;
    std::string fingerprint;
    EngineOutcome outcome;
  };

  explicit ReplayEngine(std::vector<Entry> entries);
  static ReplayEngine from_json(const std::string& json_text);  // InputError on bad bundles
  static std::string bundle_to_json(const std::vector<Entry>& entries);

  std::string name() const override { return "replay"; }
  bool supports(RefactoringType) const override { return true; }
  bool reentrant() const override { return true; }
  EngineOutcome apply(const ProjectSnapshot& snapshot,
                      const RefactoringRequest& request) override;

 private:
  std::map<std::pair<std::string, std::string>, EngineOutcome> entries_;
};

// Drives an external engine over a materialized temporary copy:
//   <command...> <project-dir> <request.json>
// Exit 0 means the tree was rewritten in place (Applied); exit 3 with a
// refusal message on stdout means CannotApply; anything else, a signal, or
// a timeout is Crashed with the output captured verbatim.
class CommandEngine final : public EngineAdapter {
 public:
  CommandEngine(std::vector<std::string> argv, double timeout_seconds,
                std::string version = "external");

  std::string name() const override { return "command"; }
  std::string version() const override { return version_; }
  bool supports(RefactoringType) const override { return true; }
  EngineOutcome apply(const ProjectSnapshot& snapshot,
                      const RefactoringRequest& request) override;

 private:
  std::vector<std::string> argv_;
  double timeout_seconds_;
  std::string version_;
};

}  // namespace typedrift

#endif  // TYPEDRIFT_ENGINE_HPP
