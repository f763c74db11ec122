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

#include "typedrift/strategy.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>

#include "typedrift/py/lexer.hpp"
#include "typedrift/py/parser.hpp"
#include "typedrift/util/text.hpp"

namespace typedrift {

namespace {

// Portable bounded draw: uniform_int_distribution is not specified
// bit-exactly across standard libraries, so replay determinism needs our own
// rejection sampler over the raw engine output.
uint64_t bounded(std::mt19937_64& rng, uint64_t n) {
  if (n <= 1) return 0;
  uint64_t limit = std::numeric_limits<uint64_t>::max() -
                   std::numeric_limits<uint64_t>::max() % n;
  for (;;) {
    uint64_t draw = rng();
    if (draw < limit) return draw % n;
  }
}

std::string bare_name(const TargetSite& site) {
  size_t dot = site.qualified_name.rfind('.');
  return dot == std::string::npos ? site.qualified_name
                                  : site.qualified_name.substr(dot + 1);
}

// The member name of the second path component onward, e.g. "C.f" of "m.C.f".
std::string class_qualified(const TargetSite& site) {
  size_t dot = site.qualified_name.rfind('.');
  return dot == std::string::npos ? std::string{} : site.qualified_name.substr(0, dot);
}

std::vector<std::string> distinct_names(const TargetIndex& index, TargetKind kind) {
  std::set<std::string> names;
  for (const auto& site : index.of(kind)) names.insert(bare_name(site));
  return {names.begin(), names.end()};
}

// Region for an extract: the method body minus its final return, when the
// body has at least two statements.
std::optional<std::pair<uint32_t, uint32_t>> extract_region(const ProjectSnapshot& snapshot,
                                                            const TargetSite& site) {
  const std::string* text = snapshot.file_text(site.file);
  if (text == nullptr) return std::nullopt;
  auto outcome = py::parse_module(*text);
  if (!outcome.ok()) return std::nullopt;

  const py::FunctionDefStmt* found = nullptr;
  std::function<void(const std::vector<py::StmtPtr>&)> walk =
      [&](const std::vector<py::StmtPtr>& body) {
        for (const auto& stmt : body) {
          if (stmt->kind == py::StmtKind::FunctionDef) {
            const auto& fn = py::as<py::FunctionDefStmt>(*stmt);
            if (fn.name_begin.chr == site.start && fn.name_end.chr == site.end) {
              found = &fn;
            }
            walk(fn.body);
          } else if (stmt->kind == py::StmtKind::ClassDef) {
            walk(py::as<py::ClassDefStmt>(*stmt).body);
          } else if (stmt->kind == py::StmtKind::If) {
            const auto& node = py::as<py::IfStmt>(*stmt);
            walk(node.body);
            walk(node.orelse);
          }
        }
      };
  walk(outcome.module->body);
  if (found == nullptr || found->body.size() < 2) return std::nullopt;

  size_t last = found->body.size() - 1;
  if (found->body[last]->kind == py::StmtKind::Return) {
    --last;
  }
  uint32_t begin = found->body.front()->begin.chr;
  uint32_t end = found->body[last]->end.chr;
  if (end <= begin) return std::nullopt;
  return std::make_pair(begin, end);
}

std::optional<std::string> move_destination(const ProjectSnapshot& snapshot,
                                            const TargetSite& site,
                                            std::mt19937_64& rng) {
  TargetIndex classes = enumerate_targets(snapshot, TargetKind::Class);
  std::vector<std::string> candidates;
  std::string own_class = class_qualified(site);
  for (const auto& cls : classes.of(TargetKind::Class)) {
    if (cls.file != site.file) continue;  // destinations stay within the module
    if (cls.qualified_name == own_class) continue;
    candidates.push_back(cls.qualified_name);
  }
  if (candidates.empty()) return std::nullopt;
  return candidates[bounded(rng, candidates.size())];
}

}  // namespace

const char* strategy_kind_name(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::ProjectMethodNames: return "ProjectMethodNames";
    case StrategyKind::ProjectFieldNames: return "ProjectFieldNames";
    case StrategyKind::Keywords: return "Keywords";
  }
  return "ProjectMethodNames";
}

StrategyKind strategy_kind_from(const std::string& name) {
  if (name == "ProjectMethodNames") return StrategyKind::ProjectMethodNames;
  if (name == "ProjectFieldNames") return StrategyKind::ProjectFieldNames;
  if (name == "Keywords") return StrategyKind::Keywords;
  throw Error(ErrorKind::Config, "unknown strategy: " + name);
}

std::vector<TargetKind> target_kinds_for(RefactoringType type) {
  switch (type) {
    case RefactoringType::RenameField: return {TargetKind::Field};
    case RefactoringType::RenameMethod: return {TargetKind::Method};
    case RefactoringType::RenameClass: return {TargetKind::Class};
    case RefactoringType::InlineMethod: return {TargetKind::Method};
    case RefactoringType::ExtractMethod: return {TargetKind::Method};
    case RefactoringType::MoveFieldMethod: return {TargetKind::Method, TargetKind::Field};
    case RefactoringType::UseFunction: return {TargetKind::Method};
  }
  return {TargetKind::Method};
}

std::vector<std::string> strategy_pool(StrategyKind strategy, const ProjectSnapshot& snapshot,
                                       const StrategyOptions& options) {
  switch (strategy) {
    case StrategyKind::ProjectMethodNames:
      return distinct_names(enumerate_targets(snapshot, TargetKind::Method),
                            TargetKind::Method);
    case StrategyKind::ProjectFieldNames:
      return distinct_names(enumerate_targets(snapshot, TargetKind::Field),
                            TargetKind::Field);
    case StrategyKind::Keywords:
      return options.keyword_pool.empty() ? py::python_keywords() : options.keyword_pool;
  }
  return {};
}

std::vector<RefactoringRequest> generate_requests(const TargetIndex& index,
                                                  RefactoringType type,
                                                  StrategyKind strategy,
                                                  const std::vector<std::string>& pool,
                                                  uint64_t seed, size_t limit) {
  if (limit == 0) {
    throw Error(ErrorKind::Strategy, "request limit must be at least 1");
  }
  std::vector<TargetSite> targets;
  for (TargetKind kind : target_kinds_for(type)) {
    const auto& sites = index.of(kind);
    targets.insert(targets.end(), sites.begin(), sites.end());
  }
  if (targets.empty()) {
    throw Error(ErrorKind::Strategy,
                std::string("no targets of the kind consumed by ") +
                    refactoring_type_name(type));
  }

  bool needs_name = type == RefactoringType::RenameField ||
                    type == RefactoringType::RenameMethod ||
                    type == RefactoringType::RenameClass ||
                    type == RefactoringType::ExtractMethod;
  if (needs_name && pool.empty()) {
    throw Error(ErrorKind::Strategy, std::string("empty name pool for strategy ") +
                                         strategy_kind_name(strategy));
  }

  // Enumerate the (target, value) pair space, drop self-renames, then draw
  // without replacement via a partial Fisher-Yates shuffle.
  struct Pair {
    size_t target;
    size_t value;  // pool index; SIZE_MAX when the type takes no name
  };
  std::vector<Pair> space;
  if (needs_name) {
    for (size_t t = 0; t < targets.size(); ++t) {
      std::string current = bare_name(targets[t]);
      for (size_t v = 0; v < pool.size(); ++v) {
        if (pool[v] == current) continue;
        space.push_back({t, v});
      }
    }
  } else {
    for (size_t t = 0; t < targets.size(); ++t) space.push_back({t, SIZE_MAX});
  }
  if (space.empty()) {
    throw Error(ErrorKind::Strategy, "the pairing space is empty");
  }

  std::mt19937_64 rng(seed);
  std::vector<RefactoringRequest> requests;
  size_t draws = std::min(limit, space.size());
  for (size_t i = 0; i < draws; ++i) {
    size_t j = i + bounded(rng, space.size() - i);
    std::swap(space[i], space[j]);
  }

  for (size_t i = 0; i < draws; ++i) {
    const Pair& pair = space[i];
    RefactoringRequest request;
    request.type = type;
    request.target = targets[pair.target];
    request.seed_tag = "seed=" + std::to_string(seed) + "#" + std::to_string(i);
    switch (type) {
      case RefactoringType::RenameField:
      case RefactoringType::RenameMethod:
      case RefactoringType::RenameClass:
        request.params["new_name"] = pool[pair.value];
        break;
      case RefactoringType::ExtractMethod:
        request.params["extracted_name"] = pool[pair.value];
        break;
      case RefactoringType::InlineMethod:
      case RefactoringType::UseFunction:
      case RefactoringType::MoveFieldMethod:
        break;
    }
    requests.push_back(std::move(request));
  }
  return requests;
}

std::vector<RefactoringRequest> generate_requests(const TargetIndex& index,
                                                  const ProjectSnapshot& snapshot,
                                                  RefactoringType type,
                                                  StrategyKind strategy, uint64_t seed,
                                                  size_t limit,
                                                  const StrategyOptions& options) {
  std::vector<std::string> pool = strategy_pool(strategy, snapshot, options);
  std::vector<RefactoringRequest> requests =
      generate_requests(index, type, strategy, pool, seed, limit);

  // Parameters that depend on the snapshot text, not just the index.
  std::mt19937_64 param_rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<RefactoringRequest> completed;
  for (auto& request : requests) {
    if (request.type == RefactoringType::ExtractMethod) {
      auto region = extract_region(snapshot, request.target);
      if (!region) continue;  // no coherent region: skip the target
      request.params["region_start"] = std::to_string(region->first);
      request.params["region_end"] = std::to_string(region->second);
    } else if (request.type == RefactoringType::MoveFieldMethod) {
      auto destination = move_destination(snapshot, request.target, param_rng);
      if (!destination) continue;  // no other class in the module
      request.params["destination"] = *destination;
    }
    completed.push_back(std::move(request));
  }
  return completed;
}

}  // namespace typedrift
