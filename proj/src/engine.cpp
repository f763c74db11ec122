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

#include "typedrift/engine.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>

#include "typedrift/py/analyze.hpp"
#include "typedrift/py/parser.hpp"
#include "typedrift/serde.hpp"
#include "typedrift/util/hash.hpp"
#include "typedrift/util/subprocess.hpp"

namespace typedrift {

namespace {

constexpr const char* kBuiltinRenameVersion = "1.0";

}  // namespace

const char* refactoring_type_name(RefactoringType type) {
  switch (type) {
    case RefactoringType::RenameField: return "RenameField";
    case RefactoringType::RenameMethod: return "RenameMethod";
    case RefactoringType::RenameClass: return "RenameClass";
    case RefactoringType::InlineMethod: return "InlineMethod";
    case RefactoringType::ExtractMethod: return "ExtractMethod";
    case RefactoringType::MoveFieldMethod: return "MoveFieldMethod";
    case RefactoringType::UseFunction: return "UseFunction";
  }
  return "RenameMethod";
}

RefactoringType refactoring_type_from(const std::string& name) {
  if (name == "RenameField") return RefactoringType::RenameField;
  if (name == "RenameMethod") return RefactoringType::RenameMethod;
  if (name == "RenameClass") return RefactoringType::RenameClass;
  if (name == "InlineMethod") return RefactoringType::InlineMethod;
  if (name == "ExtractMethod") return RefactoringType::ExtractMethod;
  if (name == "MoveFieldMethod") return RefactoringType::MoveFieldMethod;
  if (name == "UseFunction") return RefactoringType::UseFunction;
  throw Error(ErrorKind::Config, "unknown refactoring type: " + name);
}

std::string RefactoringRequest::fingerprint() const {
  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.emplace_back("type", refactoring_type_name(type));
  pairs.emplace_back("file", target.file);
  pairs.emplace_back("qualified_name", target.qualified_name);
  pairs.emplace_back("start", std::to_string(target.start));
  pairs.emplace_back("end", std::to_string(target.end));
  for (const auto& [key, value] : params) pairs.emplace_back("param:" + key, value);
  return util::hash_pairs(pairs);
}

EngineOutcome EngineOutcome::applied(ProjectSnapshot refactored, bool no_op) {
  EngineOutcome outcome;
  outcome.status = Status::Applied;
  outcome.refactored = std::move(refactored);
  outcome.no_op = no_op;
  return outcome;
}

EngineOutcome EngineOutcome::cannot_apply(std::string reason) {
  EngineOutcome outcome;
  outcome.status = Status::CannotApply;
  outcome.reason = std::move(reason);
  return outcome;
}

EngineOutcome EngineOutcome::crashed(std::string detail, std::string captured) {
  EngineOutcome outcome;
  outcome.status = Status::Crashed;
  outcome.detail = std::move(detail);
  outcome.captured = std::move(captured);
  return outcome;
}

const char* outcome_status_name(EngineOutcome::Status status) {
  switch (status) {
    case EngineOutcome::Status::Applied: return "applied";
    case EngineOutcome::Status::CannotApply: return "cannot_apply";
    case EngineOutcome::Status::Crashed: return "crashed";
  }
  return "cannot_apply";
}

EngineOutcome::Status outcome_status_from(const std::string& name) {
  if (name == "applied") return EngineOutcome::Status::Applied;
  if (name == "cannot_apply") return EngineOutcome::Status::CannotApply;
  if (name == "crashed") return EngineOutcome::Status::Crashed;
  throw Error(ErrorKind::Input, "unknown outcome status: " + name);
}

EngineOutcome apply_refactoring(EngineAdapter& adapter, const ProjectSnapshot& snapshot,
                                const RefactoringRequest& request) {
  if (!adapter.supports(request.type)) {
    throw Error(ErrorKind::Contract,
                adapter.name() + " does not support " +
                    refactoring_type_name(request.type));
  }
  std::string id_before = snapshot.id();
  EngineOutcome outcome;
  try {
    outcome = adapter.apply(snapshot, request);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Contract || e.kind() == ErrorKind::Input) throw;
    outcome = EngineOutcome::crashed(e.what());
  } catch (const std::exception& e) {
    outcome = EngineOutcome::crashed(e.what());
  }
  if (snapshot.id() != id_before) {
    throw Error(ErrorKind::Contract, "adapter mutated the input snapshot");
  }
  if (outcome.status == EngineOutcome::Status::Applied && !outcome.no_op &&
      outcome.refactored == snapshot) {
    outcome.no_op = true;
  }
  return outcome;
}

// ---- builtin rename ----

namespace {

struct ByteSpan {
  uint32_t begin;
  uint32_t end;

  auto operator<=>(const ByteSpan&) const = default;
};

// Walks class bodies looking for a class-level assignment target that spans
// the requested site.
const py::NameExpr* find_class_level_field(const py::ClassDefStmt& cls, uint32_t start,
                                           uint32_t end) {
  const py::NameExpr* found = nullptr;
  std::function<void(const std::vector<py::StmtPtr>&)> walk =
      [&](const std::vector<py::StmtPtr>& body) {
        for (const auto& stmt : body) {
          auto check_target = [&](const py::Expr& target) {
            if (target.kind != py::ExprKind::Name) return;
            const auto& name = py::as<py::NameExpr>(target);
            if (name.begin.chr == start && name.end.chr == end) found = &name;
          };
          switch (stmt->kind) {
            case py::StmtKind::Assign:
              for (const auto& target : py::as<py::AssignStmt>(*stmt).targets) {
                check_target(*target);
              }
              break;
            case py::StmtKind::AnnAssign:
              check_target(*py::as<py::AnnAssignStmt>(*stmt).target);
              break;
            case py::StmtKind::AugAssign:
              check_target(*py::as<py::AugAssignStmt>(*stmt).target);
              break;
            case py::StmtKind::If: {
              const auto& node = py::as<py::IfStmt>(*stmt);
              walk(node.body);
              walk(node.orelse);
              break;
            }
            default:
              break;
          }
        }
      };
  walk(cls.body);
  return found;
}

std::string splice(const std::string& text, const std::set<ByteSpan>& spans,
                   const std::string& replacement) {
  std::string out;
  out.reserve(text.size());
  uint32_t cursor = 0;
  for (const auto& span : spans) {
    out.append(text, cursor, span.begin - cursor);
    out.append(replacement);
    cursor = span.end;
  }
  out.append(text, cursor, text.size() - cursor);
  return out;
}

}  // namespace

EngineOutcome builtin_rename(const ProjectSnapshot& snapshot,
                             const RefactoringRequest& request) {
  auto new_name_it = request.params.find("new_name");
  if (new_name_it == request.params.end() || new_name_it->second.empty()) {
    throw Error(ErrorKind::Contract, "rename request without a new_name parameter");
  }
  const std::string& new_name = new_name_it->second;

  const std::string* text = snapshot.file_text(request.target.file);
  if (text == nullptr) {
    return EngineOutcome::cannot_apply("target file not in snapshot: " +
                                       request.target.file);
  }
  auto outcome = py::parse_module(*text);
  if (!outcome.ok()) {
    return EngineOutcome::cannot_apply("target file does not parse: " +
                                       outcome.error->message);
  }
  py::ModuleSemantics sem = py::analyze_module(*outcome.module);

  uint32_t start = request.target.start;
  uint32_t end = request.target.end;
  std::set<ByteSpan> edits;

  auto add_use = [&edits](const py::NameUse& use) {
    edits.insert({use.begin.byte, use.end.byte});
  };
  auto add_binding_refs = [&](int scope, const std::string& name) {
    auto it = sem.scopes[static_cast<size_t>(scope)].bindings.find(name);
    if (it == sem.scopes[static_cast<size_t>(scope)].bindings.end()) return;
    for (const auto& use : sem.bindings[static_cast<size_t>(it->second)].references) {
      add_use(use);
    }
  };
  auto add_attr_refs = [&](int class_index, const std::string& attr) {
    for (const auto& access : sem.attr_accesses) {
      if (access.attr != attr || access.receiver_class != class_index) continue;
      edits.insert({access.begin.byte, access.end.byte});
    }
  };

  switch (request.type) {
    case RefactoringType::RenameClass: {
      const py::ClassInfo* target = nullptr;
      for (const auto& cls : sem.classes) {
        if (cls.node->name_begin.chr == start && cls.node->name_end.chr == end) {
          target = &cls;
          break;
        }
      }
      if (target == nullptr) {
        return EngineOutcome::cannot_apply("no class declaration at the target span");
      }
      add_binding_refs(target->enclosing_scope, target->node->name);
      edits.insert({target->node->name_begin.byte, target->node->name_end.byte});
      break;
    }
    case RefactoringType::RenameMethod: {
      const py::FunctionInfo* target = nullptr;
      for (const auto& fn : sem.functions) {
        if (fn.node->name_begin.chr == start && fn.node->name_end.chr == end) {
          target = &fn;
          break;
        }
      }
      if (target == nullptr) {
        return EngineOutcome::cannot_apply("no function declaration at the target span");
      }
      edits.insert({target->node->name_begin.byte, target->node->name_end.byte});
      if (target->klass >= 0) {
        // References reachable statically: plain names in the class body
        // scope and attribute accesses on known instances of the class.
        add_binding_refs(sem.classes[static_cast<size_t>(target->klass)].scope,
                         target->node->name);
        add_attr_refs(target->klass, target->node->name);
      } else {
        // Module-level or nested function: the binding whose def token is
        // the target carries every lexical reference.
        for (const auto& binding : sem.bindings) {
          bool is_declaration = std::any_of(
              binding.references.begin(), binding.references.end(),
              [&](const py::NameUse& use) {
                return use.is_store && use.begin.chr == start && use.end.chr == end;
              });
          if (!is_declaration) continue;
          for (const auto& use : binding.references) add_use(use);
          break;
        }
      }
      break;
    }
    case RefactoringType::RenameField: {
      // Locate the class owning the field site: class-level target or
      // receiver-attribute store.
      int class_index = -1;
      std::string field;
      for (size_t c = 0; c < sem.classes.size(); ++c) {
        const py::NameExpr* name =
            find_class_level_field(*sem.classes[c].node, start, end);
        if (name != nullptr) {
          class_index = static_cast<int>(c);
          field = name->id;
          break;
        }
      }
      if (class_index < 0) {
        for (const auto& access : sem.attr_accesses) {
          if (access.begin.chr == start && access.end.chr == end && access.is_store &&
              access.receiver_class >= 0) {
            class_index = access.receiver_class;
            field = access.attr;
            break;
          }
        }
      }
      if (class_index < 0) {
        return EngineOutcome::cannot_apply("no field definition at the target span");
      }
      add_binding_refs(sem.classes[static_cast<size_t>(class_index)].scope, field);
      add_attr_refs(class_index, field);
      break;
    }
    default:
      throw Error(ErrorKind::Contract,
                  std::string("builtin rename cannot handle ") +
                      refactoring_type_name(request.type));
  }

  if (edits.empty()) {
    return EngineOutcome::cannot_apply("no reference tokens found for the target");
  }
  std::string rewritten = splice(*text, edits, new_name);
  bool no_op = rewritten == *text;
  return EngineOutcome::applied(snapshot.with_file(request.target.file, std::move(rewritten)),
                                no_op);
}

std::string BuiltinRenameEngine::version() const { return kBuiltinRenameVersion; }

bool BuiltinRenameEngine::supports(RefactoringType type) const {
  return type == RefactoringType::RenameField || type == RefactoringType::RenameMethod ||
         type == RefactoringType::RenameClass;
}

EngineOutcome BuiltinRenameEngine::apply(const ProjectSnapshot& snapshot,
                                         const RefactoringRequest& request) {
  return builtin_rename(snapshot, request);
}

// ---- replay ----

ReplayEngine::ReplayEngine(std::vector<Entry> entries) {
  for (auto& entry : entries) {
    entries_.emplace(std::make_pair(entry.snapshot_id, entry.fingerprint),
                     std::move(entry.outcome));
  }
}

ReplayEngine ReplayEngine::from_json(const std::string& json_text) {
  Json j = parse_json(json_text, "engine replay bundle");
  std::vector<Entry> entries;
  if (!j.contains("entries") || !j.at("entries").is_array()) {
    throw Error(ErrorKind::Input, "engine replay bundle has no entries array");
  }
  for (const auto& entry_json : j.at("entries")) {
    Entry entry;
    try {
      entry.snapshot_id = entry_json.at("snapshot_id").get<std::string>();
      entry.fingerprint = entry_json.at("fingerprint").get<std::string>();
      const Json& outcome = entry_json.at("outcome");
      std::string status = outcome.at("status").get<std::string>();
      if (status == "applied") {
        ProjectSnapshot::FileMap files;
        for (const auto& [path, text] : outcome.at("files").items()) {
          files[path] = text.get<std::string>();
        }
        entry.outcome = EngineOutcome::applied(ProjectSnapshot::from_files(std::move(files)),
                                               outcome.value("no_op", false));
      } else if (status == "cannot_apply") {
        entry.outcome = EngineOutcome::cannot_apply(outcome.value("reason", ""));
      } else if (status == "crashed") {
        entry.outcome =
            EngineOutcome::crashed(outcome.value("detail", ""), outcome.value("captured", ""));
      } else {
        throw Error(ErrorKind::Input, "unknown outcome status: " + status);
      }
    } catch (const Json::exception& e) {
      throw Error(ErrorKind::Input, std::string("malformed replay entry: ") + e.what());
    }
    entries.push_back(std::move(entry));
  }
  return ReplayEngine(std::move(entries));
}

std::string ReplayEngine::bundle_to_json(const std::vector<Entry>& entries) {
  Json list = Json::array();
  for (const auto& entry : entries) {
    Json outcome{{"status", outcome_status_name(entry.outcome.status)}};
    switch (entry.outcome.status) {
      case EngineOutcome::Status::Applied: {
        Json files = Json::object();
        for (const auto& [path, text] : entry.outcome.refactored.files()) {
          files[path] = text;
        }
        outcome["files"] = std::move(files);
        if (entry.outcome.no_op) outcome["no_op"] = true;
        break;
      }
      case EngineOutcome::Status::CannotApply:
        outcome["reason"] = entry.outcome.reason;
        break;
      case EngineOutcome::Status::Crashed:
        outcome["detail"] = entry.outcome.detail;
        outcome["captured"] = entry.outcome.captured;
        break;
    }
    list.push_back(Json{{"snapshot_id", entry.snapshot_id},
                        {"fingerprint", entry.fingerprint},
                        {"outcome", std::move(outcome)}});
  }
  return dump_pretty(Json{{"entries", std::move(list)}});
}

EngineOutcome ReplayEngine::apply(const ProjectSnapshot& snapshot,
                                  const RefactoringRequest& request) {
  auto it = entries_.find(std::make_pair(snapshot.id(), request.fingerprint()));
  if (it == entries_.end()) {
    throw Error(ErrorKind::Contract,
                "no recorded outcome for snapshot " + snapshot.id() + ", request " +
                    request.fingerprint());
  }
  return it->second;
}

// ---- external subprocess engines ----

CommandEngine::CommandEngine(std::vector<std::string> argv, double timeout_seconds,
                             std::string version)
    : argv_(std::move(argv)), timeout_seconds_(timeout_seconds), version_(std::move(version)) {
  if (argv_.empty()) {
    throw Error(ErrorKind::Config, "command engine requires a command line");
  }
}

EngineOutcome CommandEngine::apply(const ProjectSnapshot& snapshot,
                                   const RefactoringRequest& request) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() /
                 ("typedrift-engine-" + snapshot.id().substr(0, 12) + "-" +
                  std::to_string(std::random_device{}()));
  fs::path project_dir = dir / "project";
  fs::create_directories(project_dir);
  struct Cleanup {
    fs::path dir;
    ~Cleanup() {
      std::error_code ec;
      fs::remove_all(dir, ec);
    }
  } cleanup{dir};

  materialize_snapshot(snapshot, project_dir);
  fs::path request_path = dir / "request.json";
  {
    std::ofstream out(request_path, std::ios::binary);
    out << dump_pretty(engine_request_file_json(request));
  }

  std::vector<std::string> argv = argv_;
  argv.push_back(project_dir.string());
  argv.push_back(request_path.string());
  auto result = util::run_process(argv, dir.string(), timeout_seconds_);

  if (result.timed_out) {
    return EngineOutcome::crashed("timeout",
                                  result.stdout_text + result.stderr_text);
  }
  if (!result.exited) {
    return EngineOutcome::crashed("killed by signal " + std::to_string(result.term_signal),
                                  result.stdout_text + result.stderr_text);
  }
  if (result.exit_code == 0) {
    ProjectSnapshot rewritten = load_project(project_dir);
    return EngineOutcome::applied(std::move(rewritten), /*no_op=*/false);
  }
  if (result.exit_code == 3) {
    std::string reason = result.stdout_text;
    if (size_t nl = reason.find('\n'); nl != std::string::npos) reason.resize(nl);
    return EngineOutcome::cannot_apply(reason.empty() ? "engine declined" : reason);
  }
  return EngineOutcome::crashed("exit code " + std::to_string(result.exit_code),
                                result.stdout_text + result.stderr_text);
}

}  // namespace typedrift
