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

#include "typedrift/checker.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <random>
#include <regex>
#include <sstream>

#include "typedrift/py/analyze.hpp"
#include "typedrift/py/parser.hpp"
#include "typedrift/serde.hpp"
#include "typedrift/util/subprocess.hpp"
#include "typedrift/util/text.hpp"

namespace typedrift {

namespace {

constexpr const char* kMicroVersion = "1.0";

void sort_diagnostics(std::vector<Diagnostic>& diagnostics) {
  std::stable_sort(diagnostics.begin(), diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     if (a.file != b.file) return a.file < b.file;
                     if (a.line != b.line) return a.line < b.line;
                     if (a.key.kind != b.key.kind) return a.key.kind < b.key.kind;
                     if (a.key.code != b.key.code) return a.key.code < b.key.code;
                     return a.message < b.message;
                   });
}

bool is_dunder(const std::string& name) {
  return name.size() > 4 && name.starts_with("__") && name.ends_with("__");
}

struct DunderPair {
  const char* op;
  const char* direct;
  const char* reflected;
};

constexpr DunderPair kOperatorDunders[] = {
    {"<", "__lt__", "__gt__"}, {"<=", "__le__", "__ge__"}, {">", "__gt__", "__lt__"},
    {">=", "__ge__", "__le__"}, {"+", "__add__", "__radd__"},
};

}  // namespace

NormalizedReport::NormalizedReport(Counts counts) : counts_(std::move(counts)) {
  for (auto it = counts_.begin(); it != counts_.end();) {
    it = it->second <= 0 ? counts_.erase(it) : std::next(it);
  }
}

int NormalizedReport::count(const DiagnosticKey& key) const {
  auto it = counts_.find(key);
  return it == counts_.end() ? 0 : it->second;
}

int NormalizedReport::total() const {
  int n = 0;
  for (const auto& [key, count] : counts_) {
    (void)key;
    n += count;
  }
  return n;
}

void NormalizedReport::add(const DiagnosticKey& key, int n) {
  if (n <= 0) return;
  counts_[key] += n;
}

NormalizedReport NormalizedReport::merged_with(const NormalizedReport& other) const {
  NormalizedReport merged = *this;
  for (const auto& [key, count] : other.counts_) merged.add(key, count);
  return merged;
}

std::vector<DiagnosticKey> NormalizedReport::distinct_keys() const {
  std::vector<DiagnosticKey> keys;
  keys.reserve(counts_.size());
  for (const auto& [key, count] : counts_) {
    (void)count;
    keys.push_back(key);
  }
  return keys;
}

NormalizedReport normalize(const TypeReport& report) {
  NormalizedReport normalized;
  for (const auto& diagnostic : report.diagnostics) normalized.add(diagnostic.key);
  return normalized;
}

const std::vector<std::pair<std::string, int>>& diagnostic_code_table() {
  // Codes 2/3/4/58 are fixed by the built-in checker's calibration; the rest
  // give unnumbered kinds stable identities for diffing and fixtures.
  static const std::vector<std::pair<std::string, int>> table = {
      {"Missing parameter annotation", 2},
      {"Missing return annotation", 3},
      {"Missing attribute annotation", 4},
      {"Missing global annotation", 5},
      {"Incompatible parameter type", 6},
      {"Incompatible variable type", 9},
      {"Unbound name", 10},
      {"Inconsistent override", 14},
      {"Undefined attribute", 16},
      {"Unexpected keyword", 28},
      {"Call error", 29},
      {"Invalid class instantiation", 45},
      {"Unsupported operand", 58},
      {"Parsing failure", 404},
  };
  return table;
}

DiagnosticKey diagnostic_key(const std::string& kind) {
  for (const auto& [name, code] : diagnostic_code_table()) {
    if (name == kind) return {name, code};
  }
  throw Error(ErrorKind::Contract, "kind not in the diagnostic code table: " + kind);
}

namespace {

class MicroCheckFile {
 public:
  MicroCheckFile(const std::string& file, const std::string& text,
                 std::vector<Diagnostic>& out)
      : file_(file), text_(text), out_(out) {}

  void run() {
    auto outcome = py::parse_module(text_);
    if (!outcome.ok()) {
      // R1 suppresses every other rule for the file.
      emit(outcome.error->line, diagnostic_key("Parsing failure"), outcome.error->message);
      return;
    }
    sem_ = py::analyze_module(*outcome.module);
    rule_unbound_names();
    rule_undefined_attributes();
    rule_unsupported_operands();
    rule_missing_annotations();
  }

 private:
  void emit(uint32_t line, DiagnosticKey key, std::string message) {
    out_.push_back({file_, static_cast<int>(line), std::move(key), std::move(message)});
  }

  void rule_unbound_names() {
    if (sem_.module_has_star_import) return;  // anything may be bound
    for (const auto& use : sem_.unbound_loads) {
      emit(use.pos.line, diagnostic_key("Unbound name"),
           "Name `" + use.name + "` is used but not defined in the current scope.");
    }
  }

  void rule_undefined_attributes() {
    for (const auto& access : sem_.attr_accesses) {
      if (access.is_store || access.receiver_class < 0) continue;
      if (access.receiver_is_class_object && !access.receiver_is_self) continue;
      if (is_dunder(access.attr)) continue;  // protocol members come from object
      const auto& cls = sem_.classes[static_cast<size_t>(access.receiver_class)];
      if (!cls.fully_local || cls.dynamic_attrs) continue;
      if (sem_.class_defines(access.receiver_class, access.attr)) continue;
      emit(access.begin.line, diagnostic_key("Undefined attribute"),
           "`" + cls.qualified + "` has no attribute `" + access.attr + "`.");
    }
  }

  void rule_unsupported_operands() {
    for (const auto& op : sem_.comparable_ops) {
      int left = op.types.left_class;
      int right = op.types.right_class;
      if (left < 0 || right < 0) continue;
      const auto& left_cls = sem_.classes[static_cast<size_t>(left)];
      const auto& right_cls = sem_.classes[static_cast<size_t>(right)];
      if (!left_cls.fully_local || !right_cls.fully_local) continue;
      const DunderPair* pair = nullptr;
      for (const auto& candidate : kOperatorDunders) {
        if (op.op_text == candidate.op) {
          pair = &candidate;
          break;
        }
      }
      if (pair == nullptr) continue;
      if (sem_.class_defines(left, pair->direct)) continue;
      if (sem_.class_defines(right, pair->reflected)) continue;
      emit(op.pos.line, diagnostic_key("Unsupported operand"),
           "`" + op.op_text + "` is not supported for operand types `" +
               left_cls.qualified + "` and `" + right_cls.qualified + "`.");
    }
  }

  void rule_missing_annotations() {
    for (const auto& fn : sem_.functions) {
      if (fn.node->returns == nullptr) {
        emit(fn.node->name_begin.line, diagnostic_key("Missing return annotation"),
             "Return type of `" + fn.qualified + "` is not annotated.");
      }
      bool skip_receiver = fn.klass >= 0 && !fn.is_static;
      for (const auto& param : fn.node->params) {
        if (param.name.empty()) continue;  // bare * and / markers
        if (skip_receiver && param.param_kind == py::ParamKind::Plain) {
          skip_receiver = false;
          continue;
        }
        if (param.annotation == nullptr) {
          emit(param.name_begin.line, diagnostic_key("Missing parameter annotation"),
               "Parameter `" + param.name + "` has no type annotation.");
        }
      }
    }
    rule_missing_attribute_annotations();
  }

  void rule_missing_attribute_annotations() {
    // Per class: attributes assigned on the receiver inside __init__ without
    // an annotation there or at class level.
    struct AttrState {
      bool has_plain_store = false;
      bool has_annotated_store = false;
      py::SourcePos first;
    };
    std::map<std::pair<int, std::string>, AttrState> states;
    std::vector<std::pair<int, std::string>> order;

    for (const auto& access : sem_.attr_accesses) {
      if (!access.is_store || !access.receiver_is_self || access.receiver_class < 0) {
        continue;
      }
      if (access.in_function < 0) continue;
      const auto& fn = sem_.functions[static_cast<size_t>(access.in_function)];
      if (fn.node->name != "__init__" || fn.klass != access.receiver_class) continue;
      auto key = std::make_pair(access.receiver_class, access.attr);
      auto [it, inserted] = states.try_emplace(key);
      if (inserted) {
        it->second.first = access.begin;
        order.push_back(key);
      }
      if (access.annotated_store) {
        it->second.has_annotated_store = true;
      } else {
        it->second.has_plain_store = true;
      }
    }

    for (const auto& key : order) {
      const AttrState& state = states.at(key);
      if (!state.has_plain_store || state.has_annotated_store) continue;
      const auto& cls = sem_.classes[static_cast<size_t>(key.first)];
      if (class_level_annotated(cls, key.second)) continue;
      emit(state.first.line, diagnostic_key("Missing attribute annotation"),
           "Attribute `" + key.second + "` of class `" + cls.qualified +
               "` has no type annotation.");
    }
  }

  static bool class_level_annotated(const py::ClassInfo& cls, const std::string& attr) {
    for (const auto& stmt : cls.node->body) {
      if (stmt->kind != py::StmtKind::AnnAssign) continue;
      const auto& ann = py::as<py::AnnAssignStmt>(*stmt);
      if (ann.target->kind == py::ExprKind::Name &&
          py::as<py::NameExpr>(*ann.target).id == attr) {
        return true;
      }
    }
    return false;
  }

  const std::string& file_;
  const std::string& text_;
  std::vector<Diagnostic>& out_;
  py::ModuleSemantics sem_;
};

}  // namespace

TypeReport micro_check(const ProjectSnapshot& snapshot) {
  TypeReport report;
  report.snapshot_id = snapshot.id();
  report.checker_name = "micro";
  report.checker_version = kMicroVersion;
  for (const auto& [file, text] : snapshot.files()) {
    MicroCheckFile(file, text, report.diagnostics).run();
  }
  sort_diagnostics(report.diagnostics);
  return report;
}

TypeReport parse_external_output(const std::string& raw, const std::string& dialect) {
  if (dialect != "pyre") {
    throw Error(ErrorKind::Contract, "unknown raw-output dialect: " + dialect);
  }
  // path:line:col Kind [code]: message   (the colon after col is optional)
  static const std::regex line_re(
      R"(^(.+?):(\d+):(\d+):?\s+(.+?)\s*\[(\d+)\]:\s?(.*)$)");

  TypeReport report;
  report.checker_name = dialect;
  bool any_content = false;
  for (const auto& line : util::split_lines(raw)) {
    std::string trimmed = line;
    while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' ')) {
      trimmed.pop_back();
    }
    if (trimmed.find_first_not_of(" \t") == std::string::npos) continue;
    any_content = true;
    std::smatch match;
    if (!std::regex_match(trimmed, match, line_re)) {
      report.unparsed_lines.push_back(trimmed);
      continue;
    }
    Diagnostic d;
    d.file = match[1].str();
    d.line = std::stoi(match[2].str());
    d.key = {match[4].str(), std::stoi(match[5].str())};
    d.message = match[6].str();
    report.diagnostics.push_back(std::move(d));
  }
  if (any_content && report.diagnostics.empty()) {
    throw Error(ErrorKind::Parse, "no parsable diagnostic line in checker output");
  }
  sort_diagnostics(report.diagnostics);
  return report;
}

std::string MicroChecker::version() const { return kMicroVersion; }

TypeReport MicroChecker::check(const ProjectSnapshot& snapshot) {
  return micro_check(snapshot);
}

ReplayChecker::ReplayChecker(std::map<std::string, TypeReport> reports)
    : reports_(std::move(reports)) {}

ReplayChecker ReplayChecker::from_json(const std::string& json_text) {
  Json j = parse_json(json_text, "checker fixture");
  std::map<std::string, TypeReport> reports;
  for (const auto& entry : j.value("entries", Json::array())) {
    TypeReport report = type_report_from_json(entry.at("report"));
    reports[entry.at("snapshot_id").get<std::string>()] = std::move(report);
  }
  return ReplayChecker(std::move(reports));
}

TypeReport ReplayChecker::check(const ProjectSnapshot& snapshot) {
  auto it = reports_.find(snapshot.id());
  if (it == reports_.end()) {
    throw Error(ErrorKind::Contract,
                "no recorded report for snapshot " + snapshot.id());
  }
  return it->second;
}

CommandChecker::CommandChecker(std::vector<std::string> argv, std::string dialect,
                               double timeout_seconds, std::string version)
    : argv_(std::move(argv)),
      dialect_(std::move(dialect)),
      timeout_seconds_(timeout_seconds),
      version_(std::move(version)) {
  if (argv_.empty()) {
    throw Error(ErrorKind::Config, "command checker requires a command line");
  }
}

TypeReport CommandChecker::check(const ProjectSnapshot& snapshot) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() /
                 ("typedrift-check-" + snapshot.id().substr(0, 12) + "-" +
                  std::to_string(std::random_device{}()));
  fs::create_directories(dir);
  struct Cleanup {
    fs::path dir;
    ~Cleanup() {
      std::error_code ec;
      fs::remove_all(dir, ec);
    }
  } cleanup{dir};

  materialize_snapshot(snapshot, dir);
  std::vector<std::string> argv = argv_;
  bool substituted = false;
  for (auto& arg : argv) {
    size_t pos = arg.find("{dir}");
    if (pos != std::string::npos) {
      arg.replace(pos, 5, dir.string());
      substituted = true;
    }
  }
  if (!substituted) argv.push_back(dir.string());

  auto result = util::run_process(argv, dir.string(), timeout_seconds_);
  if (result.timed_out) {
    throw Error(ErrorKind::Check, "checker timed out after " +
                                      std::to_string(timeout_seconds_) + "s");
  }
  if (!result.exited) {
    throw Error(ErrorKind::Check,
                "checker killed by signal " + std::to_string(result.term_signal) +
                    "\n" + result.stdout_text + result.stderr_text);
  }
  try {
    TypeReport report = parse_external_output(result.stdout_text, dialect_);
    report.snapshot_id = snapshot.id();
    report.checker_name = name();
    report.checker_version = version_;
    return report;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) {
      throw Error(ErrorKind::Check, std::string(e.what()) + "\nraw output:\n" +
                                        result.stdout_text + result.stderr_text);
    }
    throw;
  }
}

TypeReport run_checker(CheckerAdapter& adapter, const ProjectSnapshot& snapshot) {
  TypeReport report = adapter.check(snapshot);
  if (report.snapshot_id.empty()) report.snapshot_id = snapshot.id();
  if (report.snapshot_id != snapshot.id()) {
    throw Error(ErrorKind::Check, "checker returned a report for snapshot " +
                                      report.snapshot_id + ", expected " + snapshot.id());
  }
  sort_diagnostics(report.diagnostics);
  return report;
}

}  // namespace typedrift
