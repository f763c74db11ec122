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

#include "typedrift/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "typedrift/py/analyze.hpp"
#include "typedrift/py/parser.hpp"
#include "typedrift/util/glob.hpp"
#include "typedrift/util/hash.hpp"
#include "typedrift/util/text.hpp"

namespace typedrift {

namespace fs = std::filesystem;

namespace {

std::string compute_snapshot_id(const ProjectSnapshot::FileMap& files) {
  std::vector<std::pair<std::string, std::string>> pairs(files.begin(), files.end());
  return util::hash_pairs(pairs);
}

void validate_relative_path(const std::string& path) {
  if (path.empty() || path.front() == '/' || path.find('\\') != std::string::npos) {
    throw Error(ErrorKind::Input, "invalid snapshot path: " + path);
  }
  std::stringstream parts(path);
  std::string segment;
  while (std::getline(parts, segment, '/')) {
    if (segment.empty() || segment == "." || segment == "..") {
      throw Error(ErrorKind::Input, "invalid snapshot path: " + path);
    }
  }
}

}  // namespace

ProjectSnapshot::ProjectSnapshot()
    : files_(std::make_shared<const FileMap>()), id_(compute_snapshot_id(*files_)) {}

ProjectSnapshot ProjectSnapshot::from_files(FileMap files) {
  for (const auto& [path, text] : files) {
    validate_relative_path(path);
    if (!util::is_valid_utf8(text)) {
      throw Error(ErrorKind::Input, "file is not valid UTF-8: " + path);
    }
  }
  ProjectSnapshot snapshot;
  snapshot.files_ = std::make_shared<const FileMap>(std::move(files));
  snapshot.id_ = compute_snapshot_id(*snapshot.files_);
  return snapshot;
}

const std::string* ProjectSnapshot::file_text(const std::string& path) const {
  auto it = files_->find(path);
  return it == files_->end() ? nullptr : &it->second;
}

ProjectSnapshot ProjectSnapshot::with_file(const std::string& path, std::string text) const {
  FileMap files = *files_;
  files[path] = std::move(text);
  return from_files(std::move(files));
}

ProjectSnapshot ProjectSnapshot::without_file(const std::string& path) const {
  FileMap files = *files_;
  files.erase(path);
  return from_files(std::move(files));
}

size_t ProjectSnapshot::total_lines() const {
  size_t lines = 0;
  for (const auto& [path, text] : *files_) {
    (void)path;
    lines += util::split_lines(text).size();
  }
  return lines;
}

const char* target_kind_name(TargetKind kind) {
  switch (kind) {
    case TargetKind::Method: return "method";
    case TargetKind::Field: return "field";
    case TargetKind::Class: return "class";
  }
  return "method";
}

TargetKind target_kind_from(const std::string& name) {
  if (name == "method") return TargetKind::Method;
  if (name == "field") return TargetKind::Field;
  if (name == "class") return TargetKind::Class;
  throw Error(ErrorKind::Input, "unknown target kind: " + name);
}

const std::vector<TargetSite>& TargetIndex::of(TargetKind kind) const {
  static const std::vector<TargetSite> empty;
  auto it = targets.find(kind);
  return it == targets.end() ? empty : it->second;
}

size_t TargetIndex::total() const {
  size_t n = 0;
  for (const auto& [kind, sites] : targets) {
    (void)kind;
    n += sites.size();
  }
  return n;
}

void TargetIndex::merge(TargetIndex other) {
  for (auto& [kind, sites] : other.targets) {
    auto& dest = targets[kind];
    dest.insert(dest.end(), std::make_move_iterator(sites.begin()),
                std::make_move_iterator(sites.end()));
  }
  for (auto& warning : other.warnings) warnings.push_back(std::move(warning));
}

ProjectSnapshot load_project(const fs::path& root,
                             const std::vector<std::string>& include_globs) {
  if (!fs::exists(root) || !fs::is_directory(root)) {
    throw Error(ErrorKind::Input, "project root does not exist: " + root.string());
  }
  const std::vector<std::string> default_globs{"**/*.py"};
  const std::vector<std::string>& globs = include_globs.empty() ? default_globs : include_globs;

  ProjectSnapshot::FileMap files;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    std::string rel = fs::relative(entry.path(), root).generic_string();
    bool matched = std::any_of(globs.begin(), globs.end(), [&](const std::string& g) {
      return util::glob_match(g, rel);
    });
    if (!matched) continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    if (!util::is_valid_utf8(text)) {
      throw Error(ErrorKind::Input, "file is not valid UTF-8: " + rel);
    }
    files.emplace(std::move(rel), std::move(text));
  }
  if (files.empty()) {
    throw Error(ErrorKind::Input,
                "no files matched the include patterns under " + root.string());
  }
  return ProjectSnapshot::from_files(std::move(files));
}

std::string module_name_for_path(const std::string& path) {
  std::string name = path;
  if (name.size() > 3 && name.ends_with(".py")) name.resize(name.size() - 3);
  if (name.ends_with("/__init__")) {
    name.resize(name.size() - std::string("/__init__").size());
  } else if (name == "__init__") {
    name.clear();
  }
  std::replace(name.begin(), name.end(), '/', '.');
  return name;
}

namespace {

struct FileSites {
  std::vector<TargetSite> methods;
  std::vector<TargetSite> fields;
  std::vector<TargetSite> classes;
};

std::string join_qualified(const std::string& module, const std::string& inner) {
  return module.empty() ? inner : module + "." + inner;
}

// Class-level field definitions: plain-name targets of assignments directly
// in the class body (if/elif branches included, mirroring version-gated code).
void collect_class_level_fields(const py::ClassDefStmt& cls, const std::string& file,
                                const std::string& class_qualified,
                                const std::string& module, std::vector<TargetSite>& out) {
  std::function<void(const std::vector<py::StmtPtr>&)> walk =
      [&](const std::vector<py::StmtPtr>& body) {
        for (const auto& stmt : body) {
          auto add_name_target = [&](const py::Expr& target) {
            if (target.kind != py::ExprKind::Name) return;
            const auto& name = py::as<py::NameExpr>(target);
            TargetSite site;
            site.file = file;
            site.kind = TargetKind::Field;
            site.qualified_name =
                join_qualified(module, class_qualified + "." + name.id);
            site.start = name.begin.chr;
            site.end = name.end.chr;
            out.push_back(std::move(site));
          };
          switch (stmt->kind) {
            case py::StmtKind::Assign:
              for (const auto& target : py::as<py::AssignStmt>(*stmt).targets) {
                add_name_target(*target);
              }
              break;
            case py::StmtKind::AnnAssign:
              add_name_target(*py::as<py::AnnAssignStmt>(*stmt).target);
              break;
            case py::StmtKind::AugAssign:
              add_name_target(*py::as<py::AugAssignStmt>(*stmt).target);
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
}

FileSites collect_sites(const std::string& file, const py::Module& module_ast,
                        const py::ModuleSemantics& sem) {
  FileSites sites;
  std::string module = module_name_for_path(file);

  for (const auto& cls : sem.classes) {
    TargetSite site;
    site.file = file;
    site.kind = TargetKind::Class;
    site.qualified_name = join_qualified(module, cls.qualified);
    site.start = cls.node->name_begin.chr;
    site.end = cls.node->name_end.chr;
    sites.classes.push_back(std::move(site));

    collect_class_level_fields(*cls.node, file, cls.qualified, module, sites.fields);
  }

  for (const auto& fn : sem.functions) {
    if (fn.klass < 0) continue;  // methods are defs directly inside a class body
    TargetSite site;
    site.file = file;
    site.kind = TargetKind::Method;
    site.qualified_name = join_qualified(module, fn.qualified);
    site.start = fn.node->name_begin.chr;
    site.end = fn.node->name_end.chr;
    sites.methods.push_back(std::move(site));
  }

  for (const auto& access : sem.attr_accesses) {
    if (!access.is_store || !access.receiver_is_self || access.receiver_class < 0) {
      continue;
    }
    const auto& cls = sem.classes[static_cast<size_t>(access.receiver_class)];
    TargetSite site;
    site.file = file;
    site.kind = TargetKind::Field;
    site.qualified_name = join_qualified(module, cls.qualified + "." + access.attr);
    site.start = access.begin.chr;
    site.end = access.end.chr;
    sites.fields.push_back(std::move(site));
  }

  (void)module_ast;
  return sites;
}

void sort_sites(std::vector<TargetSite>& sites) {
  std::sort(sites.begin(), sites.end(), [](const TargetSite& a, const TargetSite& b) {
    if (a.file != b.file) return a.file < b.file;
    if (a.start != b.start) return a.start < b.start;
    return a.qualified_name < b.qualified_name;
  });
}

}  // namespace

TargetIndex enumerate_targets(const ProjectSnapshot& snapshot, TargetKind kind) {
  TargetIndex index;
  index.snapshot_id = snapshot.id();
  std::vector<TargetSite> sites;
  size_t parsed_files = 0;

  for (const auto& [file, text] : snapshot.files()) {
    auto outcome = py::parse_module(text);
    if (!outcome.ok()) {
      index.warnings.push_back(
          {file, "skipped unparsable file: " + outcome.error->message + " (line " +
                     std::to_string(outcome.error->line) + ")"});
      continue;
    }
    ++parsed_files;
    auto sem = py::analyze_module(*outcome.module);
    FileSites file_sites = collect_sites(file, *outcome.module, sem);
    std::vector<TargetSite>* chosen = nullptr;
    switch (kind) {
      case TargetKind::Method: chosen = &file_sites.methods; break;
      case TargetKind::Field: chosen = &file_sites.fields; break;
      case TargetKind::Class: chosen = &file_sites.classes; break;
    }
    sites.insert(sites.end(), std::make_move_iterator(chosen->begin()),
                 std::make_move_iterator(chosen->end()));
  }

  if (parsed_files == 0 && !snapshot.files().empty()) {
    throw Error(ErrorKind::Analysis, "no file in the snapshot parses");
  }
  sort_sites(sites);
  index.targets[kind] = std::move(sites);
  return index;
}

TargetIndex enumerate_all_targets(const ProjectSnapshot& snapshot) {
  TargetIndex index = enumerate_targets(snapshot, TargetKind::Method);
  TargetIndex fields = enumerate_targets(snapshot, TargetKind::Field);
  TargetIndex classes = enumerate_targets(snapshot, TargetKind::Class);
  // Warnings repeat per kind; keep the first copy only.
  fields.warnings.clear();
  classes.warnings.clear();
  index.merge(std::move(fields));
  index.merge(std::move(classes));
  return index;
}

TargetSite resolve_span(const ProjectSnapshot& snapshot, const std::string& file,
                        const std::string& qualified_name) {
  const std::string* text = snapshot.file_text(file);
  if (text == nullptr) {
    throw Error(ErrorKind::NotFound, "file not in snapshot: " + file);
  }
  auto outcome = py::parse_module(*text);
  if (!outcome.ok()) {
    throw Error(ErrorKind::NotFound,
                "file does not parse: " + file + ": " + outcome.error->message);
  }
  auto sem = py::analyze_module(*outcome.module);
  FileSites sites = collect_sites(file, *outcome.module, sem);

  // The resolve universe also covers module-level and nested functions so
  // that any definition site can be re-located by name.
  std::vector<TargetSite> universe;
  std::string module = module_name_for_path(file);
  for (auto& site : sites.classes) universe.push_back(std::move(site));
  for (auto& site : sites.fields) universe.push_back(std::move(site));
  for (const auto& fn : sem.functions) {
    TargetSite site;
    site.file = file;
    site.kind = TargetKind::Method;
    site.qualified_name = module.empty() ? fn.qualified : module + "." + fn.qualified;
    site.start = fn.node->name_begin.chr;
    site.end = fn.node->name_end.chr;
    universe.push_back(std::move(site));
  }
  sort_sites(universe);

  std::vector<TargetSite> matches;
  for (const auto& site : universe) {
    if (site.qualified_name == qualified_name ||
        site.qualified_name.ends_with("." + qualified_name)) {
      matches.push_back(site);
    }
  }
  if (matches.empty()) {
    throw Error(ErrorKind::NotFound,
                "no definition site for " + qualified_name + " in " + file);
  }
  if (matches.size() > 1) {
    std::vector<CandidateSpan> candidates;
    candidates.reserve(matches.size());
    for (const auto& m : matches) candidates.push_back({m.file, m.start, m.end});
    throw AmbiguousError("multiple definition sites for " + qualified_name + " in " + file,
                         std::move(candidates));
  }
  return matches.front();
}

void materialize_snapshot(const ProjectSnapshot& snapshot, const fs::path& dir) {
  for (const auto& [rel, text] : snapshot.files()) {
    fs::path target = dir / fs::path(rel);
    fs::create_directories(target.parent_path());
    std::ofstream out(target, std::ios::binary);
    out << text;
    if (!out) {
      throw Error(ErrorKind::Input, "cannot write " + target.string());
    }
  }
}

}  // namespace typedrift
