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

#ifndef TYPEDRIFT_CORPUS_HPP
#define TYPEDRIFT_CORPUS_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "typedrift/errors.hpp"

namespace typedrift {

// An immutable, content-addressed set of source files. Copies share the
// underlying file map; every edit produces a new snapshot with a new id.
class ProjectSnapshot {
 public:
  using FileMap = std::map<std::string, std::string>;

  ProjectSnapshot();
  static ProjectSnapshot from_files(FileMap files);

  const FileMap& files() const { return *files_; }
  const std::string& id() const { return id_; }
  bool contains(const std::string& path) const { return files_->contains(path); }

  // Null when the file is not part of the snapshot.
  const std::string* file_text(const std::string& path) const;

  ProjectSnapshot with_file(const std::string& path, std::string text) const;
  ProjectSnapshot without_file(const std::string& path) const;

  size_t total_lines() const;

  friend bool operator==(const ProjectSnapshot& a, const ProjectSnapshot& b) {
    return a.id_ == b.id_;
  }

 private:
  std::shared_ptr<const FileMap> files_;
  std::string id_;
};

enum class TargetKind { Method, Field, Class };

const char* target_kind_name(TargetKind kind);
TargetKind target_kind_from(const std::string& name);

struct TargetSite {
  std::string file;
  TargetKind kind = TargetKind::Method;
  std::string qualified_name;  // module.Class.member
  uint32_t start = 0;          // character offsets into the file text
  uint32_t end = 0;

  friend bool operator==(const TargetSite&, const TargetSite&) = default;
};

struct IndexWarning {
  std::string file;
  std::string message;
};

struct TargetIndex {
  std::string snapshot_id;
  std::map<TargetKind, std::vector<TargetSite>> targets;
  std::vector<IndexWarning> warnings;

  const std::vector<TargetSite>& of(TargetKind kind) const;
  size_t total() const;
  void merge(TargetIndex other);
};

// Reads all files matching the include globs (default `**/*.py`) under root.
ProjectSnapshot load_project(const std::filesystem::path& root,
                             const std::vector<std::string>& include_globs = {});

// Definition sites of one kind across the snapshot. Unparsable files are
// skipped with a warning record; if nothing parses the analysis fails.
TargetIndex enumerate_targets(const ProjectSnapshot& snapshot, TargetKind kind);

TargetIndex enumerate_all_targets(const ProjectSnapshot& snapshot);

// Re-locates a definition site by qualified name (used after edits shift
// offsets). The query may be the full dotted name or any dot-suffix of it.
TargetSite resolve_span(const ProjectSnapshot& snapshot, const std::string& file,
                        const std::string& qualified_name);

// Dotted module name for a relative path: pkg/mod.py -> pkg.mod; a trailing
// __init__ segment is dropped.
std::string module_name_for_path(const std::string& path);

// Writes the snapshot under dir, creating parent directories as needed.
void materialize_snapshot(const ProjectSnapshot& snapshot,
                          const std::filesystem::path& dir);

}  // namespace typedrift

#endif  // TYPEDRIFT_CORPUS_HPP
