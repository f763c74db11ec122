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

#ifndef TYPEDRIFT_PY_ANALYZE_HPP
#define TYPEDRIFT_PY_ANALYZE_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "typedrift/py/ast.hpp"

namespace typedrift::py {

// Lexical scoping, name resolution and a small amount of local type
// tracking over one module. The results back target enumeration, the
// micro-checker's rules, and reference resolution for renames.

enum class ScopeKind { Module, Function, Class, Lambda, Comprehension };

struct NameUse {
  SourcePos begin;
  SourcePos end;
  bool is_store = false;
};

struct Binding {
  int scope = -1;
  std::string name;
  std::vector<NameUse> references;  // every Name token resolved here
  int def_count = 0;                // binding occurrences (defs, params, imports...)
  int classdef_count = 0;
  int unique_classdef = -1;   // class index when the one and only def is a class
  int receiver_of_class = -1; // instance receiver param of a method of this class
  int classobj_receiver_of = -1;  // classmethod first param
  int inferred_class = -2;    // -2 no evidence yet, -1 conflicting, >=0 class index
};

struct Scope {
  ScopeKind kind = ScopeKind::Module;
  int parent = -1;
  std::string name;
  std::map<std::string, int> bindings;
  std::set<std::string> global_names;
  std::set<std::string> nonlocal_names;
};

struct ClassInfo {
  const ClassDefStmt* node = nullptr;
  std::string qualified;  // dotted path inside the module, e.g. "Outer.Inner"
  int scope = -1;         // class body scope
  int enclosing_scope = -1;
  std::vector<int> local_bases;
  bool bases_all_known = true;  // every base is `object` or a unique local class
  bool fully_local = false;     // transitive closure of bases_all_known
  bool dynamic_attrs = false;   // defines __getattr__/__getattribute__/__setattr__
  std::set<std::string> class_body_members;
  std::set<std::string> instance_attrs;  // receiver-assigned anywhere in methods
};

struct FunctionInfo {
  const FunctionDefStmt* node = nullptr;
  int klass = -1;               // class index when a direct class-body def
  bool is_static = false;
  bool is_classmethod = false;
  std::string qualified;        // dotted path inside the module
  int scope = -1;               // the function's own scope
};

struct AttrAccess {
  SourcePos begin;  // attribute name token
  SourcePos end;
  std::string attr;
  bool is_store = false;
  bool annotated_store = false;   // target of an annotated assignment
  int receiver_class = -1;        // local class of the receiver instance
  bool receiver_is_class_object = false;
  bool receiver_is_self = false;
  int in_function = -1;           // nearest enclosing function, -1 at module level
};

struct OperandTypes {
  int left_class = -1;
  int right_class = -1;
};

struct BinOpUse {
  SourcePos pos;        // operator token position
  std::string op_text;  // "<", "<=", ">", ">=", "+"
  OperandTypes types;
};

struct UnboundUse {
  std::string name;
  SourcePos pos;
};

struct ModuleSemantics {
  const Module* module = nullptr;
  std::vector<Scope> scopes;
  std::vector<Binding> bindings;
  std::vector<ClassInfo> classes;
  std::vector<FunctionInfo> functions;
  std::vector<AttrAccess> attr_accesses;
  std::vector<BinOpUse> comparable_ops;  // only {<, <=, >, >=, +}
  std::vector<UnboundUse> unbound_loads;
  bool module_has_star_import = false;

  // Member lookup including local base classes; `object` contributes nothing.
  bool class_defines(int class_index, const std::string& member) const;

  int find_class(const std::string& qualified) const;
};

ModuleSemantics analyze_module(const Module& module);

// Names always available without an import (Python 3.10 builtins plus the
// implicit module globals).
const std::set<std::string>& python_builtins();

}  // namespace typedrift::py

#endif  // TYPEDRIFT_PY_ANALYZE_HPP
