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

#include "typedrift/py/analyze.hpp"

#include <deque>
#include <functional>

namespace typedrift::py {

namespace {

// How a stored name got its value; drives local instance inference.
struct ValueDesc {
  enum Kind { Other, CtorCall } kind = Other;
  std::string callee;  // CtorCall only
};

struct OperandDesc {
  enum Kind { Unknown, NameRef, CtorCall } kind = Unknown;
  std::string name;
  int scope = -1;
};

struct PendingRef {
  int scope = -1;
  std::string name;
  NameUse use;
};

struct PendingBase {
  int class_index = -1;
  std::string name;  // empty marks an unknown base form
};

struct PendingCtorFact {
  int binding = -1;
  int scope = -1;
  std::string callee;
};

struct PendingAttr {
  AttrAccess access;
  OperandDesc receiver;
};

struct PendingOp {
  SourcePos pos;
  std::string op_text;
  OperandDesc left;
  OperandDesc right;
};

class Analyzer {
 public:
  explicit Analyzer(const Module& module) { out_.module = &module; }

  ModuleSemantics run() {
    Scope module_scope;
    module_scope.kind = ScopeKind::Module;
    out_.scopes.push_back(module_scope);
    visit_body(out_.module->body, /*class_index=*/-1);
    resolve();
    return std::move(out_);
  }

 private:
  int current_scope_ = 0;
  int current_function_ = -1;
  std::vector<std::string> name_path_;
  std::vector<PendingRef> refs_;
  std::vector<PendingBase> bases_;
  std::vector<PendingCtorFact> ctor_facts_;
  std::vector<PendingAttr> attrs_;
  std::vector<PendingOp> ops_;
  ModuleSemantics out_;

  int push_scope(ScopeKind kind, const std::string& name) {
    Scope s;
    s.kind = kind;
    s.parent = current_scope_;
    s.name = name;
    out_.scopes.push_back(std::move(s));
    int idx = static_cast<int>(out_.scopes.size()) - 1;
    current_scope_ = idx;
    return idx;
  }

  void pop_scope() { current_scope_ = out_.scopes[current_scope_].parent; }

  // Scope that a store of `name` from `scope` actually binds in, honoring
  // global/nonlocal declarations.
  int binding_scope_for(int scope, const std::string& name) const {
    const Scope& s = out_.scopes[scope];
    if (s.global_names.contains(name)) return 0;
    if (s.nonlocal_names.contains(name)) {
      for (int cur = s.parent; cur != -1; cur = out_.scopes[cur].parent) {
        const Scope& c = out_.scopes[cur];
        if (c.kind == ScopeKind::Function || c.kind == ScopeKind::Lambda) {
          if (c.bindings.contains(name)) return cur;
        }
      }
    }
    return scope;
  }

  int ensure_binding(int scope, const std::string& name) {
    Scope& s = out_.scopes[scope];
    auto it = s.bindings.find(name);
    if (it != s.bindings.end()) return it->second;
    Binding b;
    b.scope = scope;
    b.name = name;
    out_.bindings.push_back(std::move(b));
    int idx = static_cast<int>(out_.bindings.size()) - 1;
    s.bindings.emplace(name, idx);
    return idx;
  }

  int record_def(const std::string& name, SourcePos begin, SourcePos end,
                 const ValueDesc& value, int classdef = -1) {
    int target_scope = binding_scope_for(current_scope_, name);
    int b = ensure_binding(target_scope, name);
    Binding& binding = out_.bindings[b];
    binding.def_count += 1;
    if (classdef >= 0) {
      binding.classdef_count += 1;
      binding.unique_classdef = classdef;  // revalidated in resolve()
    }
    if (value.kind == ValueDesc::CtorCall) {
      ctor_facts_.push_back({b, current_scope_, value.callee});
    }
    if (end.byte > begin.byte) {
      binding.references.push_back({begin, end, /*is_store=*/true});
    }
    return b;
  }

  void record_ref(const std::string& name, SourcePos begin, SourcePos end) {
    refs_.push_back({current_scope_, name, {begin, end, /*is_store=*/false}});
  }

  int resolve_name(int scope, const std::string& name) const {
    const Scope& start = out_.scopes[scope];
    if (start.global_names.contains(name)) {
      auto it = out_.scopes[0].bindings.find(name);
      return it == out_.scopes[0].bindings.end() ? -1 : it->second;
    }
    bool skip_start = start.nonlocal_names.contains(name);
    for (int cur = scope; cur != -1; cur = out_.scopes[cur].parent) {
      const Scope& c = out_.scopes[cur];
      if (skip_start && cur == scope) continue;
      // Class scopes are invisible to code nested below them.
      if (cur != scope && c.kind == ScopeKind::Class) continue;
      auto it = c.bindings.find(name);
      if (it != c.bindings.end()) return it->second;
    }
    return -1;
  }

  std::string qualify(const std::string& name) const {
    std::string q;
    for (const auto& part : name_path_) {
      q += part;
      q += '.';
    }
    q += name;
    return q;
  }

  // ---- statement walk ----

  void visit_body(const std::vector<StmtPtr>& body, int class_index) {
    for (const auto& stmt : body) visit_stmt(*stmt, class_index);
  }

  void visit_stmt(const Stmt& stmt, int class_index) {
    switch (stmt.kind) {
      case StmtKind::FunctionDef:
        visit_function(as<FunctionDefStmt>(stmt), class_index);
        return;
      case StmtKind::ClassDef:
        visit_class(as<ClassDefStmt>(stmt));
        return;
      case StmtKind::Return: {
        const auto& node = as<ReturnStmt>(stmt);
        if (node.value) visit_load(*node.value);
        return;
      }
      case StmtKind::Delete: {
        const auto& node = as<DeleteStmt>(stmt);
        for (const auto& target : node.targets) visit_target(*target, {}, false);
        return;
      }
      case StmtKind::Assign: {
        const auto& node = as<AssignStmt>(stmt);
        visit_load(*node.value);
        ValueDesc desc = describe_value(*node.value);
        for (const auto& target : node.targets) visit_target(*target, desc, false);
        return;
      }
      case StmtKind::AugAssign: {
        const auto& node = as<AugAssignStmt>(stmt);
        visit_load(*node.value);
        visit_target(*node.target, {}, false);
        return;
      }
      case StmtKind::AnnAssign: {
        const auto& node = as<AnnAssignStmt>(stmt);
        visit_load(*node.annotation);
        ValueDesc desc;
        if (node.value) {
          visit_load(*node.value);
          desc = describe_value(*node.value);
        }
        visit_target(*node.target, desc, /*annotated=*/true);
        return;
      }
      case StmtKind::For: {
        const auto& node = as<ForStmt>(stmt);
        visit_load(*node.iter);
        visit_target(*node.target, {}, false);
        visit_body(node.body, -1);
        visit_body(node.orelse, -1);
        return;
      }
      case StmtKind::While: {
        const auto& node = as<WhileStmt>(stmt);
        visit_load(*node.test);
        visit_body(node.body, -1);
        visit_body(node.orelse, -1);
        return;
      }
      case StmtKind::If: {
        const auto& node = as<IfStmt>(stmt);
        visit_load(*node.test);
        visit_body(node.body, class_index);
        visit_body(node.orelse, class_index);
        return;
      }
      case StmtKind::With: {
        const auto& node = as<WithStmt>(stmt);
        for (const auto& item : node.items) {
          visit_load(*item.context);
          if (item.optional_vars) visit_target(*item.optional_vars, {}, false);
        }
        visit_body(node.body, -1);
        return;
      }
      case StmtKind::Raise: {
        const auto& node = as<RaiseStmt>(stmt);
        if (node.exc) visit_load(*node.exc);
        if (node.cause) visit_load(*node.cause);
        return;
      }
      case StmtKind::Try: {
        const auto& node = as<TryStmt>(stmt);
        visit_body(node.body, -1);
        for (const auto& handler : node.handlers) {
          if (handler.type) visit_load(*handler.type);
          if (!handler.name.empty()) {
            record_def(handler.name, handler.name_begin, handler.name_end, {});
          }
          visit_body(handler.body, -1);
        }
        visit_body(node.orelse, -1);
        visit_body(node.finalbody, -1);
        return;
      }
      case StmtKind::Assert: {
        const auto& node = as<AssertStmt>(stmt);
        visit_load(*node.test);
        if (node.msg) visit_load(*node.msg);
        return;
      }
      case StmtKind::Import: {
        const auto& node = as<ImportStmt>(stmt);
        for (const auto& alias : node.names) {
          if (!alias.asname.empty()) {
            record_def(alias.asname, alias.asname_begin, alias.asname_end, {});
          } else if (alias.dotted.find('.') == std::string::npos) {
            record_def(alias.dotted, alias.begin, alias.end, {});
          } else {
            // `import a.b` binds the first segment; no exact token span kept.
            std::string first = alias.dotted.substr(0, alias.dotted.find('.'));
            record_def(first, alias.begin, alias.begin, {});
          }
        }
        return;
      }
      case StmtKind::ImportFrom: {
        const auto& node = as<ImportFromStmt>(stmt);
        if (node.star) {
          if (current_scope_ == 0) out_.module_has_star_import = true;
          return;
        }
        for (const auto& alias : node.names) {
          if (!alias.asname.empty()) {
            record_def(alias.asname, alias.asname_begin, alias.asname_end, {});
          } else {
            record_def(alias.dotted, alias.begin, alias.end, {});
          }
        }
        return;
      }
      case StmtKind::Global: {
        const auto& node = as<GlobalStmt>(stmt);
        for (const auto& name : node.names) {
          out_.scopes[current_scope_].global_names.insert(name);
          ensure_binding(0, name);
        }
        return;
      }
      case StmtKind::Nonlocal: {
        const auto& node = as<NonlocalStmt>(stmt);
        for (const auto& name : node.names) {
          out_.scopes[current_scope_].nonlocal_names.insert(name);
        }
        return;
      }
      case StmtKind::ExprStmt:
        visit_load(*as<ExprStmtNode>(stmt).value);
        return;
      case StmtKind::Pass:
      case StmtKind::Break:
      case StmtKind::Continue:
        return;
    }
  }

  static bool has_decorator(const FunctionDefStmt& fn, std::string_view name) {
    for (const auto& deco : fn.decorators) {
      if (deco->kind == ExprKind::Name && as<NameExpr>(*deco).id == name) return true;
    }
    return false;
  }

  void visit_function(const FunctionDefStmt& fn, int class_index) {
    for (const auto& deco : fn.decorators) visit_load(*deco);
    for (const auto& param : fn.params) {
      if (param.annotation) visit_load(*param.annotation);
      if (param.default_value) visit_load(*param.default_value);
    }
    if (fn.returns) visit_load(*fn.returns);

    FunctionInfo info;
    info.node = &fn;
    info.klass = class_index;
    info.is_static = has_decorator(fn, "staticmethod");
    info.is_classmethod = has_decorator(fn, "classmethod");
    info.qualified = qualify(fn.name);
    int fn_index = static_cast<int>(out_.functions.size());
    out_.functions.push_back(std::move(info));

    record_def(fn.name, fn.name_begin, fn.name_end, {});

    int fn_scope = push_scope(ScopeKind::Function, fn.name);
    out_.functions[fn_index].scope = fn_scope;
    name_path_.push_back(fn.name);
    int prev_function = current_function_;
    current_function_ = fn_index;

    bool receiver_pending = class_index >= 0 && !out_.functions[fn_index].is_static;
    for (const auto& param : fn.params) {
      if (param.name.empty()) continue;
      int b = record_def(param.name, param.name_begin, param.name_end, {});
      if (receiver_pending && param.param_kind == ParamKind::Plain) {
        if (out_.functions[fn_index].is_classmethod) {
          out_.bindings[b].classobj_receiver_of = class_index;
        } else {
          out_.bindings[b].receiver_of_class = class_index;
        }
        receiver_pending = false;
      }
    }
    visit_body(fn.body, -1);

    current_function_ = prev_function;
    name_path_.pop_back();
    pop_scope();
  }

  void visit_class(const ClassDefStmt& cls) {
    for (const auto& deco : cls.decorators) visit_load(*deco);
    for (const auto& kw : cls.keywords) visit_load(*kw.value);

    ClassInfo info;
    info.node = &cls;
    info.qualified = qualify(cls.name);
    info.enclosing_scope = current_scope_;
    int class_index = static_cast<int>(out_.classes.size());
    out_.classes.push_back(std::move(info));

    for (const auto& base : cls.bases) {
      visit_load(*base);
      if (base->kind == ExprKind::Name) {
        bases_.push_back({class_index, as<NameExpr>(*base).id});
      } else {
        bases_.push_back({class_index, ""});
      }
    }

    record_def(cls.name, cls.name_begin, cls.name_end, {}, class_index);

    int class_scope = push_scope(ScopeKind::Class, cls.name);
    out_.classes[class_index].scope = class_scope;
    name_path_.push_back(cls.name);
    visit_body(cls.body, class_index);
    name_path_.pop_back();

    for (const auto& [name, binding] : out_.scopes[class_scope].bindings) {
      (void)binding;
      out_.classes[class_index].class_body_members.insert(name);
    }
    pop_scope();
  }

  // ---- expression walk ----

  ValueDesc describe_value(const Expr& e) const {
    if (e.kind == ExprKind::Call) {
      const auto& call = as<CallExpr>(e);
      if (call.func->kind == ExprKind::Name) {
        return {ValueDesc::CtorCall, as<NameExpr>(*call.func).id};
      }
    }
    return {};
  }

  OperandDesc describe_operand(const Expr& e) const {
    if (e.kind == ExprKind::Name) {
      return {OperandDesc::NameRef, as<NameExpr>(e).id, current_scope_};
    }
    if (e.kind == ExprKind::Call) {
      const auto& call = as<CallExpr>(e);
      if (call.func->kind == ExprKind::Name) {
        return {OperandDesc::CtorCall, as<NameExpr>(*call.func).id, current_scope_};
      }
    }
    return {};
  }

  void record_attr_access(const AttributeExpr& attr, bool is_store, bool annotated) {
    PendingAttr pending;
    pending.access.begin = attr.attr_begin;
    pending.access.end = attr.attr_end;
    pending.access.attr = attr.attr;
    pending.access.is_store = is_store;
    pending.access.annotated_store = annotated;
    pending.access.in_function = current_function_;
    pending.receiver = describe_operand(*attr.value);
    attrs_.push_back(std::move(pending));
  }

  void record_op(SourcePos pos, const char* op_text, const Expr& left, const Expr& right) {
    std::string_view op(op_text);
    if (op != "<" && op != "<=" && op != ">" && op != ">=" && op != "+") return;
    ops_.push_back({pos, std::string(op), describe_operand(left), describe_operand(right)});
  }

  void visit_load(const Expr& e) {
    switch (e.kind) {
      case ExprKind::Name: {
        const auto& name = as<NameExpr>(e);
        record_ref(name.id, name.begin, name.end);
        return;
      }
      case ExprKind::Attribute: {
        const auto& attr = as<AttributeExpr>(e);
        visit_load(*attr.value);
        record_attr_access(attr, /*is_store=*/false, /*annotated=*/false);
        return;
      }
      case ExprKind::Subscript: {
        const auto& sub = as<SubscriptExpr>(e);
        visit_load(*sub.value);
        visit_load(*sub.index);
        return;
      }
      case ExprKind::Call: {
        const auto& call = as<CallExpr>(e);
        visit_load(*call.func);
        for (const auto& arg : call.args) visit_load(*arg);
        for (const auto& kw : call.keywords) visit_load(*kw.value);
        return;
      }
      case ExprKind::Literal:
        return;
      case ExprKind::Tuple:
        for (const auto& elt : as<TupleExpr>(e).elts) visit_load(*elt);
        return;
      case ExprKind::List:
        for (const auto& elt : as<ListExpr>(e).elts) visit_load(*elt);
        return;
      case ExprKind::Set:
        for (const auto& elt : as<SetExpr>(e).elts) visit_load(*elt);
        return;
      case ExprKind::Dict: {
        const auto& dict = as<DictExpr>(e);
        for (const auto& key : dict.keys) {
          if (key) visit_load(*key);
        }
        for (const auto& value : dict.values) visit_load(*value);
        return;
      }
      case ExprKind::BinOp: {
        const auto& bin = as<BinOpExpr>(e);
        visit_load(*bin.left);
        visit_load(*bin.right);
        record_op(bin.op_pos, binary_op_text(bin.op), *bin.left, *bin.right);
        return;
      }
      case ExprKind::UnaryOp:
        visit_load(*as<UnaryOpExpr>(e).operand);
        return;
      case ExprKind::BoolOp:
        for (const auto& value : as<BoolOpExpr>(e).values) visit_load(*value);
        return;
      case ExprKind::Compare: {
        const auto& cmp = as<CompareExpr>(e);
        visit_load(*cmp.left);
        for (const auto& comparator : cmp.comparators) visit_load(*comparator);
        for (size_t i = 0; i < cmp.ops.size(); ++i) {
          const Expr& lhs = i == 0 ? *cmp.left : *cmp.comparators[i - 1];
          record_op(cmp.op_positions[i], cmp_op_text(cmp.ops[i]), lhs, *cmp.comparators[i]);
        }
        return;
      }
      case ExprKind::IfExp: {
        const auto& ifexp = as<IfExpExpr>(e);
        visit_load(*ifexp.test);
        visit_load(*ifexp.body);
        visit_load(*ifexp.orelse);
        return;
      }
      case ExprKind::Lambda: {
        const auto& lambda = as<LambdaExpr>(e);
        for (const auto& param : lambda.params) {
          if (param.default_value) visit_load(*param.default_value);
        }
        push_scope(ScopeKind::Lambda, "<lambda>");
        for (const auto& param : lambda.params) {
          if (!param.name.empty()) {
            record_def(param.name, param.name_begin, param.name_end, {});
          }
        }
        visit_load(*lambda.body);
        pop_scope();
        return;
      }
      case ExprKind::Comprehension: {
        const auto& comp = as<ComprehensionExpr>(e);
        // The first iterable is evaluated in the enclosing scope.
        visit_load(*comp.clauses.front().iter);
        push_scope(ScopeKind::Comprehension, "<comp>");
        for (size_t i = 0; i < comp.clauses.size(); ++i) {
          const auto& clause = comp.clauses[i];
          visit_target(*clause.target, {}, false);
          if (i > 0) visit_load(*clause.iter);
          for (const auto& cond : clause.conditions) visit_load(*cond);
        }
        visit_load(*comp.element);
        if (comp.value) visit_load(*comp.value);
        pop_scope();
        return;
      }
      case ExprKind::Starred:
        visit_load(*as<StarredExpr>(e).value);
        return;
      case ExprKind::Slice: {
        const auto& slice = as<SliceExpr>(e);
        if (slice.lower) visit_load(*slice.lower);
        if (slice.upper) visit_load(*slice.upper);
        if (slice.step) visit_load(*slice.step);
        return;
      }
      case ExprKind::Yield: {
        const auto& yield = as<YieldExpr>(e);
        if (yield.value) visit_load(*yield.value);
        return;
      }
      case ExprKind::Await:
        visit_load(*as<AwaitExpr>(e).value);
        return;
      case ExprKind::NamedExpr: {
        const auto& named = as<NamedExprExpr>(e);
        visit_load(*named.value);
        visit_target(*named.target, describe_value(*named.value), false);
        return;
      }
    }
  }

  void visit_target(const Expr& e, const ValueDesc& value, bool annotated) {
    switch (e.kind) {
      case ExprKind::Name: {
        const auto& name = as<NameExpr>(e);
        record_def(name.id, name.begin, name.end, value);
        return;
      }
      case ExprKind::Attribute: {
        const auto& attr = as<AttributeExpr>(e);
        visit_load(*attr.value);
        record_attr_access(attr, /*is_store=*/true, annotated);
        return;
      }
      case ExprKind::Subscript: {
        const auto& sub = as<SubscriptExpr>(e);
        visit_load(*sub.value);
        visit_load(*sub.index);
        return;
      }
      case ExprKind::Tuple:
        for (const auto& elt : as<TupleExpr>(e).elts) visit_target(*elt, {}, false);
        return;
      case ExprKind::List:
        for (const auto& elt : as<ListExpr>(e).elts) visit_target(*elt, {}, false);
        return;
      case ExprKind::Starred:
        visit_target(*as<StarredExpr>(e).value, {}, false);
        return;
      default:
        visit_load(e);
        return;
    }
  }

  // ---- deferred resolution ----

  int operand_class(const OperandDesc& desc) const {
    if (desc.kind == OperandDesc::NameRef) {
      int b = resolve_name(desc.scope, desc.name);
      if (b < 0) return -1;
      const Binding& binding = out_.bindings[b];
      if (binding.receiver_of_class >= 0) return binding.receiver_of_class;
      if (binding.inferred_class >= 0) return binding.inferred_class;
      return -1;
    }
    if (desc.kind == OperandDesc::CtorCall) {
      int b = resolve_name(desc.scope, desc.name);
      if (b < 0) return -1;
      return out_.bindings[b].unique_classdef;
    }
    return -1;
  }

  void resolve() {
    // Unique-classdef validity: any other def of the same name invalidates it.
    for (auto& binding : out_.bindings) {
      if (binding.classdef_count != 1 || binding.def_count != 1) {
        binding.unique_classdef = -1;
      }
    }

    // Base classes.
    for (const auto& base : bases_) {
      ClassInfo& cls = out_.classes[static_cast<size_t>(base.class_index)];
      if (base.name.empty()) {
        cls.bases_all_known = false;
        continue;
      }
      int b = resolve_name(cls.enclosing_scope, base.name);
      if (b >= 0) {
        int local = out_.bindings[b].unique_classdef;
        if (local >= 0) {
          cls.local_bases.push_back(local);
        } else {
          cls.bases_all_known = false;
        }
      } else if (base.name != "object") {
        cls.bases_all_known = false;
      }
    }
    for (auto& cls : out_.classes) cls.fully_local = cls.bases_all_known;
    for (bool changed = true; changed;) {
      changed = false;
      for (auto& cls : out_.classes) {
        if (!cls.fully_local) continue;
        for (int base : cls.local_bases) {
          if (!out_.classes[static_cast<size_t>(base)].fully_local) {
            cls.fully_local = false;
            changed = true;
            break;
          }
        }
      }
    }

    // Local instance inference: every assignment must be a constructor call
    // of one and the same local class.
    std::vector<int> fact_count(out_.bindings.size(), 0);
    for (const auto& fact : ctor_facts_) {
      Binding& binding = out_.bindings[static_cast<size_t>(fact.binding)];
      fact_count[static_cast<size_t>(fact.binding)] += 1;
      int ctor_binding = resolve_name(fact.scope, fact.callee);
      int cls = ctor_binding >= 0 ? out_.bindings[static_cast<size_t>(ctor_binding)].unique_classdef : -1;
      if (cls < 0) {
        binding.inferred_class = -1;
      } else if (binding.inferred_class == -2) {
        binding.inferred_class = cls;
      } else if (binding.inferred_class != cls) {
        binding.inferred_class = -1;
      }
    }
    for (size_t i = 0; i < out_.bindings.size(); ++i) {
      Binding& binding = out_.bindings[i];
      if (binding.inferred_class >= 0 && binding.def_count != fact_count[i]) {
        binding.inferred_class = -1;  // some other assignment poisons it
      }
      if (binding.inferred_class == -2) binding.inferred_class = -1;
    }

    // Attribute accesses.
    for (auto& pending : attrs_) {
      AttrAccess access = pending.access;
      const OperandDesc& recv = pending.receiver;
      if (recv.kind == OperandDesc::NameRef) {
        int b = resolve_name(recv.scope, recv.name);
        if (b >= 0) {
          const Binding& binding = out_.bindings[static_cast<size_t>(b)];
          if (binding.receiver_of_class >= 0) {
            access.receiver_is_self = true;
            access.receiver_class = binding.receiver_of_class;
          } else if (binding.classobj_receiver_of >= 0) {
            access.receiver_is_class_object = true;
            access.receiver_class = binding.classobj_receiver_of;
          } else if (binding.unique_classdef >= 0) {
            access.receiver_is_class_object = true;
            access.receiver_class = binding.unique_classdef;
          } else if (binding.inferred_class >= 0) {
            access.receiver_class = binding.inferred_class;
          }
        }
      } else if (recv.kind == OperandDesc::CtorCall) {
        int b = resolve_name(recv.scope, recv.name);
        if (b >= 0) {
          access.receiver_class = out_.bindings[static_cast<size_t>(b)].unique_classdef;
        }
      }
      if ((access.receiver_is_self || access.receiver_is_class_object) &&
          access.is_store && access.receiver_class >= 0) {
        out_.classes[static_cast<size_t>(access.receiver_class)].instance_attrs.insert(
            access.attr);
      }
      out_.attr_accesses.push_back(std::move(access));
    }

    for (auto& cls : out_.classes) {
      cls.dynamic_attrs = cls.class_body_members.contains("__getattr__") ||
                          cls.class_body_members.contains("__getattribute__") ||
                          cls.class_body_members.contains("__setattr__");
    }

    // Binary/comparison operands.
    for (const auto& op : ops_) {
      BinOpUse use;
      use.pos = op.pos;
      use.op_text = op.op_text;
      use.types.left_class = operand_class(op.left);
      use.types.right_class = operand_class(op.right);
      out_.comparable_ops.push_back(std::move(use));
    }

    // Name references.
    for (const auto& ref : refs_) {
      int b = resolve_name(ref.scope, ref.name);
      if (b >= 0) {
        out_.bindings[static_cast<size_t>(b)].references.push_back(ref.use);
        continue;
      }
      if (!python_builtins().contains(ref.name)) {
        out_.unbound_loads.push_back({ref.name, ref.use.begin});
      }
    }
  }
};

}  // namespace

bool ModuleSemantics::class_defines(int class_index, const std::string& member) const {
  std::deque<int> queue{class_index};
  std::set<int> seen;
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    if (cur < 0 || !seen.insert(cur).second) continue;
    const ClassInfo& cls = classes[static_cast<size_t>(cur)];
    if (cls.class_body_members.contains(member) || cls.instance_attrs.contains(member)) {
      return true;
    }
    for (int base : cls.local_bases) queue.push_back(base);
  }
  return false;
}

int ModuleSemantics::find_class(const std::string& qualified) const {
  for (size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].qualified == qualified) return static_cast<int>(i);
  }
  return -1;
}

ModuleSemantics analyze_module(const Module& module) {
  return Analyzer(module).run();
}

const std::set<std::string>& python_builtins() {
  static const std::set<std::string> names = {
      "ArithmeticError", "AssertionError", "AttributeError", "BaseException",
      "BaseExceptionGroup", "BlockingIOError", "BrokenPipeError", "BufferError",
      "BytesWarning", "ChildProcessError", "ConnectionAbortedError",
      "ConnectionError", "ConnectionRefusedError", "ConnectionResetError",
      "DeprecationWarning", "EOFError", "Ellipsis", "EncodingWarning",
      "EnvironmentError", "Exception", "FileExistsError", "FileNotFoundError",
      "FloatingPointError", "FutureWarning", "GeneratorExit", "IOError",
      "ImportError", "ImportWarning", "IndentationError", "IndexError",
      "InterruptedError", "IsADirectoryError", "KeyError", "KeyboardInterrupt",
      "LookupError", "MemoryError", "ModuleNotFoundError", "NameError",
      "NotADirectoryError", "NotImplemented", "NotImplementedError", "OSError",
      "OverflowError", "PendingDeprecationWarning", "PermissionError",
      "ProcessLookupError", "RecursionError", "ReferenceError", "ResourceWarning",
      "RuntimeError", "RuntimeWarning", "StopAsyncIteration", "StopIteration",
      "SyntaxError", "SyntaxWarning", "SystemError", "SystemExit", "TabError",
      "TimeoutError", "TypeError", "UnboundLocalError", "UnicodeDecodeError",
      "UnicodeEncodeError", "UnicodeError", "UnicodeTranslateError",
      "UnicodeWarning", "UserWarning", "ValueError", "Warning", "ZeroDivisionError",
      "__build_class__", "__builtins__", "__debug__", "__doc__", "__file__",
      "__import__", "__loader__", "__name__", "__package__", "__spec__", "abs",
      "aiter", "anext", "all", "any", "ascii", "bin", "bool", "breakpoint",
      "bytearray", "bytes", "callable", "chr", "classmethod", "compile", "complex",
      "copyright", "credits", "delattr", "dict", "dir", "divmod", "enumerate",
      "eval", "exec", "exit", "filter", "float", "format", "frozenset", "getattr",
      "globals", "hasattr", "hash", "help", "hex", "id", "input", "int",
      "isinstance", "issubclass", "iter", "len", "license", "list", "locals",
      "map", "max", "memoryview", "min", "next", "object", "oct", "open", "ord",
      "pow", "print", "property", "quit", "range", "repr", "reversed", "round",
      "set", "setattr", "slice", "sorted", "staticmethod", "str", "sum", "super",
      "tuple", "type", "vars", "zip",
  };
  return names;
}

}  // namespace typedrift::py
