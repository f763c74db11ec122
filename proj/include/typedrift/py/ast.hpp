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

#ifndef TYPEDRIFT_PY_AST_HPP
#define TYPEDRIFT_PY_AST_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "typedrift/py/source.hpp"

namespace typedrift::py {

// Statement/expression tree for the supported Python subset. Nodes keep the
// spans of their identifier tokens so renames can splice the original text.

struct Expr;
struct Stmt;
using ExprPtr = std::unique_ptr<Expr>;
using StmtPtr = std::unique_ptr<Stmt>;

enum class ExprKind {
  Name,
  Attribute,
  Subscript,
  Call,
  Literal,  // number/string/True/False/None/Ellipsis
  Tuple,
  List,
  Set,
  Dict,
  BinOp,
  UnaryOp,
  BoolOp,
  Compare,
  IfExp,
  Lambda,
  Comprehension,
  Starred,
  Slice,
  Yield,
  Await,
  NamedExpr,
};

enum class BinaryOp {
  Add, Sub, Mul, MatMul, Div, FloorDiv, Mod, Pow, LShift, RShift,
  BitOr, BitXor, BitAnd,
};

enum class UnaryOpKind { Not, Neg, Pos, Invert };
enum class BoolOpKind { And, Or };
enum class CmpOp { Lt, Le, Gt, Ge, Eq, Ne, In, NotIn, Is, IsNot };
enum class LiteralKind { Number, String, FString, True, False, None, Ellipsis };

const char* binary_op_text(BinaryOp op);
const char* cmp_op_text(CmpOp op);

struct Expr {
  ExprKind kind;
  SourcePos begin;
  SourcePos end;

  virtual ~Expr() = default;

 protected:
  explicit Expr(ExprKind k) : kind(k) {}
};

struct NameExpr : Expr {
  NameExpr() : Expr(ExprKind::Name) {}
  std::string id;
};

struct AttributeExpr : Expr {
  AttributeExpr() : Expr(ExprKind::Attribute) {}
  ExprPtr value;
  std::string attr;
  SourcePos attr_begin;
  SourcePos attr_end;
};

struct SubscriptExpr : Expr {
  SubscriptExpr() : Expr(ExprKind::Subscript) {}
  ExprPtr value;
  ExprPtr index;
};

struct KeywordArg {
  std::string name;  // empty for **kwargs
  SourcePos name_begin;
  SourcePos name_end;
  ExprPtr value;
};

struct CallExpr : Expr {
  CallExpr() : Expr(ExprKind::Call) {}
  ExprPtr func;
  std::vector<ExprPtr> args;
  std::vector<KeywordArg> keywords;
};

struct LiteralExpr : Expr {
  LiteralExpr() : Expr(ExprKind::Literal) {}
  LiteralKind literal = LiteralKind::Number;
  std::string raw;  // raw token text (first token for concatenated strings)
};

struct TupleExpr : Expr {
  TupleExpr() : Expr(ExprKind::Tuple) {}
  std::vector<ExprPtr> elts;
};

struct ListExpr : Expr {
  ListExpr() : Expr(ExprKind::List) {}
  std::vector<ExprPtr> elts;
};

struct SetExpr : Expr {
  SetExpr() : Expr(ExprKind::Set) {}
  std::vector<ExprPtr> elts;
};

struct DictExpr : Expr {
  DictExpr() : Expr(ExprKind::Dict) {}
  std::vector<ExprPtr> keys;  // null entry for **expansion
  std::vector<ExprPtr> values;
};

struct BinOpExpr : Expr {
  BinOpExpr() : Expr(ExprKind::BinOp) {}
  BinaryOp op = BinaryOp::Add;
  SourcePos op_pos;
  ExprPtr left;
  ExprPtr right;
};

struct UnaryOpExpr : Expr {
  UnaryOpExpr() : Expr(ExprKind::UnaryOp) {}
  UnaryOpKind op = UnaryOpKind::Not;
  ExprPtr operand;
};

struct BoolOpExpr : Expr {
  BoolOpExpr() : Expr(ExprKind::BoolOp) {}
  BoolOpKind op = BoolOpKind::And;
  std::vector<ExprPtr> values;
};

struct CompareExpr : Expr {
  CompareExpr() : Expr(ExprKind::Compare) {}
  ExprPtr left;
  std::vector<CmpOp> ops;
  std::vector<SourcePos> op_positions;
  std::vector<ExprPtr> comparators;
};

struct IfExpExpr : Expr {
  IfExpExpr() : Expr(ExprKind::IfExp) {}
  ExprPtr body;
  ExprPtr test;
  ExprPtr orelse;
};

enum class ParamKind {
  Plain,
  VarArgs,        // *args
  KwArgs,         // **kwargs
  KwOnlyMarker,   // bare *
  PosOnlyMarker,  // /
};

struct Param {
  ParamKind param_kind = ParamKind::Plain;
  std::string name;  // empty for markers
  SourcePos name_begin;
  SourcePos name_end;
  ExprPtr annotation;
  ExprPtr default_value;
};

struct LambdaExpr : Expr {
  LambdaExpr() : Expr(ExprKind::Lambda) {}
  std::vector<Param> params;
  ExprPtr body;
};

enum class ComprehensionKind { ListComp, SetComp, DictComp, Generator };

struct ComprehensionClause {
  ExprPtr target;
  ExprPtr iter;
  std::vector<ExprPtr> conditions;
  bool is_async = false;
};

struct ComprehensionExpr : Expr {
  ComprehensionExpr() : Expr(ExprKind::Comprehension) {}
  ComprehensionKind comp_kind = ComprehensionKind::ListComp;
  ExprPtr element;
  ExprPtr value;  // dict comprehensions only
  std::vector<ComprehensionClause> clauses;
};

struct StarredExpr : Expr {
  StarredExpr() : Expr(ExprKind::Starred) {}
  ExprPtr value;
};

struct SliceExpr : Expr {
  SliceExpr() : Expr(ExprKind::Slice) {}
  ExprPtr lower;
  ExprPtr upper;
  ExprPtr step;
};

struct YieldExpr : Expr {
  YieldExpr() : Expr(ExprKind::Yield) {}
  ExprPtr value;
  bool is_from = false;
};

struct AwaitExpr : Expr {
  AwaitExpr() : Expr(ExprKind::Await) {}
  ExprPtr value;
};

struct NamedExprExpr : Expr {
  NamedExprExpr() : Expr(ExprKind::NamedExpr) {}
  ExprPtr target;  // always a NameExpr
  ExprPtr value;
};

enum class StmtKind {
  FunctionDef,
  ClassDef,
  Return,
  Delete,
  Assign,
  AugAssign,
  AnnAssign,
  For,
  While,
  If,
  With,
  Raise,
  Try,
  Assert,
  Import,
  ImportFrom,
  Global,
  Nonlocal,
  ExprStmt,
  Pass,
  Break,
  Continue,
};

struct Stmt {
  StmtKind kind;
  SourcePos begin;  // first token of the statement proper (after decorators)
  SourcePos end;    // one past the statement's last token

  virtual ~Stmt() = default;

 protected:
  explicit Stmt(StmtKind k) : kind(k) {}
};

struct FunctionDefStmt : Stmt {
  FunctionDefStmt() : Stmt(StmtKind::FunctionDef) {}
  std::string name;
  SourcePos name_begin;
  SourcePos name_end;
  std::vector<Param> params;
  ExprPtr returns;
  std::vector<ExprPtr> decorators;
  SourcePos decorators_begin;  // == begin when no decorators
  std::vector<StmtPtr> body;
  bool is_async = false;
};

struct ClassDefStmt : Stmt {
  ClassDefStmt() : Stmt(StmtKind::ClassDef) {}
  std::string name;
  SourcePos name_begin;
  SourcePos name_end;
  std::vector<ExprPtr> bases;
  std::vector<KeywordArg> keywords;
  std::vector<ExprPtr> decorators;
  SourcePos decorators_begin;
  std::vector<StmtPtr> body;
};

struct ReturnStmt : Stmt {
  ReturnStmt() : Stmt(StmtKind::Return) {}
  ExprPtr value;
};

struct DeleteStmt : Stmt {
  DeleteStmt() : Stmt(StmtKind::Delete) {}
  std::vector<ExprPtr> targets;
};

struct AssignStmt : Stmt {
  AssignStmt() : Stmt(StmtKind::Assign) {}
  std::vector<ExprPtr> targets;
  ExprPtr value;
};

struct AugAssignStmt : Stmt {
  AugAssignStmt() : Stmt(StmtKind::AugAssign) {}
  ExprPtr target;
  BinaryOp op = BinaryOp::Add;
  ExprPtr value;
};

struct AnnAssignStmt : Stmt {
  AnnAssignStmt() : Stmt(StmtKind::AnnAssign) {}
  ExprPtr target;
  ExprPtr annotation;
  ExprPtr value;
};

struct ForStmt : Stmt {
  ForStmt() : Stmt(StmtKind::For) {}
  ExprPtr target;
  ExprPtr iter;
  std::vector<StmtPtr> body;
  std::vector<StmtPtr> orelse;
  bool is_async = false;
};

struct WhileStmt : Stmt {
  WhileStmt() : Stmt(StmtKind::While) {}
  ExprPtr test;
  std::vector<StmtPtr> body;
  std::vector<StmtPtr> orelse;
};

struct IfStmt : Stmt {
  IfStmt() : Stmt(StmtKind::If) {}
  ExprPtr test;
  std::vector<StmtPtr> body;
  std::vector<StmtPtr> orelse;
  bool orelse_is_elif = false;  // orelse holds a chained `elif`, not an `else:` suite
};

struct WithItem {
  ExprPtr context;
  ExprPtr optional_vars;
};

struct WithStmt : Stmt {
  WithStmt() : Stmt(StmtKind::With) {}
  std::vector<WithItem> items;
  std::vector<StmtPtr> body;
  bool is_async = false;
};

struct RaiseStmt : Stmt {
  RaiseStmt() : Stmt(StmtKind::Raise) {}
  ExprPtr exc;
  ExprPtr cause;
};

struct ExceptHandler {
  ExprPtr type;
  std::string name;  // empty when no `as`
  SourcePos name_begin;
  SourcePos name_end;
  std::vector<StmtPtr> body;
};

struct TryStmt : Stmt {
  TryStmt() : Stmt(StmtKind::Try) {}
  std::vector<StmtPtr> body;
  std::vector<ExceptHandler> handlers;
  std::vector<StmtPtr> orelse;
  std::vector<StmtPtr> finalbody;
};

struct AssertStmt : Stmt {
  AssertStmt() : Stmt(StmtKind::Assert) {}
  ExprPtr test;
  ExprPtr msg;
};

struct ImportAlias {
  std::string dotted;  // e.g. "os.path"
  std::string asname;  // empty when no `as`
  SourcePos begin;
  SourcePos end;
  SourcePos asname_begin;
  SourcePos asname_end;
};

struct ImportStmt : Stmt {
  ImportStmt() : Stmt(StmtKind::Import) {}
  std::vector<ImportAlias> names;
};

struct ImportFromStmt : Stmt {
  ImportFromStmt() : Stmt(StmtKind::ImportFrom) {}
  std::string module;  // may be empty for `from . import x`
  int level = 0;       // number of leading dots
  bool star = false;
  std::vector<ImportAlias> names;
};

struct GlobalStmt : Stmt {
  GlobalStmt() : Stmt(StmtKind::Global) {}
  std::vector<std::string> names;
};

struct NonlocalStmt : Stmt {
  NonlocalStmt() : Stmt(StmtKind::Nonlocal) {}
  std::vector<std::string> names;
};

struct ExprStmtNode : Stmt {
  ExprStmtNode() : Stmt(StmtKind::ExprStmt) {}
  ExprPtr value;
};

struct PassStmt : Stmt {
  PassStmt() : Stmt(StmtKind::Pass) {}
};

struct BreakStmt : Stmt {
  BreakStmt() : Stmt(StmtKind::Break) {}
};

struct ContinueStmt : Stmt {
  ContinueStmt() : Stmt(StmtKind::Continue) {}
};

struct Module {
  std::vector<StmtPtr> body;
};

template <typename T>
const T& as(const Stmt& s) {
  return static_cast<const T&>(s);
}

template <typename T>
const T& as(const Expr& e) {
  return static_cast<const T&>(e);
}

}  // namespace typedrift::py

#endif  // TYPEDRIFT_PY_AST_HPP
