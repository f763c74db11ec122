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

#include "typedrift/py/parser.hpp"

#include <utility>

#include "typedrift/py/lexer.hpp"

namespace typedrift::py {

namespace {

// Recursive-descent parser over the token stream. Grammar follows Python
// 3.10 minus match statements and a few rarities; anything outside the
// subset fails with a located message and the file is treated as unparsable.
class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  std::unique_ptr<Module> parse() {
    auto module = std::make_unique<Module>();
    skip_newlines();
    while (!check(TokenKind::EndOfFile)) {
      parse_statement_into(module->body);
      skip_newlines();
    }
    return module;
  }

 private:
  // ---- token plumbing ----

  const Token& peek(size_t ahead = 0) const {
    size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }

  const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  bool check(TokenKind kind) const { return peek().kind == kind; }
  bool check_op(std::string_view op) const { return peek().is_op(op); }
  bool check_keyword(std::string_view kw) const { return peek().is_keyword(kw); }

  bool match_op(std::string_view op) {
    if (!check_op(op)) return false;
    advance();
    return true;
  }

  bool match_keyword(std::string_view kw) {
    if (!check_keyword(kw)) return false;
    advance();
    return true;
  }

  const Token& expect_op(std::string_view op) {
    if (!check_op(op)) fail(std::string("expected '") + std::string(op) + "'");
    return advance();
  }

  const Token& expect_keyword(std::string_view kw) {
    if (!check_keyword(kw)) fail(std::string("expected '") + std::string(kw) + "'");
    return advance();
  }

  const Token& expect(TokenKind kind, const char* what) {
    if (!check(kind)) fail(std::string("expected ") + what);
    return advance();
  }

  void expect_newline() {
    if (check(TokenKind::EndOfFile)) return;
    if (!check(TokenKind::Newline)) fail("expected end of line");
    advance();
  }

  void skip_newlines() {
    while (check(TokenKind::Newline)) advance();
  }

  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    std::string got;
    switch (t.kind) {
      case TokenKind::EndOfFile: got = "end of file"; break;
      case TokenKind::Newline: got = "end of line"; break;
      case TokenKind::Indent: got = "indent"; break;
      case TokenKind::Dedent: got = "dedent"; break;
      default: got = "'" + t.text + "'"; break;
    }
    throw SyntaxFailure({t.begin.line, t.begin.col, message + ", got " + got});
  }

  // ---- statements ----

  void parse_statement_into(std::vector<StmtPtr>& out) {
    if (is_compound_start()) {
      out.push_back(parse_compound_statement());
      return;
    }
    auto stmts = parse_simple_statements();
    expect_newline();
    for (auto& stmt : stmts) out.push_back(std::move(stmt));
  }

  bool is_compound_start() const {
    return check_op("@") || check_keyword("def") || check_keyword("class") ||
           check_keyword("if") || check_keyword("while") || check_keyword("for") ||
           check_keyword("try") || check_keyword("with") || check_keyword("async");
  }

  StmtPtr parse_compound_statement() {
    if (check_op("@") || check_keyword("def") || check_keyword("class") ||
        (check_keyword("async") && peek(1).is_keyword("def"))) {
      return parse_decorated();
    }
    if (check_keyword("if")) return parse_if();
    if (check_keyword("while")) return parse_while();
    if (check_keyword("for")) return parse_for(false);
    if (check_keyword("try")) return parse_try();
    if (check_keyword("with")) return parse_with(false);
    if (check_keyword("async")) {
      SourcePos begin = peek().begin;
      advance();
      if (check_keyword("for")) {
        auto stmt = parse_for(true);
        stmt->begin = begin;
        return stmt;
      }
      if (check_keyword("with")) {
        auto stmt = parse_with(true);
        stmt->begin = begin;
        return stmt;
      }
      fail("expected 'def', 'for' or 'with' after 'async'");
    }
    fail("expected a compound statement");
  }

  StmtPtr parse_decorated() {
    std::vector<ExprPtr> decorators;
    SourcePos decorators_begin = peek().begin;
    while (check_op("@")) {
      advance();
      decorators.push_back(parse_namedexpr_test());
      expect_newline();
      skip_newlines();
    }
    bool is_async = false;
    SourcePos async_begin = peek().begin;
    if (check_keyword("async")) {
      is_async = true;
      advance();
    }
    if (check_keyword("def")) {
      auto fn = parse_function_def(is_async);
      if (is_async) fn->begin = async_begin;
      fn->decorators = std::move(decorators);
      fn->decorators_begin = fn->decorators.empty() ? fn->begin : decorators_begin;
      return fn;
    }
    if (check_keyword("class")) {
      if (is_async) fail("'async' is not valid before 'class'");
      auto cls = parse_class_def();
      cls->decorators = std::move(decorators);
      cls->decorators_begin = cls->decorators.empty() ? cls->begin : decorators_begin;
      return cls;
    }
    fail("expected 'def' or 'class' after decorators");
  }

  std::unique_ptr<FunctionDefStmt> parse_function_def(bool is_async) {
    auto stmt = std::make_unique<FunctionDefStmt>();
    stmt->is_async = is_async;
    stmt->begin = peek().begin;
    expect_keyword("def");
    const Token& name = expect(TokenKind::Name, "function name");
    stmt->name = name.text;
    stmt->name_begin = name.begin;
    stmt->name_end = name.end;
    expect_op("(");
    stmt->params = parse_param_list();
    expect_op(")");
    if (match_op("->")) stmt->returns = parse_test();
    stmt->body = parse_suite();
    stmt->end = suite_end(stmt->body);
    stmt->decorators_begin = stmt->begin;
    return stmt;
  }

  std::vector<Param> parse_param_list() {
    std::vector<Param> params;
    bool seen_star = false;
    while (!check_op(")")) {
      Param p;
      if (match_op("*")) {
        if (check(TokenKind::Name)) {
          p.param_kind = ParamKind::VarArgs;
          const Token& name = advance();
          p.name = name.text;
          p.name_begin = name.begin;
          p.name_end = name.end;
          if (match_op(":")) p.annotation = parse_test();
        } else {
          p.param_kind = ParamKind::KwOnlyMarker;
        }
        seen_star = true;
      } else if (match_op("**")) {
        p.param_kind = ParamKind::KwArgs;
        const Token& name = expect(TokenKind::Name, "parameter name");
        p.name = name.text;
        p.name_begin = name.begin;
        p.name_end = name.end;
        if (match_op(":")) p.annotation = parse_test();
      } else if (check_op("/")) {
        advance();
        p.param_kind = ParamKind::PosOnlyMarker;
      } else {
        const Token& name = expect(TokenKind::Name, "parameter name");
        p.name = name.text;
        p.name_begin = name.begin;
        p.name_end = name.end;
        if (match_op(":")) p.annotation = parse_test();
        if (match_op("=")) p.default_value = parse_test();
      }
      params.push_back(std::move(p));
      if (!match_op(",")) break;
    }
    (void)seen_star;
    return params;
  }

  std::unique_ptr<ClassDefStmt> parse_class_def() {
    auto stmt = std::make_unique<ClassDefStmt>();
    stmt->begin = peek().begin;
    expect_keyword("class");
    const Token& name = expect(TokenKind::Name, "class name");
    stmt->name = name.text;
    stmt->name_begin = name.begin;
    stmt->name_end = name.end;
    if (match_op("(")) {
      while (!check_op(")")) {
        if (check(TokenKind::Name) && peek(1).is_op("=")) {
          KeywordArg kw;
          const Token& kw_name = advance();
          kw.name = kw_name.text;
          kw.name_begin = kw_name.begin;
          kw.name_end = kw_name.end;
          advance();  // '='
          kw.value = parse_test();
          stmt->keywords.push_back(std::move(kw));
        } else if (match_op("**")) {
          KeywordArg kw;
          kw.value = parse_test();
          stmt->keywords.push_back(std::move(kw));
        } else {
          stmt->bases.push_back(parse_test());
        }
        if (!match_op(",")) break;
      }
      expect_op(")");
    }
    stmt->body = parse_suite();
    stmt->end = suite_end(stmt->body);
    stmt->decorators_begin = stmt->begin;
    return stmt;
  }

  std::vector<StmtPtr> parse_suite() {
    expect_op(":");
    std::vector<StmtPtr> body;
    if (check(TokenKind::Newline)) {
      advance();
      skip_newlines();
      expect(TokenKind::Indent, "an indented block");
      skip_newlines();
      while (!check(TokenKind::Dedent) && !check(TokenKind::EndOfFile)) {
        parse_statement_into(body);
        skip_newlines();
      }
      if (check(TokenKind::Dedent)) advance();
    } else {
      // Inline suite: simple statements on the `:` line.
      body = parse_simple_statements();
      expect_newline();
    }
    if (body.empty()) fail("expected an indented block");
    return body;
  }

  static SourcePos suite_end(const std::vector<StmtPtr>& body) {
    return body.empty() ? SourcePos{} : body.back()->end;
  }

  StmtPtr parse_if() {
    auto stmt = std::make_unique<IfStmt>();
    stmt->begin = peek().begin;
    advance();  // if / elif
    stmt->test = parse_namedexpr_test();
    stmt->body = parse_suite();
    stmt->end = suite_end(stmt->body);
    skip_newlines();
    if (check_keyword("elif")) {
      stmt->orelse.push_back(parse_if());
      stmt->end = stmt->orelse.back()->end;
    } else if (check_keyword("else")) {
      advance();
      stmt->orelse = parse_suite();
      stmt->end = suite_end(stmt->orelse);
    }
    return stmt;
  }

  StmtPtr parse_while() {
    auto stmt = std::make_unique<WhileStmt>();
    stmt->begin = peek().begin;
    advance();
    stmt->test = parse_namedexpr_test();
    stmt->body = parse_suite();
    stmt->end = suite_end(stmt->body);
    skip_newlines();
    if (match_keyword("else")) {
      stmt->orelse = parse_suite();
      stmt->end = suite_end(stmt->orelse);
    }
    return stmt;
  }

  StmtPtr parse_for(bool is_async) {
    auto stmt = std::make_unique<ForStmt>();
    stmt->is_async = is_async;
    stmt->begin = peek().begin;
    expect_keyword("for");
    stmt->target = parse_target_list();
    expect_keyword("in");
    stmt->iter = parse_testlist();
    stmt->body = parse_suite();
    stmt->end = suite_end(stmt->body);
    skip_newlines();
    if (match_keyword("else")) {
      stmt->orelse = parse_suite();
      stmt->end = suite_end(stmt->orelse);
    }
    return stmt;
  }

  StmtPtr parse_try() {
    auto stmt = std::make_unique<TryStmt>();
    stmt->begin = peek().begin;
    advance();
    stmt->body = parse_suite();
    stmt->end = suite_end(stmt->body);
    skip_newlines();
    bool saw_handler = false;
    while (check_keyword("except")) {
      saw_handler = true;
      advance();
      ExceptHandler handler;
      if (!check_op(":")) {
        handler.type = parse_test();
        if (match_keyword("as")) {
          const Token& name = expect(TokenKind::Name, "exception name");
          handler.name = name.text;
          handler.name_begin = name.begin;
          handler.name_end = name.end;
        }
      }
      handler.body = parse_suite();
      stmt->end = suite_end(handler.body);
      stmt->handlers.push_back(std::move(handler));
      skip_newlines();
    }
    if (match_keyword("else")) {
      if (!saw_handler) fail("'else' requires at least one 'except'");
      stmt->orelse = parse_suite();
      stmt->end = suite_end(stmt->orelse);
      skip_newlines();
    }
    if (match_keyword("finally")) {
      stmt->finalbody = parse_suite();
      stmt->end = suite_end(stmt->finalbody);
    } else if (!saw_handler) {
      fail("expected 'except' or 'finally'");
    }
    return stmt;
  }

  StmtPtr parse_with(bool is_async) {
    auto stmt = std::make_unique<WithStmt>();
    stmt->is_async = is_async;
    stmt->begin = peek().begin;
    expect_keyword("with");
    do {
      WithItem item;
      item.context = parse_test();
      if (match_keyword("as")) item.optional_vars = parse_target();
      stmt->items.push_back(std::move(item));
    } while (match_op(","));
    stmt->body = parse_suite();
    stmt->end = suite_end(stmt->body);
    return stmt;
  }

  std::vector<StmtPtr> parse_simple_statements() {
    std::vector<StmtPtr> stmts;
    stmts.push_back(parse_simple_statement());
    while (match_op(";")) {
      if (check(TokenKind::Newline) || check(TokenKind::EndOfFile)) break;
      stmts.push_back(parse_simple_statement());
    }
    return stmts;
  }

  StmtPtr parse_simple_statement() {
    if (check_keyword("return")) return parse_return();
    if (check_keyword("pass")) return simple_stmt<PassStmt>();
    if (check_keyword("break")) return simple_stmt<BreakStmt>();
    if (check_keyword("continue")) return simple_stmt<ContinueStmt>();
    if (check_keyword("import")) return parse_import();
    if (check_keyword("from")) return parse_import_from();
    if (check_keyword("global")) return parse_scope_decl<GlobalStmt>();
    if (check_keyword("nonlocal")) return parse_scope_decl<NonlocalStmt>();
    if (check_keyword("raise")) return parse_raise();
    if (check_keyword("assert")) return parse_assert();
    if (check_keyword("del")) return parse_delete();
    return parse_expression_statement();
  }

  template <typename T>
  StmtPtr simple_stmt() {
    auto stmt = std::make_unique<T>();
    stmt->begin = peek().begin;
    stmt->end = peek().end;
    advance();
    return stmt;
  }

  StmtPtr parse_return() {
    auto stmt = std::make_unique<ReturnStmt>();
    stmt->begin = peek().begin;
    stmt->end = peek().end;
    advance();
    if (!check(TokenKind::Newline) && !check_op(";") && !check(TokenKind::EndOfFile)) {
      stmt->value = parse_testlist();
      stmt->end = stmt->value->end;
    }
    return stmt;
  }

  StmtPtr parse_raise() {
    auto stmt = std::make_unique<RaiseStmt>();
    stmt->begin = peek().begin;
    stmt->end = peek().end;
    advance();
    if (!check(TokenKind::Newline) && !check_op(";") && !check(TokenKind::EndOfFile)) {
      stmt->exc = parse_test();
      stmt->end = stmt->exc->end;
      if (match_keyword("from")) {
        stmt->cause = parse_test();
        stmt->end = stmt->cause->end;
      }
    }
    return stmt;
  }

  StmtPtr parse_assert() {
    auto stmt = std::make_unique<AssertStmt>();
    stmt->begin = peek().begin;
    advance();
    stmt->test = parse_test();
    stmt->end = stmt->test->end;
    if (match_op(",")) {
      stmt->msg = parse_test();
      stmt->end = stmt->msg->end;
    }
    return stmt;
  }

  StmtPtr parse_delete() {
    auto stmt = std::make_unique<DeleteStmt>();
    stmt->begin = peek().begin;
    advance();
    do {
      stmt->targets.push_back(parse_target());
    } while (match_op(","));
    stmt->end = stmt->targets.back()->end;
    return stmt;
  }

  template <typename T>
  StmtPtr parse_scope_decl() {
    auto stmt = std::make_unique<T>();
    stmt->begin = peek().begin;
    advance();
    do {
      const Token& name = expect(TokenKind::Name, "identifier");
      stmt->names.push_back(name.text);
      stmt->end = name.end;
    } while (match_op(","));
    return stmt;
  }

  StmtPtr parse_import() {
    auto stmt = std::make_unique<ImportStmt>();
    stmt->begin = peek().begin;
    advance();
    do {
      stmt->names.push_back(parse_import_alias(true));
    } while (match_op(","));
    stmt->end = peek(0).begin;  // refined below
    const ImportAlias& last = stmt->names.back();
    stmt->end = last.asname.empty() ? last.end : last.asname_end;
    return stmt;
  }

  ImportAlias parse_import_alias(bool dotted_allowed) {
    ImportAlias alias;
    const Token& first = expect(TokenKind::Name, "module name");
    alias.begin = first.begin;
    alias.end = first.end;
    alias.dotted = first.text;
    while (dotted_allowed && check_op(".")) {
      advance();
      const Token& part = expect(TokenKind::Name, "module name");
      alias.dotted += "." + part.text;
      alias.end = part.end;
    }
    if (match_keyword("as")) {
      const Token& asname = expect(TokenKind::Name, "alias name");
      alias.asname = asname.text;
      alias.asname_begin = asname.begin;
      alias.asname_end = asname.end;
    }
    return alias;
  }

  StmtPtr parse_import_from() {
    auto stmt = std::make_unique<ImportFromStmt>();
    stmt->begin = peek().begin;
    advance();
    while (check_op(".") || check_op("...")) {
      stmt->level += check_op("...") ? 3 : 1;
      advance();
    }
    if (check(TokenKind::Name)) {
      const Token& first = advance();
      stmt->module = first.text;
      while (check_op(".")) {
        advance();
        const Token& part = expect(TokenKind::Name, "module name");
        stmt->module += "." + part.text;
      }
    } else if (stmt->level == 0) {
      fail("expected module name");
    }
    expect_keyword("import");
    if (match_op("*")) {
      stmt->star = true;
      stmt->end = peek().begin;
      return stmt;
    }
    bool parenthesized = match_op("(");
    do {
      if (parenthesized && check_op(")")) break;
      stmt->names.push_back(parse_import_alias(false));
    } while (match_op(","));
    if (parenthesized) expect_op(")");
    const ImportAlias& last = stmt->names.back();
    stmt->end = last.asname.empty() ? last.end : last.asname_end;
    return stmt;
  }

  StmtPtr parse_expression_statement() {
    SourcePos begin = peek().begin;
    ExprPtr first = parse_testlist_star();

    if (check_op(":")) {
      advance();
      auto stmt = std::make_unique<AnnAssignStmt>();
      stmt->begin = begin;
      stmt->target = std::move(first);
      require_assignable(*stmt->target, /*annotated=*/true);
      stmt->annotation = parse_test();
      stmt->end = stmt->annotation->end;
      if (match_op("=")) {
        stmt->value = parse_testlist_star();
        stmt->end = stmt->value->end;
      }
      return stmt;
    }

    if (auto op = check_aug_assign()) {
      advance();
      auto stmt = std::make_unique<AugAssignStmt>();
      stmt->begin = begin;
      stmt->target = std::move(first);
      require_assignable(*stmt->target, /*annotated=*/true);
      stmt->op = *op;
      stmt->value = check_keyword("yield") ? parse_yield_expr() : parse_testlist();
      stmt->end = stmt->value->end;
      return stmt;
    }

    if (check_op("=")) {
      auto stmt = std::make_unique<AssignStmt>();
      stmt->begin = begin;
      stmt->targets.push_back(std::move(first));
      while (match_op("=")) {
        ExprPtr next =
            check_keyword("yield") ? parse_yield_expr() : parse_testlist_star();
        stmt->targets.push_back(std::move(next));
      }
      stmt->value = std::move(stmt->targets.back());
      stmt->targets.pop_back();
      for (const auto& target : stmt->targets) {
        require_assignable(*target, /*annotated=*/false);
      }
      stmt->end = stmt->value->end;
      return stmt;
    }

    auto stmt = std::make_unique<ExprStmtNode>();
    stmt->begin = begin;
    stmt->end = first->end;
    stmt->value = std::move(first);
    return stmt;
  }

  std::optional<BinaryOp> check_aug_assign() const {
    if (peek().kind != TokenKind::Op) return std::nullopt;
    const std::string& t = peek().text;
    if (t == "+=") return BinaryOp::Add;
    if (t == "-=") return BinaryOp::Sub;
    if (t == "*=") return BinaryOp::Mul;
    if (t == "@=") return BinaryOp::MatMul;
    if (t == "/=") return BinaryOp::Div;
    if (t == "//=") return BinaryOp::FloorDiv;
    if (t == "%=") return BinaryOp::Mod;
    if (t == "**=") return BinaryOp::Pow;
    if (t == "<<=") return BinaryOp::LShift;
    if (t == ">>=") return BinaryOp::RShift;
    if (t == "|=") return BinaryOp::BitOr;
    if (t == "^=") return BinaryOp::BitXor;
    if (t == "&=") return BinaryOp::BitAnd;
    return std::nullopt;
  }

  void require_assignable(const Expr& e, bool annotated) const {
    switch (e.kind) {
      case ExprKind::Name:
      case ExprKind::Attribute:
      case ExprKind::Subscript:
        return;
      case ExprKind::Starred:
        if (!annotated) return;
        break;
      case ExprKind::Tuple:
        if (annotated) break;
        for (const auto& elt : as<TupleExpr>(e).elts) require_assignable(*elt, false);
        return;
      case ExprKind::List:
        if (annotated) break;
        for (const auto& elt : as<ListExpr>(e).elts) require_assignable(*elt, false);
        return;
      default:
        break;
    }
    throw SyntaxFailure({e.begin.line, e.begin.col, "cannot assign to this expression"});
  }

  // ---- expressions ----

  ExprPtr parse_target() {
    ExprPtr target = parse_or_expr();
    require_assignable(*target, false);
    return target;
  }

  ExprPtr parse_target_list() {
    SourcePos begin = peek().begin;
    ExprPtr first = parse_star_or_target();
    if (!check_op(",")) return first;
    auto tuple = std::make_unique<TupleExpr>();
    tuple->begin = begin;
    tuple->elts.push_back(std::move(first));
    while (match_op(",")) {
      if (check_keyword("in")) break;
      tuple->elts.push_back(parse_star_or_target());
    }
    tuple->end = tuple->elts.back()->end;
    return tuple;
  }

  ExprPtr parse_star_or_target() {
    if (check_op("*")) {
      auto starred = std::make_unique<StarredExpr>();
      starred->begin = peek().begin;
      advance();
      starred->value = parse_target();
      starred->end = starred->value->end;
      return starred;
    }
    return parse_target();
  }

  ExprPtr parse_testlist() {
    SourcePos begin = peek().begin;
    ExprPtr first = parse_test();
    if (!check_op(",")) return first;
    auto tuple = std::make_unique<TupleExpr>();
    tuple->begin = begin;
    tuple->elts.push_back(std::move(first));
    while (match_op(",")) {
      if (at_expression_end()) break;
      tuple->elts.push_back(parse_test());
    }
    tuple->end = tuple->elts.back()->end;
    return tuple;
  }

  ExprPtr parse_testlist_star() {
    SourcePos begin = peek().begin;
    ExprPtr first = check_op("*") ? parse_star_expr() : parse_test();
    if (!check_op(",")) return first;
    auto tuple = std::make_unique<TupleExpr>();
    tuple->begin = begin;
    tuple->elts.push_back(std::move(first));
    while (match_op(",")) {
      if (at_expression_end()) break;
      tuple->elts.push_back(check_op("*") ? parse_star_expr() : parse_test());
    }
    tuple->end = tuple->elts.back()->end;
    return tuple;
  }

  bool at_expression_end() const {
    return check(TokenKind::Newline) || check(TokenKind::EndOfFile) ||
           check_op("=") || check_op(")") || check_op("]") || check_op("}") ||
           check_op(":") || check_op(";");
  }

  ExprPtr parse_star_expr() {
    auto starred = std::make_unique<StarredExpr>();
    starred->begin = peek().begin;
    expect_op("*");
    starred->value = parse_or_expr();
    starred->end = starred->value->end;
    return starred;
  }

  ExprPtr parse_namedexpr_test() {
    ExprPtr test = parse_test();
    if (check_op(":=")) {
      if (test->kind != ExprKind::Name) fail("':=' target must be a name");
      advance();
      auto named = std::make_unique<NamedExprExpr>();
      named->begin = test->begin;
      named->target = std::move(test);
      named->value = parse_test();
      named->end = named->value->end;
      return named;
    }
    return test;
  }

  ExprPtr parse_test() {
    if (check_keyword("lambda")) return parse_lambda();
    ExprPtr body = parse_or_test();
    if (check_keyword("if")) {
      // Conditional expression; beware of comprehension `if` handled upstream.
      advance();
      auto ifexp = std::make_unique<IfExpExpr>();
      ifexp->begin = body->begin;
      ifexp->body = std::move(body);
      ifexp->test = parse_or_test();
      expect_keyword("else");
      ifexp->orelse = parse_test();
      ifexp->end = ifexp->orelse->end;
      return ifexp;
    }
    return body;
  }

  ExprPtr parse_lambda() {
    auto lambda = std::make_unique<LambdaExpr>();
    lambda->begin = peek().begin;
    expect_keyword("lambda");
    if (!check_op(":")) {
      // Same parameter grammar, but annotations are not allowed.
      do {
        if (check_op(":")) break;
        Param p;
        if (match_op("*")) {
          if (check(TokenKind::Name)) {
            p.param_kind = ParamKind::VarArgs;
            const Token& name = advance();
            p.name = name.text;
            p.name_begin = name.begin;
            p.name_end = name.end;
          } else {
            p.param_kind = ParamKind::KwOnlyMarker;
          }
        } else if (match_op("**")) {
          p.param_kind = ParamKind::KwArgs;
          const Token& name = expect(TokenKind::Name, "parameter name");
          p.name = name.text;
          p.name_begin = name.begin;
          p.name_end = name.end;
        } else {
          const Token& name = expect(TokenKind::Name, "parameter name");
          p.name = name.text;
          p.name_begin = name.begin;
          p.name_end = name.end;
          if (match_op("=")) p.default_value = parse_test();
        }
        lambda->params.push_back(std::move(p));
      } while (match_op(","));
    }
    expect_op(":");
    lambda->body = parse_test();
    lambda->end = lambda->body->end;
    return lambda;
  }

  ExprPtr parse_or_test() {
    ExprPtr left = parse_and_test();
    if (!check_keyword("or")) return left;
    auto node = std::make_unique<BoolOpExpr>();
    node->op = BoolOpKind::Or;
    node->begin = left->begin;
    node->values.push_back(std::move(left));
    while (match_keyword("or")) node->values.push_back(parse_and_test());
    node->end = node->values.back()->end;
    return node;
  }

  ExprPtr parse_and_test() {
    ExprPtr left = parse_not_test();
    if (!check_keyword("and")) return left;
    auto node = std::make_unique<BoolOpExpr>();
    node->op = BoolOpKind::And;
    node->begin = left->begin;
    node->values.push_back(std::move(left));
    while (match_keyword("and")) node->values.push_back(parse_not_test());
    node->end = node->values.back()->end;
    return node;
  }

  ExprPtr parse_not_test() {
    if (check_keyword("not")) {
      auto node = std::make_unique<UnaryOpExpr>();
      node->begin = peek().begin;
      advance();
      node->op = UnaryOpKind::Not;
      node->operand = parse_not_test();
      node->end = node->operand->end;
      return node;
    }
    return parse_comparison();
  }

  std::optional<CmpOp> peek_cmp_op() const {
    const Token& t = peek();
    if (t.kind == TokenKind::Op) {
      if (t.text == "<") return CmpOp::Lt;
      if (t.text == "<=") return CmpOp::Le;
      if (t.text == ">") return CmpOp::Gt;
      if (t.text == ">=") return CmpOp::Ge;
      if (t.text == "==") return CmpOp::Eq;
      if (t.text == "!=") return CmpOp::Ne;
      return std::nullopt;
    }
    if (t.is_keyword("in")) return CmpOp::In;
    if (t.is_keyword("not") && peek(1).is_keyword("in")) return CmpOp::NotIn;
    if (t.is_keyword("is")) {
      return peek(1).is_keyword("not") ? CmpOp::IsNot : CmpOp::Is;
    }
    return std::nullopt;
  }

  ExprPtr parse_comparison() {
    ExprPtr left = parse_or_expr();
    auto op = peek_cmp_op();
    if (!op) return left;
    auto node = std::make_unique<CompareExpr>();
    node->begin = left->begin;
    node->left = std::move(left);
    while ((op = peek_cmp_op())) {
      node->op_positions.push_back(peek().begin);
      if (*op == CmpOp::NotIn || *op == CmpOp::IsNot) {
        advance();
        advance();
      } else {
        advance();
      }
      node->ops.push_back(*op);
      node->comparators.push_back(parse_or_expr());
    }
    node->end = node->comparators.back()->end;
    return node;
  }

  struct BinLevel {
    std::string_view ops[4];
    int count;
  };

  ExprPtr parse_or_expr() { return parse_binary(0); }

  // Precedence levels from loosest to tightest: | ^ & << >> + - then * @ / % //.
  ExprPtr parse_binary(int level) {
    static const BinLevel levels[] = {
        {{"|"}, 1},
        {{"^"}, 1},
        {{"&"}, 1},
        {{"<<", ">>"}, 2},
        {{"+", "-"}, 2},
        {{"*", "@", "/", "%"}, 4},  // '//' matched explicitly below
    };
    constexpr int kLast = 5;
    if (level > kLast) return parse_unary();
    ExprPtr left = parse_binary(level + 1);
    for (;;) {
      const BinLevel& lvl = levels[level];
      std::string_view matched;
      if (peek().kind == TokenKind::Op) {
        for (int i = 0; i < lvl.count; ++i) {
          if (peek().text == lvl.ops[i]) {
            matched = lvl.ops[i];
            break;
          }
        }
        if (matched.empty() && level == kLast && peek().text == "//") matched = "//";
      }
      if (matched.empty()) return left;
      auto node = std::make_unique<BinOpExpr>();
      node->op_pos = peek().begin;
      node->op = binary_op_from(matched);
      advance();
      node->begin = left->begin;
      node->left = std::move(left);
      node->right = parse_binary(level + 1);
      node->end = node->right->end;
      left = std::move(node);
    }
  }

  static BinaryOp binary_op_from(std::string_view text) {
    if (text == "|") return BinaryOp::BitOr;
    if (text == "^") return BinaryOp::BitXor;
    if (text == "&") return BinaryOp::BitAnd;
    if (text == "<<") return BinaryOp::LShift;
    if (text == ">>") return BinaryOp::RShift;
    if (text == "+") return BinaryOp::Add;
    if (text == "-") return BinaryOp::Sub;
    if (text == "*") return BinaryOp::Mul;
    if (text == "@") return BinaryOp::MatMul;
    if (text == "/") return BinaryOp::Div;
    if (text == "%") return BinaryOp::Mod;
    return BinaryOp::FloorDiv;
  }

  ExprPtr parse_unary() {
    if (check_op("+") || check_op("-") || check_op("~")) {
      auto node = std::make_unique<UnaryOpExpr>();
      node->begin = peek().begin;
      node->op = peek().text == "+"   ? UnaryOpKind::Pos
                 : peek().text == "-" ? UnaryOpKind::Neg
                                      : UnaryOpKind::Invert;
      advance();
      node->operand = parse_unary();
      node->end = node->operand->end;
      return node;
    }
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_await();
    if (check_op("**")) {
      auto node = std::make_unique<BinOpExpr>();
      node->op = BinaryOp::Pow;
      node->op_pos = peek().begin;
      advance();
      node->begin = base->begin;
      node->left = std::move(base);
      node->right = parse_unary();  // right-associative
      node->end = node->right->end;
      return node;
    }
    return base;
  }

  ExprPtr parse_await() {
    if (check_keyword("await")) {
      auto node = std::make_unique<AwaitExpr>();
      node->begin = peek().begin;
      advance();
      node->value = parse_unary();
      node->end = node->value->end;
      return node;
    }
    return parse_postfix();
  }

  ExprPtr parse_postfix() {
    ExprPtr value = parse_atom();
    for (;;) {
      if (check_op(".")) {
        advance();
        const Token& attr = expect(TokenKind::Name, "attribute name");
        auto node = std::make_unique<AttributeExpr>();
        node->begin = value->begin;
        node->value = std::move(value);
        node->attr = attr.text;
        node->attr_begin = attr.begin;
        node->attr_end = attr.end;
        node->end = attr.end;
        value = std::move(node);
      } else if (check_op("(")) {
        value = parse_call(std::move(value));
      } else if (check_op("[")) {
        advance();
        auto node = std::make_unique<SubscriptExpr>();
        node->begin = value->begin;
        node->value = std::move(value);
        node->index = parse_subscript_list();
        const Token& close = expect_op("]");
        node->end = close.end;
        value = std::move(node);
      } else {
        return value;
      }
    }
  }

  ExprPtr parse_call(ExprPtr func) {
    expect_op("(");
    auto call = std::make_unique<CallExpr>();
    call->begin = func->begin;
    call->func = std::move(func);
    while (!check_op(")")) {
      if (check_op("*")) {
        call->args.push_back(parse_star_expr());
      } else if (check_op("**")) {
        KeywordArg kw;
        advance();
        kw.value = parse_test();
        call->keywords.push_back(std::move(kw));
      } else if (check(TokenKind::Name) && peek(1).is_op("=")) {
        KeywordArg kw;
        const Token& name = advance();
        kw.name = name.text;
        kw.name_begin = name.begin;
        kw.name_end = name.end;
        advance();  // '='
        kw.value = parse_test();
        call->keywords.push_back(std::move(kw));
      } else {
        ExprPtr arg = parse_namedexpr_test();
        if (check_keyword("for") || (check_keyword("async") && peek(1).is_keyword("for"))) {
          arg = parse_comprehension_tail(std::move(arg), nullptr,
                                         ComprehensionKind::Generator, arg->begin);
        }
        call->args.push_back(std::move(arg));
      }
      if (!match_op(",")) break;
    }
    const Token& close = expect_op(")");
    call->end = close.end;
    return call;
  }

  ExprPtr parse_subscript_list() {
    SourcePos begin = peek().begin;
    ExprPtr first = parse_subscript_item();
    if (!check_op(",")) return first;
    auto tuple = std::make_unique<TupleExpr>();
    tuple->begin = begin;
    tuple->elts.push_back(std::move(first));
    while (match_op(",")) {
      if (check_op("]")) break;
      tuple->elts.push_back(parse_subscript_item());
    }
    tuple->end = tuple->elts.empty() ? begin : tuple->elts.back()->end;
    return tuple;
  }

  ExprPtr parse_subscript_item() {
    auto slice = std::make_unique<SliceExpr>();
    slice->begin = peek().begin;
    bool is_slice = false;
    if (!check_op(":")) {
      ExprPtr lower = parse_test();
      if (!check_op(":")) return lower;
      slice->lower = std::move(lower);
    }
    is_slice = true;
    expect_op(":");
    if (!check_op("]") && !check_op(",") && !check_op(":")) slice->upper = parse_test();
    if (match_op(":")) {
      if (!check_op("]") && !check_op(",")) slice->step = parse_test();
    }
    slice->end = peek().begin;
    (void)is_slice;
    return slice;
  }

  ExprPtr parse_yield_expr() {
    auto node = std::make_unique<YieldExpr>();
    node->begin = peek().begin;
    node->end = peek().end;
    expect_keyword("yield");
    if (match_keyword("from")) {
      node->is_from = true;
      node->value = parse_test();
      node->end = node->value->end;
    } else if (!check(TokenKind::Newline) && !check_op(")") && !check_op("]") &&
               !check_op("}") && !check_op(";") && !check(TokenKind::EndOfFile) &&
               !check_op(",") && !check_op(":")) {
      node->value = parse_testlist();
      node->end = node->value->end;
    }
    return node;
  }

  ExprPtr parse_comprehension_tail(ExprPtr element, ExprPtr dict_value,
                                   ComprehensionKind kind, SourcePos begin) {
    auto comp = std::make_unique<ComprehensionExpr>();
    comp->comp_kind = kind;
    comp->begin = begin;
    comp->element = std::move(element);
    comp->value = std::move(dict_value);
    for (;;) {
      ComprehensionClause clause;
      if (check_keyword("async") && peek(1).is_keyword("for")) {
        clause.is_async = true;
        advance();
      }
      expect_keyword("for");
      clause.target = parse_target_list();
      expect_keyword("in");
      clause.iter = parse_or_test();
      while (check_keyword("if")) {
        advance();
        clause.conditions.push_back(parse_or_test_no_cond());
      }
      comp->clauses.push_back(std::move(clause));
      if (!check_keyword("for") && !(check_keyword("async") && peek(1).is_keyword("for"))) {
        break;
      }
    }
    comp->end = comp->clauses.back().conditions.empty()
                    ? comp->clauses.back().iter->end
                    : comp->clauses.back().conditions.back()->end;
    return comp;
  }

  // Comprehension conditions must not swallow a trailing `else`.
  ExprPtr parse_or_test_no_cond() { return parse_or_test(); }

  ExprPtr parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Name: {
        auto node = std::make_unique<NameExpr>();
        node->id = t.text;
        node->begin = t.begin;
        node->end = t.end;
        advance();
        return node;
      }
      case TokenKind::Number: {
        auto node = std::make_unique<LiteralExpr>();
        node->literal = LiteralKind::Number;
        node->raw = t.text;
        node->begin = t.begin;
        node->end = t.end;
        advance();
        return node;
      }
      case TokenKind::String: {
        auto node = std::make_unique<LiteralExpr>();
        node->literal = string_kind(t.text);
        node->raw = t.text;
        node->begin = t.begin;
        node->end = t.end;
        advance();
        // Adjacent literals concatenate.
        while (check(TokenKind::String)) {
          if (string_kind(peek().text) == LiteralKind::FString) {
            node->literal = LiteralKind::FString;
          }
          node->end = peek().end;
          advance();
        }
        return node;
      }
      case TokenKind::Keyword: {
        if (t.text == "True" || t.text == "False" || t.text == "None") {
          auto node = std::make_unique<LiteralExpr>();
          node->literal = t.text == "True"    ? LiteralKind::True
                          : t.text == "False" ? LiteralKind::False
                                              : LiteralKind::None;
          node->raw = t.text;
          node->begin = t.begin;
          node->end = t.end;
          advance();
          return node;
        }
        if (t.text == "lambda") return parse_lambda();
        if (t.text == "yield") return parse_yield_expr();
        if (t.text == "not") return parse_not_test();
        if (t.text == "await") return parse_await();
        fail("unexpected keyword in expression");
      }
      case TokenKind::Op:
        if (t.text == "(") return parse_paren_atom();
        if (t.text == "[") return parse_list_atom();
        if (t.text == "{") return parse_dict_or_set_atom();
        if (t.text == "...") {
          auto node = std::make_unique<LiteralExpr>();
          node->literal = LiteralKind::Ellipsis;
          node->raw = t.text;
          node->begin = t.begin;
          node->end = t.end;
          advance();
          return node;
        }
        fail("unexpected operator in expression");
      default:
        fail("expected an expression");
    }
  }

  static LiteralKind string_kind(const std::string& raw) {
    for (char c : raw) {
      if (c == '\'' || c == '"') break;
      if (c == 'f' || c == 'F') return LiteralKind::FString;
    }
    return LiteralKind::String;
  }

  ExprPtr parse_paren_atom() {
    const Token& open = peek();
    advance();
    if (check_op(")")) {
      auto node = std::make_unique<TupleExpr>();
      node->begin = open.begin;
      node->end = peek().end;
      advance();
      return node;
    }
    if (check_keyword("yield")) {
      ExprPtr inner = parse_yield_expr();
      const Token& close = expect_op(")");
      inner->begin = open.begin;
      inner->end = close.end;
      return inner;
    }
    ExprPtr first = check_op("*") ? parse_star_expr() : parse_namedexpr_test();
    if (check_keyword("for") || (check_keyword("async") && peek(1).is_keyword("for"))) {
      ExprPtr comp = parse_comprehension_tail(std::move(first), nullptr,
                                              ComprehensionKind::Generator, open.begin);
      const Token& close = expect_op(")");
      comp->end = close.end;
      return comp;
    }
    if (check_op(",")) {
      auto tuple = std::make_unique<TupleExpr>();
      tuple->begin = open.begin;
      tuple->elts.push_back(std::move(first));
      while (match_op(",")) {
        if (check_op(")")) break;
        tuple->elts.push_back(check_op("*") ? parse_star_expr() : parse_namedexpr_test());
      }
      const Token& close = expect_op(")");
      tuple->end = close.end;
      return tuple;
    }
    const Token& close = expect_op(")");
    first->begin = open.begin;
    first->end = close.end;
    return first;
  }

  ExprPtr parse_list_atom() {
    const Token& open = peek();
    advance();
    if (check_op("]")) {
      auto node = std::make_unique<ListExpr>();
      node->begin = open.begin;
      node->end = peek().end;
      advance();
      return node;
    }
    ExprPtr first = check_op("*") ? parse_star_expr() : parse_namedexpr_test();
    if (check_keyword("for") || (check_keyword("async") && peek(1).is_keyword("for"))) {
      ExprPtr comp = parse_comprehension_tail(std::move(first), nullptr,
                                              ComprehensionKind::ListComp, open.begin);
      const Token& close = expect_op("]");
      comp->end = close.end;
      return comp;
    }
    auto node = std::make_unique<ListExpr>();
    node->begin = open.begin;
    node->elts.push_back(std::move(first));
    while (match_op(",")) {
      if (check_op("]")) break;
      node->elts.push_back(check_op("*") ? parse_star_expr() : parse_namedexpr_test());
    }
    const Token& close = expect_op("]");
    node->end = close.end;
    return node;
  }

  ExprPtr parse_dict_or_set_atom() {
    const Token& open = peek();
    advance();
    if (check_op("}")) {
      auto node = std::make_unique<DictExpr>();
      node->begin = open.begin;
      node->end = peek().end;
      advance();
      return node;
    }
    if (check_op("**")) {
      auto node = std::make_unique<DictExpr>();
      node->begin = open.begin;
      parse_dict_entries(*node);
      const Token& close = expect_op("}");
      node->end = close.end;
      return node;
    }
    ExprPtr first = check_op("*") ? parse_star_expr() : parse_namedexpr_test();
    if (check_op(":")) {
      advance();
      ExprPtr first_value = parse_test();
      if (check_keyword("for") || (check_keyword("async") && peek(1).is_keyword("for"))) {
        ExprPtr comp = parse_comprehension_tail(std::move(first), std::move(first_value),
                                                ComprehensionKind::DictComp, open.begin);
        const Token& close = expect_op("}");
        comp->end = close.end;
        return comp;
      }
      auto node = std::make_unique<DictExpr>();
      node->begin = open.begin;
      node->keys.push_back(std::move(first));
      node->values.push_back(std::move(first_value));
      if (match_op(",")) parse_dict_entries(*node);
      const Token& close = expect_op("}");
      node->end = close.end;
      return node;
    }
    if (check_keyword("for") || (check_keyword("async") && peek(1).is_keyword("for"))) {
      ExprPtr comp = parse_comprehension_tail(std::move(first), nullptr,
                                              ComprehensionKind::SetComp, open.begin);
      const Token& close = expect_op("}");
      comp->end = close.end;
      return comp;
    }
    auto node = std::make_unique<SetExpr>();
    node->begin = open.begin;
    node->elts.push_back(std::move(first));
    while (match_op(",")) {
      if (check_op("}")) break;
      node->elts.push_back(check_op("*") ? parse_star_expr() : parse_namedexpr_test());
    }
    const Token& close = expect_op("}");
    node->end = close.end;
    return node;
  }

  void parse_dict_entries(DictExpr& node) {
    while (!check_op("}")) {
      if (match_op("**")) {
        node.keys.push_back(nullptr);
        node.values.push_back(parse_or_expr());
      } else {
        node.keys.push_back(parse_test());
        expect_op(":");
        node.values.push_back(parse_test());
      }
      if (!match_op(",")) break;
    }
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

}  // namespace

const char* binary_op_text(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::MatMul: return "@";
    case BinaryOp::Div: return "/";
    case BinaryOp::FloorDiv: return "//";
    case BinaryOp::Mod: return "%";
    case BinaryOp::Pow: return "**";
    case BinaryOp::LShift: return "<<";
    case BinaryOp::RShift: return ">>";
    case BinaryOp::BitOr: return "|";
    case BinaryOp::BitXor: return "^";
    case BinaryOp::BitAnd: return "&";
  }
  return "?";
}

const char* cmp_op_text(CmpOp op) {
  switch (op) {
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Gt: return ">";
    case CmpOp::Ge: return ">=";
    case CmpOp::Eq: return "==";
    case CmpOp::Ne: return "!=";
    case CmpOp::In: return "in";
    case CmpOp::NotIn: return "not in";
    case CmpOp::Is: return "is";
    case CmpOp::IsNot: return "is not";
  }
  return "?";
}

ParseOutcome parse_module(std::string_view source) {
  ParseOutcome outcome;
  try {
    Parser parser(tokenize(source));
    outcome.module = parser.parse();
  } catch (const SyntaxFailure& failure) {
    outcome.module.reset();
    outcome.error = failure.issue();
  }
  return outcome;
}

}  // namespace typedrift::py
