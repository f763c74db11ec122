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

#include "typedrift/py/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_set>

namespace typedrift::py {

namespace {

constexpr int kTabSize = 8;

// Multi-character operators, longest first so greedy matching works.
constexpr std::array<std::string_view, 24> kLongOps = {
    "**=", "//=", ">>=", "<<=", "...", "!=", ">=", "<=",
    "==",  "->",  "+=",  "-=",  "*=",  "/=", "%=", "@=",
    "&=",  "|=",  "^=",  ":=",  "**",  "//", "<<", ">>",
};

constexpr std::string_view kSingleOps = "+-*/%@&|^~<>()[]{},:.;=";

bool is_ident_start(unsigned char c) {
  return std::isalpha(c) || c == '_' || c >= 0x80;
}

bool is_ident_continue(unsigned char c) {
  return std::isalnum(c) || c == '_' || c >= 0x80;
}

bool is_string_prefix(std::string_view word) {
  if (word.empty() || word.size() > 2) return false;
  int r = 0, b = 0, f = 0, u = 0;
  for (char c : word) {
    switch (std::tolower(static_cast<unsigned char>(c))) {
      case 'r': ++r; break;
      case 'b': ++b; break;
      case 'f': ++f; break;
      case 'u': ++u; break;
      default: return false;
    }
  }
  if (r > 1 || b > 1 || f > 1 || u > 1) return false;
  if (u && word.size() > 1) return false;  // u combines with nothing
  if (b && f) return false;
  return true;
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    while (!at_end()) {
      if (at_line_start_) {
        handle_indentation();
        if (at_end()) break;
        if (at_line_start_) continue;  // blank or comment-only line
      }
      scan_token();
    }
    finish();
    return std::move(tokens_);
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxFailure({pos_.line, pos_.col, message});
  }

  bool at_end() const { return pos_.byte >= src_.size(); }

  char peek(size_t ahead = 0) const {
    size_t i = pos_.byte + ahead;
    return i < src_.size() ? src_[i] : '\0';
  }

  // Advances one code point, maintaining byte/chr/line/col.
  void advance() {
    unsigned char c = static_cast<unsigned char>(src_[pos_.byte]);
    size_t len = 1;
    if (c >= 0xF0) len = 4;
    else if (c >= 0xE0) len = 3;
    else if (c >= 0xC0) len = 2;
    if (c == '\n') {
      ++pos_.line;
      pos_.col = 1;
    } else if (c == '\t') {
      pos_.col = static_cast<uint32_t>(((pos_.col - 1) / kTabSize + 1) * kTabSize + 1);
    } else {
      ++pos_.col;
    }
    pos_.byte += static_cast<uint32_t>(std::min<size_t>(len, src_.size() - pos_.byte));
    ++pos_.chr;
  }

  void emit(TokenKind kind, const SourcePos& begin) {
    Token t;
    t.kind = kind;
    t.begin = begin;
    t.end = pos_;
    t.text = std::string(src_.substr(begin.byte, pos_.byte - begin.byte));
    tokens_.push_back(std::move(t));
  }

  void emit_synthetic(TokenKind kind) {
    Token t;
    t.kind = kind;
    t.begin = pos_;
    t.end = pos_;
    tokens_.push_back(std::move(t));
  }

  void handle_indentation() {
    // Measure leading whitespace of a fresh physical line.
    int width = 0;
    while (!at_end()) {
      char c = peek();
      if (c == ' ') {
        ++width;
        advance();
      } else if (c == '\t') {
        width = (width / kTabSize + 1) * kTabSize;
        advance();
      } else if (c == '\f') {
        advance();
      } else {
        break;
      }
    }
    if (at_end()) return;
    char c = peek();
    if (c == '#') {
      skip_comment();
      return;  // stays at_line_start_
    }
    if (c == '\n' || c == '\r') {
      consume_newline_char();
      return;  // blank line
    }
    if (c == '\\' && (peek(1) == '\n' || peek(1) == '\r')) {
      // A continuation on an otherwise blank line: treat as blank.
      advance();
      consume_newline_char();
      return;
    }
    at_line_start_ = false;
    if (width > indents_.back()) {
      indents_.push_back(width);
      emit_synthetic(TokenKind::Indent);
      return;
    }
    while (width < indents_.back()) {
      indents_.pop_back();
      emit_synthetic(TokenKind::Dedent);
    }
    if (width != indents_.back()) {
      fail("unindent does not match any outer indentation level");
    }
  }

  void skip_comment() {
    while (!at_end() && peek() != '\n' && peek() != '\r') advance();
  }

  void consume_newline_char() {
    if (peek() == '\r') {
      advance();
      if (peek() == '\n') advance();
    } else if (peek() == '\n') {
      advance();
    }
  }

  void scan_token() {
    char c = peek();

    if (c == ' ' || c == '\t' || c == '\f') {
      advance();
      return;
    }
    if (c == '#') {
      skip_comment();
      return;
    }
    if (c == '\\' && (peek(1) == '\n' || peek(1) == '\r')) {
      advance();
      consume_newline_char();
      return;  // explicit line join
    }
    if (c == '\n' || c == '\r') {
      SourcePos begin = pos_;
      consume_newline_char();
      if (depth_ == 0) {
        if (!tokens_.empty() && tokens_.back().kind != TokenKind::Newline &&
            tokens_.back().kind != TokenKind::Indent &&
            tokens_.back().kind != TokenKind::Dedent) {
          Token t;
          t.kind = TokenKind::Newline;
          t.begin = begin;
          t.end = pos_;
          tokens_.push_back(std::move(t));
        }
        at_line_start_ = true;
      }
      return;
    }

    if (is_ident_start(static_cast<unsigned char>(c))) {
      scan_name_or_string();
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      scan_number();
      return;
    }
    if (c == '\'' || c == '"') {
      scan_string(pos_);
      return;
    }
    scan_operator();
  }

  void scan_name_or_string() {
    SourcePos begin = pos_;
    while (!at_end() && is_ident_continue(static_cast<unsigned char>(peek()))) advance();
    std::string_view word = src_.substr(begin.byte, pos_.byte - begin.byte);
    if ((peek() == '\'' || peek() == '"') && is_string_prefix(word)) {
      scan_string(begin);
      return;
    }
    emit(is_python_keyword(word) ? TokenKind::Keyword : TokenKind::Name, begin);
  }

  // `begin` covers an already-consumed prefix (r/b/f/u), if any.
  void scan_string(SourcePos begin) {
    char quote = peek();
    advance();
    bool triple = false;
    if (peek() == quote && peek(1) == quote) {
      triple = true;
      advance();
      advance();
    }
    for (;;) {
      if (at_end()) {
        if (triple) fail("unterminated triple-quoted string literal");
        fail("unterminated string literal");
      }
      char c = peek();
      if (c == '\\') {
        advance();
        if (at_end()) fail("unterminated string literal");
        if (peek() == '\r') {
          advance();
          if (peek() == '\n') advance();
        } else {
          advance();
        }
        continue;
      }
      if (!triple && (c == '\n' || c == '\r')) {
        fail("unterminated string literal");
      }
      if (c == quote) {
        if (!triple) {
          advance();
          break;
        }
        if (peek(1) == quote && peek(2) == quote) {
          advance();
          advance();
          advance();
          break;
        }
        advance();
        continue;
      }
      advance();
    }
    emit(TokenKind::String, begin);
  }

  void scan_number() {
    SourcePos begin = pos_;
    if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X' || peek(1) == 'o' ||
                          peek(1) == 'O' || peek(1) == 'b' || peek(1) == 'B')) {
      advance();
      advance();
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
        advance();
      }
      emit(TokenKind::Number, begin);
      return;
    }
    auto digits = [&] {
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_')) {
        advance();
      }
    };
    digits();
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      advance();
      digits();
    } else if (peek() == '.' && !is_ident_start(static_cast<unsigned char>(peek(1))) &&
               peek(1) != '.') {
      // trailing-dot float like `1.`
      advance();
    }
    if (peek() == 'e' || peek() == 'E') {
      char sign = peek(1);
      if (std::isdigit(static_cast<unsigned char>(sign)) ||
          ((sign == '+' || sign == '-') &&
           std::isdigit(static_cast<unsigned char>(peek(2))))) {
        advance();
        if (peek() == '+' || peek() == '-') advance();
        digits();
      }
    }
    if (peek() == 'j' || peek() == 'J') advance();
    emit(TokenKind::Number, begin);
  }

  void scan_operator() {
    SourcePos begin = pos_;
    std::string_view rest = src_.substr(pos_.byte);
    for (std::string_view op : kLongOps) {
      if (rest.substr(0, op.size()) == op) {
        for (size_t i = 0; i < op.size(); ++i) advance();
        track_depth(op);
        emit(TokenKind::Op, begin);
        return;
      }
    }
    char c = peek();
    if (kSingleOps.find(c) != std::string_view::npos) {
      advance();
      track_depth(std::string_view(&c, 1));
      emit(TokenKind::Op, begin);
      return;
    }
    fail(std::string("invalid character '") + c + "'");
  }

  void track_depth(std::string_view op) {
    if (op == "(" || op == "[" || op == "{") ++depth_;
    if (op == ")" || op == "]" || op == "}") {
      if (depth_ > 0) --depth_;
    }
  }

  void finish() {
    if (!tokens_.empty() && tokens_.back().kind != TokenKind::Newline &&
        tokens_.back().kind != TokenKind::Indent &&
        tokens_.back().kind != TokenKind::Dedent) {
      emit_synthetic(TokenKind::Newline);
    }
    while (indents_.size() > 1) {
      indents_.pop_back();
      emit_synthetic(TokenKind::Dedent);
    }
    emit_synthetic(TokenKind::EndOfFile);
  }

  std::string_view src_;
  SourcePos pos_;
  std::vector<Token> tokens_;
  std::vector<int> indents_{0};
  int depth_ = 0;
  bool at_line_start_ = true;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
  return Lexer(source).run();
}

const std::vector<std::string>& python_keywords() {
  // keyword.kwlist for Python 3.10.
  static const std::vector<std::string> kw = {
      "False",  "None",   "True",    "and",      "as",       "assert", "async",
      "await",  "break",  "class",   "continue", "def",      "del",    "elif",
      "else",   "except", "finally", "for",      "from",     "global", "if",
      "import", "in",     "is",      "lambda",   "nonlocal", "not",    "or",
      "pass",   "raise",  "return",  "try",      "while",    "with",   "yield",
  };
  return kw;
}

bool is_python_keyword(std::string_view word) {
  static const std::unordered_set<std::string_view> set = [] {
    std::unordered_set<std::string_view> s;
    for (const auto& k : python_keywords()) s.insert(k);
    return s;
  }();
  return set.contains(word);
}

bool is_identifier(std::string_view name) {
  if (name.empty() || is_python_keyword(name)) return false;
  if (!is_ident_start(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return is_ident_continue(static_cast<unsigned char>(c));
  });
}

}  // namespace typedrift::py
