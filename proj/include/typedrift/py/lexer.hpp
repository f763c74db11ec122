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

#ifndef TYPEDRIFT_PY_LEXER_HPP
#define TYPEDRIFT_PY_LEXER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "typedrift/py/source.hpp"

namespace typedrift::py {

enum class TokenKind {
  Name,
  Keyword,
  Number,
  String,   // includes prefixed and triple-quoted forms
  Op,
  Newline,  // end of a logical line
  Indent,
  Dedent,
  EndOfFile,
};

struct Token {
  TokenKind kind = TokenKind::EndOfFile;
  std::string text;  // raw source slice; empty for synthetic tokens
  SourcePos begin;
  SourcePos end;  // one past the last code point

  bool is_op(std::string_view op) const { return kind == TokenKind::Op && text == op; }
  bool is_keyword(std::string_view kw) const {
    return kind == TokenKind::Keyword && text == kw;
  }
};

// Tokenizes a whole module, emitting Newline/Indent/Dedent per Python's
// logical-line rules. Throws SyntaxFailure on malformed input.
std::vector<Token> tokenize(std::string_view source);

// Reserved words of the supported language version (Python 3.10).
const std::vector<std::string>& python_keywords();

bool is_python_keyword(std::string_view word);

// True when `name` lexes as exactly one identifier token (and is not a
// reserved word).
bool is_identifier(std::string_view name);

}  // namespace typedrift::py

#endif  // TYPEDRIFT_PY_LEXER_HPP
