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

#ifndef TYPEDRIFT_PY_PARSER_HPP
#define TYPEDRIFT_PY_PARSER_HPP

#include <memory>
#include <optional>
#include <string_view>

#include "typedrift/py/ast.hpp"

namespace typedrift::py {

struct ParseOutcome {
  std::unique_ptr<Module> module;  // null on failure
  std::optional<SyntaxIssue> error;

  bool ok() const { return module != nullptr; }
};

// Parses a whole module. Syntax problems are reported in the outcome rather
// than thrown; they feed the checker's parsing-failure rule.
ParseOutcome parse_module(std::string_view source);

}  // namespace typedrift::py

#endif  // TYPEDRIFT_PY_PARSER_HPP
