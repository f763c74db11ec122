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

#ifndef TYPEDRIFT_PY_SOURCE_HPP
#define TYPEDRIFT_PY_SOURCE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace typedrift::py {

// A position in a source file. Spans at module boundaries are expressed in
// code points (`chr`); splicing edits use `byte`.
struct SourcePos {
  uint32_t byte = 0;  // byte offset into the UTF-8 text
  uint32_t chr = 0;   // code point offset
  uint32_t line = 1;  // 1-based line
  uint32_t col = 1;   // 1-based column in code points
};

struct SyntaxIssue {
  uint32_t line = 1;
  uint32_t col = 1;
  std::string message;
};

// Internal control-flow for lexer/parser failures; converted to a
// SyntaxIssue (a diagnosable condition, not an API error) at the boundary.
class SyntaxFailure : public std::exception {
 public:
  explicit SyntaxFailure(SyntaxIssue issue) : issue_(std::move(issue)) {}
  const SyntaxIssue& issue() const { return issue_; }
  const char* what() const noexcept override { return issue_.message.c_str(); }

 private:
  SyntaxIssue issue_;
};

}  // namespace typedrift::py

#endif  // TYPEDRIFT_PY_SOURCE_HPP
