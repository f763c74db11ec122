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

#include <doctest.h>

#include "fixtures.hpp"
#include "typedrift/py/analyze.hpp"
#include "typedrift/py/lexer.hpp"
#include "typedrift/py/parser.hpp"

using namespace typedrift;

TEST_CASE("lexer tokenizes names keywords and operators") {
  auto tokens = py::tokenize("x = a < b  # compare\n");
  REQUIRE(tokens.size() >= 6);
  CHECK(tokens[0].kind == py::TokenKind::Name);
  CHECK(tokens[0].text == "x");
  CHECK(tokens[1].is_op("="));
  CHECK(tokens[3].is_op("<"));
  CHECK(tokens[5].kind == py::TokenKind::Newline);
}

TEST_CASE("lexer tracks indent and dedent") {
  auto tokens = py::tokenize("if a:\n    b = 1\nc = 2\n");
  int indents = 0, dedents = 0;
  for (const auto& t : tokens) {
    if (t.kind == py::TokenKind::Indent) ++indents;
    if (t.kind == py::TokenKind::Dedent) ++dedents;
  }
  CHECK(indents == 1);
  CHECK(dedents == 1);
}

TEST_CASE("lexer handles string forms") {
  auto tokens = py::tokenize("s = 'a' + \"b\" + '''c\nd''' + r'\\x' + f'{v}'\n");
  int strings = 0;
  for (const auto& t : tokens) {
    if (t.kind == py::TokenKind::String) ++strings;
  }
  CHECK(strings == 5);
}

TEST_CASE("lexer rejects unterminated strings") {
  CHECK_THROWS_AS((void)py::tokenize("s = 'oops\n"), py::SyntaxFailure);
}

TEST_CASE("lexer implicit line joining inside brackets") {
  auto tokens = py::tokenize("x = (1 +\n     2)\n");
  int newlines = 0;
  for (const auto& t : tokens) {
    if (t.kind == py::TokenKind::Newline) ++newlines;
  }
  CHECK(newlines == 1);
}

TEST_CASE("lexer char offsets count code points") {
  // Two-byte character in a comment shifts byte offsets but not char math.
  auto tokens = py::tokenize("# caf\xc3\xa9\nx = 1\n");
  REQUIRE(!tokens.empty());
  CHECK(tokens[0].text == "x");
  CHECK(tokens[0].begin.chr == 7);   // "# café\n" is 7 code points
  CHECK(tokens[0].begin.byte == 8);  // but 8 bytes
}

TEST_CASE("parser handles the dunder comparison program") {
  auto outcome = py::parse_module(testing::kMarksSource);
  REQUIRE(outcome.ok());
  REQUIRE(outcome.module->body.size() == 4);  // import, class, with, print
  CHECK(outcome.module->body[0]->kind == py::StmtKind::Import);
  CHECK(outcome.module->body[1]->kind == py::StmtKind::ClassDef);
  CHECK(outcome.module->body[2]->kind == py::StmtKind::With);
  CHECK(outcome.module->body[3]->kind == py::StmtKind::ExprStmt);

  const auto& cls = py::as<py::ClassDefStmt>(*outcome.module->body[1]);
  CHECK(cls.name == "Mark");
  REQUIRE(cls.body.size() == 3);
  CHECK(py::as<py::FunctionDefStmt>(*cls.body[0]).name == "__init__");
  CHECK(py::as<py::FunctionDefStmt>(*cls.body[2]).name == "__lt__");
}

TEST_CASE("parser reports a missing colon as a syntax issue") {
  auto outcome = py::parse_module(testing::kMissingColonSource);
  REQUIRE(!outcome.ok());
  CHECK(outcome.error->line == 1);
}

TEST_CASE("parser rejects keywords as definition names") {
  CHECK(!py::parse_module("def class(self):\n    pass\n").ok());
  CHECK(!py::parse_module("class C:\n    import_ = 1\n").ok() == false);  // valid name
  CHECK(!py::parse_module("x.class = 1\n").ok());
  CHECK(!py::parse_module("import = 1\n").ok());
  CHECK(!py::parse_module("True = 1\n").ok());
}

TEST_CASE("parser covers common statement forms") {
  const char* source = R"py(
import os, sys as system
from os.path import join, split as sp
from . import sibling

@decorator
def fn(a, b=1, *args, key=None, **kw):
    global counter
    counter = a
    for i in range(10):
        if i % 2 == 0:
            continue
        yield i
    try:
        raise ValueError('x')
    except ValueError as e:
        pass
    finally:
        del a
    return [x ** 2 for x in args if x]

class Holder:
    slots = ('a', 'b')
    def __init__(self):
        self.data = {k: v for k, v in items()}
        self.total = sum(x for x in self.data)

async def afn():
    async with ctx() as c:
        await c.run()
    async for item in gen():
        print(item)

result = fn(1, 2) if flag else None
lam = lambda x, y=2: x + y
t = (1,)
s = {1, 2}
d = {'a': 1, **extra}
n = m[1:2, ::3]
w = x if x > 0 else -x
v: int = 0
u += 1
a, *rest = [1, 2, 3]
assert v == 0, 'zero'
print(1); print(2)
)py";
  auto outcome = py::parse_module(source);
  REQUIRE(outcome.ok());
}

TEST_CASE("analysis resolves scopes and finds unbound names") {
  const char* source = R"py(def outer():
    hidden = 1
    def inner():
        return hidden + missing
    return inner
value = outer()()
)py";
  auto outcome = py::parse_module(source);
  REQUIRE(outcome.ok());
  auto sem = py::analyze_module(*outcome.module);
  REQUIRE(sem.unbound_loads.size() == 1);
  CHECK(sem.unbound_loads[0].name == "missing");
}

TEST_CASE("analysis treats class scope as invisible to methods") {
  const char* source = R"py(class C:
    value = 1
    def get(self):
        return value
)py";
  auto outcome = py::parse_module(source);
  REQUIRE(outcome.ok());
  auto sem = py::analyze_module(*outcome.module);
  REQUIRE(sem.unbound_loads.size() == 1);
  CHECK(sem.unbound_loads[0].name == "value");
}

TEST_CASE("analysis infers local instances and receivers") {
  auto outcome = py::parse_module(testing::kMarksSource);
  REQUIRE(outcome.ok());
  auto sem = py::analyze_module(*outcome.module);

  REQUIRE(sem.classes.size() == 1);
  CHECK(sem.classes[0].qualified == "Mark");
  CHECK(sem.classes[0].fully_local);
  CHECK(sem.classes[0].instance_attrs.contains("_marks"));
  CHECK(sem.classes[0].class_body_members.contains("__lt__"));
  CHECK(sem.unbound_loads.empty());

  // mark1 < mark2 resolves both operands to Mark.
  bool found = false;
  for (const auto& op : sem.comparable_ops) {
    if (op.op_text == "<" && op.types.left_class == 0 && op.types.right_class == 0) {
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("analysis records star imports") {
  auto outcome = py::parse_module("from os.path import *\nx = join('a')\n");
  REQUIRE(outcome.ok());
  auto sem = py::analyze_module(*outcome.module);
  CHECK(sem.module_has_star_import);
}
