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

#ifndef TYPEDRIFT_TESTS_FIXTURES_HPP
#define TYPEDRIFT_TESTS_FIXTURES_HPP

#include <string>

#include "typedrift/corpus.hpp"

namespace typedrift::testing {

// The dunder-comparison program: a CSV reader whose Mark instances compare
// via __lt__. Renaming __lt__ detaches it from the comparison protocol.
inline const char* kMarksSource = R"py(import csv
class Mark(object):
    def __init__(self, marks, fp):
        self._marks = marks
        reader = csv.reader(
            fp,
            delimiter=';'
        )
        for row in reader:
            print(row)
    def key(self):
        return self._marks
    def __lt__(self, other):
        return self.key() < other.key()
with open('some.csv') as csvfile:
    mark1 = Mark(9, csvfile)
    mark2 = Mark(8, csvfile)
print(mark1 < mark2)
)py";

inline const char* kUndefinedAttrSource = R"py(class Dog:
    def show_age(self):
        print(self.age)
)py";

inline const char* kMissingColonSource = R"py(class Cat
    pass
)py";

inline const char* kInlineCrashSource = R"py(def bar():
    s = get_string(1)
    print(s)
def get_string(num):
    if num == 1:
        return 'hello'
    return ''
)py";

inline ProjectSnapshot snapshot_of(const std::string& path, const std::string& text) {
  ProjectSnapshot::FileMap files;
  files[path] = text;
  return ProjectSnapshot::from_files(std::move(files));
}

inline ProjectSnapshot marks_snapshot() { return snapshot_of("marks.py", kMarksSource); }

}  // namespace typedrift::testing

#endif  // TYPEDRIFT_TESTS_FIXTURES_HPP
