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

#include "typedrift/util/glob.hpp"

#include <functional>
#include <string>

namespace typedrift::util {

namespace {

bool match_from(std::string_view pattern, size_t pi, std::string_view path, size_t si) {
  while (pi < pattern.size()) {
    char pc = pattern[pi];
    if (pc == '*') {
      bool doublestar = pi + 1 < pattern.size() && pattern[pi + 1] == '*';
      if (doublestar) {
        size_t next = pi + 2;
        // "**/" may match zero segments.
        if (next < pattern.size() && pattern[next] == '/') {
          if (match_from(pattern, next + 1, path, si)) return true;
        }
        if (match_from(pattern, next, path, si)) return true;
        for (size_t k = si; k < path.size(); ++k) {
          if (match_from(pattern, next, path, k + 1)) return true;
        }
        return false;
      }
      // Single star: any run of non-separator chars.
      if (match_from(pattern, pi + 1, path, si)) return true;
      for (size_t k = si; k < path.size() && path[k] != '/'; ++k) {
        if (match_from(pattern, pi + 1, path, k + 1)) return true;
      }
      return false;
    }
    if (si >= path.size()) return false;
    if (pc == '?') {
      if (path[si] == '/') return false;
    } else if (pc != path[si]) {
      return false;
    }
    ++pi;
    ++si;
  }
  return si == path.size();
}

}  // namespace

bool glob_match(std::string_view pattern, std::string_view path) {
  return match_from(pattern, 0, path, 0);
}

}  // namespace typedrift::util
