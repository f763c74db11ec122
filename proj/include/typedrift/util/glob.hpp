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

#ifndef TYPEDRIFT_UTIL_GLOB_HPP
#define TYPEDRIFT_UTIL_GLOB_HPP

#include <string_view>

namespace typedrift::util {

// Matches a forward-slash relative path against a glob pattern.
// `*` and `?` match within one path segment, `**` spans segments.
bool glob_match(std::string_view pattern, std::string_view path);

}  // namespace typedrift::util

#endif  // TYPEDRIFT_UTIL_GLOB_HPP
