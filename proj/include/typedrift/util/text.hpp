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

#ifndef TYPEDRIFT_UTIL_TEXT_HPP
#define TYPEDRIFT_UTIL_TEXT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace typedrift::util {

// Source text is stored as UTF-8; spans at the API boundary are measured in
// code points ("character offsets"), while in-memory editing uses bytes.

bool is_valid_utf8(std::string_view text);

// Number of code points in a valid UTF-8 string.
size_t utf8_length(std::string_view text);

// Byte offset of the code point at character index `chr`. chr may equal the
// character length, in which case the byte length is returned.
size_t utf8_byte_offset(std::string_view text, size_t chr);

// Slice [start, end) measured in code points.
std::string utf8_substr(std::string_view text, size_t start, size_t end);

std::vector<std::string> split_lines(std::string_view text);  // keeps no newlines

std::string join_lines(const std::vector<std::string>& lines);  // '\n' separators, trailing newline

}  // namespace typedrift::util

#endif  // TYPEDRIFT_UTIL_TEXT_HPP
