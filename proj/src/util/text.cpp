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

#include "typedrift/util/text.hpp"

namespace typedrift::util {

namespace {

// Length of the UTF-8 sequence starting at `byte`, or 0 when invalid.
int sequence_length(unsigned char byte) {
  if (byte < 0x80) return 1;
  if ((byte & 0xE0) == 0xC0) return 2;
  if ((byte & 0xF0) == 0xE0) return 3;
  if ((byte & 0xF8) == 0xF0) return 4;
  return 0;
}

}  // namespace

bool is_valid_utf8(std::string_view text) {
  size_t i = 0;
  while (i < text.size()) {
    unsigned char lead = static_cast<unsigned char>(text[i]);
    int len = sequence_length(lead);
    if (len == 0 || i + len > text.size()) return false;
    for (int k = 1; k < len; ++k) {
      if ((static_cast<unsigned char>(text[i + k]) & 0xC0) != 0x80) return false;
    }
    // Reject overlong encodings and surrogate range.
    if (len == 2 && lead < 0xC2) return false;
    if (len == 3) {
      unsigned char b1 = static_cast<unsigned char>(text[i + 1]);
      if (lead == 0xE0 && b1 < 0xA0) return false;
      if (lead == 0xED && b1 >= 0xA0) return false;
    }
    if (len == 4) {
      unsigned char b1 = static_cast<unsigned char>(text[i + 1]);
      if (lead == 0xF0 && b1 < 0x90) return false;
      if (lead == 0xF4 && b1 >= 0x90) return false;
      if (lead > 0xF4) return false;
    }
    i += len;
  }
  return true;
}

size_t utf8_length(std::string_view text) {
  size_t count = 0;
  for (size_t i = 0; i < text.size();) {
    int len = sequence_length(static_cast<unsigned char>(text[i]));
    i += len > 0 ? static_cast<size_t>(len) : 1;
    ++count;
  }
  return count;
}

size_t utf8_byte_offset(std::string_view text, size_t chr) {
  size_t i = 0;
  size_t count = 0;
  while (i < text.size() && count < chr) {
    int len = sequence_length(static_cast<unsigned char>(text[i]));
    i += len > 0 ? static_cast<size_t>(len) : 1;
    ++count;
  }
  return i;
}

std::string utf8_substr(std::string_view text, size_t start, size_t end) {
  size_t from = utf8_byte_offset(text, start);
  size_t to = utf8_byte_offset(text, end);
  if (to < from) to = from;
  return std::string(text.substr(from, to - from));
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  size_t start = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n') {
      lines.emplace_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (start < text.size()) lines.emplace_back(text.substr(start));
  return lines;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace typedrift::util
