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

#ifndef TYPEDRIFT_UTIL_HASH_HPP
#define TYPEDRIFT_UTIL_HASH_HPP

#include <string>
#include <string_view>
#include <vector>

namespace typedrift::util {

// Hex-encoded SHA-256 of `data`, truncated to 32 hex chars (128 bits).
// Used for snapshot ids and request fingerprints; length-prefixed feeding
// (see hash_pairs) keeps concatenation unambiguous.
std::string content_hash(std::string_view data);

// Hash of a sequence of (key, value) pairs. Pairs are fed in the given order
// with length prefixes, so equal sequences hash equal and nothing else does.
std::string hash_pairs(const std::vector<std::pair<std::string, std::string>>& pairs);

}  // namespace typedrift::util

#endif  // TYPEDRIFT_UTIL_HASH_HPP
