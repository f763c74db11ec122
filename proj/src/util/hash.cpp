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

#include "typedrift/util/hash.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdint>
#include <stdexcept>

namespace typedrift::util {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

class Sha256 {
 public:
  Sha256() : ctx_(EVP_MD_CTX_new()) {
    if (ctx_ == nullptr || EVP_DigestInit_ex(ctx_, EVP_sha256(), nullptr) != 1) {
      throw std::runtime_error("SHA-256 init failed");
    }
  }
  ~Sha256() { EVP_MD_CTX_free(ctx_); }
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  void update(std::string_view data) {
    EVP_DigestUpdate(ctx_, data.data(), data.size());
  }

  void update_length(uint64_t n) {
    std::array<unsigned char, 8> buf{};
    for (int i = 7; i >= 0; --i) {
      buf[static_cast<size_t>(i)] = static_cast<unsigned char>(n & 0xFF);
      n >>= 8;
    }
    EVP_DigestUpdate(ctx_, buf.data(), buf.size());
  }

  // First 16 digest bytes as 32 hex chars.
  std::string hex_truncated() {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx_, digest.data(), &len);
    std::string out;
    out.reserve(32);
    for (unsigned int i = 0; i < 16 && i < len; ++i) {
      out.push_back(kHexDigits[digest[i] >> 4]);
      out.push_back(kHexDigits[digest[i] & 0xF]);
    }
    return out;
  }

 private:
  EVP_MD_CTX* ctx_;
};

}  // namespace

std::string content_hash(std::string_view data) {
  Sha256 h;
  h.update_length(data.size());
  h.update(data);
  return h.hex_truncated();
}

std::string hash_pairs(const std::vector<std::pair<std::string, std::string>>& pairs) {
  Sha256 h;
  h.update_length(pairs.size());
  for (const auto& [key, value] : pairs) {
    h.update_length(key.size());
    h.update(key);
    h.update_length(value.size());
    h.update(value);
  }
  return h.hex_truncated();
}

}  // namespace typedrift::util
