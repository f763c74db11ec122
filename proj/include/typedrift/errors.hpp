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

#ifndef TYPEDRIFT_ERRORS_HPP
#define TYPEDRIFT_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace typedrift {

// Failure categories surfaced by the public API. Each maps onto one
// exception type below so callers can catch either the family or the
// specific condition.
enum class ErrorKind {
  Input,      // unreadable project roots, undecodable files, bad fixtures
  Analysis,   // nothing analyzable (e.g. every file unparsable)
  NotFound,   // a qualified name does not resolve
  Ambiguous,  // a qualified name resolves to several sites
  Strategy,   // request generation cannot proceed (empty pool, kind mismatch)
  Contract,   // caller bug: adapter misuse, unknown replay key
  Check,      // checker unavailable, crashed, or timed out
  Parse,      // raw checker output had no parsable diagnostic line
  Reduce,     // minimization precondition violated
  Report,     // inconsistent accounting or missing reproduction
  Store,      // corrupted or unreadable run store
  Config,     // invalid run configuration
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct CandidateSpan {
  std::string file;
  uint32_t start = 0;
  uint32_t end = 0;
};

// Duplicate definitions for one qualified name; carries every candidate so
// the caller can report or disambiguate.
class AmbiguousError : public Error {
 public:
  AmbiguousError(const std::string& message, std::vector<CandidateSpan> candidates)
      : Error(ErrorKind::Ambiguous, message), candidates_(std::move(candidates)) {}

  const std::vector<CandidateSpan>& candidates() const { return candidates_; }

 private:
  std::vector<CandidateSpan> candidates_;
};

}  // namespace typedrift

#endif  // TYPEDRIFT_ERRORS_HPP
