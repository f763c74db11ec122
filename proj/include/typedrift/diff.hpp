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

#ifndef TYPEDRIFT_DIFF_HPP
#define TYPEDRIFT_DIFF_HPP

#include <string>

#include "typedrift/checker.hpp"

namespace typedrift {

// Type errors newly present after a refactoring: per key,
// max(0, after − before). Disappeared errors are kept in the derivation
// record but never feed failure classification.
struct IntroducedErrors {
  NormalizedReport introduced;
  NormalizedReport disappeared;
  std::string before_snapshot_id;
  std::string after_snapshot_id;

  bool empty() const { return introduced.empty(); }
};

IntroducedErrors diff_reports(const NormalizedReport& before,
                              const NormalizedReport& after,
                              const std::string& before_snapshot_id = {},
                              const std::string& after_snapshot_id = {});

}  // namespace typedrift

#endif  // TYPEDRIFT_DIFF_HPP
