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

#include "typedrift/diff.hpp"

namespace typedrift {

IntroducedErrors diff_reports(const NormalizedReport& before, const NormalizedReport& after,
                              const std::string& before_snapshot_id,
                              const std::string& after_snapshot_id) {
  IntroducedErrors result;
  result.before_snapshot_id = before_snapshot_id;
  result.after_snapshot_id = after_snapshot_id;
  for (const auto& [key, after_count] : after.counts()) {
    result.introduced.add(key, after_count - before.count(key));
  }
  for (const auto& [key, before_count] : before.counts()) {
    result.disappeared.add(key, before_count - after.count(key));
  }
  return result;
}

}  // namespace typedrift
