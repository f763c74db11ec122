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

#ifndef TYPEDRIFT_UTIL_SUBPROCESS_HPP
#define TYPEDRIFT_UTIL_SUBPROCESS_HPP

#include <string>
#include <vector>

namespace typedrift::util {

struct ProcessResult {
  int exit_code = -1;      // valid when exited
  bool exited = false;     // terminated normally
  bool timed_out = false;  // killed after the deadline
  int term_signal = 0;     // nonzero when killed by a signal
  std::string stdout_text;
  std::string stderr_text;
};

// Runs argv[0] with the given arguments and working directory, capturing
// stdout/stderr. On timeout the process group is killed and timed_out set.
ProcessResult run_process(const std::vector<std::string>& argv,
                          const std::string& working_dir,
                          double timeout_seconds);

}  // namespace typedrift::util

#endif  // TYPEDRIFT_UTIL_SUBPROCESS_HPP
