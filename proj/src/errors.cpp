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

#include "typedrift/errors.hpp"

namespace typedrift {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Input: return "InputError";
    case ErrorKind::Analysis: return "AnalysisError";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::Ambiguous: return "Ambiguous";
    case ErrorKind::Strategy: return "StrategyError";
    case ErrorKind::Contract: return "ContractError";
    case ErrorKind::Check: return "CheckError";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Reduce: return "ReduceError";
    case ErrorKind::Report: return "ReportError";
    case ErrorKind::Store: return "StoreError";
    case ErrorKind::Config: return "ConfigError";
  }
  return "Error";
}

}  // namespace typedrift
