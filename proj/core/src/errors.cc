// Copyright 2026 The eorder Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eorder/errors.h"

namespace eorder {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDuplicateValue: return "DuplicateValue";
    case ErrorKind::kZeroValue: return "ZeroValue";
    case ErrorKind::kLengthMismatch: return "LengthMismatch";
    case ErrorKind::kValueAbsent: return "ValueAbsent";
    case ErrorKind::kValueSetMismatch: return "ValueSetMismatch";
    case ErrorKind::kChainInvariantViolated: return "ChainInvariantViolated";
    case ErrorKind::kPreconditionViolated: return "PreconditionViolated";
    case ErrorKind::kBadPattern: return "BadPattern";
    case ErrorKind::kBadExtra: return "BadExtra";
    case ErrorKind::kInvalidPairing: return "InvalidPairing";
    case ErrorKind::kInsufficientPrefix: return "InsufficientPrefix";
    case ErrorKind::kBadBound: return "BadBound";
    case ErrorKind::kSpecParseError: return "SpecParseError";
    case ErrorKind::kUnknownProperty: return "UnknownProperty";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::uint64_t> value)
    : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
      kind_(kind),
      value_(value) {}

}  // namespace eorder
