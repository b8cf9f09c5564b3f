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

#ifndef EORDER_ERRORS_H_
#define EORDER_ERRORS_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eorder {

enum class ErrorKind {
  kDuplicateValue,
  kZeroValue,
  kLengthMismatch,
  kValueAbsent,
  kValueSetMismatch,
  kChainInvariantViolated,
  kPreconditionViolated,
  kBadPattern,
  kBadExtra,
  kInvalidPairing,
  kInsufficientPrefix,
  kBadBound,
  kSpecParseError,
  kUnknownProperty,
  kTooLarge,
  kParseError,
};

std::string_view ErrorKindName(ErrorKind kind);

// Every failure raised by the library. `value` carries the offending natural,
// index or character offset when the error kind has one.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::uint64_t> value = std::nullopt);

  ErrorKind kind() const { return kind_; }
  std::optional<std::uint64_t> value() const { return value_; }

 private:
  ErrorKind kind_;
  std::optional<std::uint64_t> value_;
};

}  // namespace eorder

#endif  // EORDER_ERRORS_H_
