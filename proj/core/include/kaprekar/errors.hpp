// Copyright 2026 The kaprekar Authors. All Rights Reserved.
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

#ifndef KAPREKAR_ERRORS_HPP_
#define KAPREKAR_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace kaprekar {

enum class ErrorCode {
  kValueOutOfRange,
  kWidthMismatch,
  kInvalidGrouping,
  kInvalidShiftParams,
  kParseError,
  kValidationError,
  kStepBudgetExceeded,
  kMalformedTrajectory,
  kWidthTooLarge,
  kShrinkPolicyUnsupported,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

  /// True for errors caused by resource ceilings rather than bad input.
  bool is_resource_error() const noexcept {
    return code_ == ErrorCode::kWidthTooLarge;
  }

 private:
  ErrorCode code_;
};

}  // namespace kaprekar

#endif  // KAPREKAR_ERRORS_HPP_
