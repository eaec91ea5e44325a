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

#include "kaprekar/errors.hpp"

namespace kaprekar {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kValueOutOfRange: return "ValueOutOfRange";
    case ErrorCode::kWidthMismatch: return "WidthMismatch";
    case ErrorCode::kInvalidGrouping: return "InvalidGrouping";
    case ErrorCode::kInvalidShiftParams: return "InvalidShiftParams";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kValidationError: return "ValidationError";
    case ErrorCode::kStepBudgetExceeded: return "StepBudgetExceeded";
    case ErrorCode::kMalformedTrajectory: return "MalformedTrajectory";
    case ErrorCode::kWidthTooLarge: return "WidthTooLarge";
    case ErrorCode::kShrinkPolicyUnsupported: return "ShrinkPolicyUnsupported";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace kaprekar
