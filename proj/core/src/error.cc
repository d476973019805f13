// Copyright 2026 The pipround Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pipround/error.h"

namespace pipround {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInstance:
      return "InvalidInstance";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kAllZeroMatrix:
      return "AllZeroMatrix";
    case ErrorCode::kWidthBelowOne:
      return "WidthBelowOne";
    case ErrorCode::kWidthOne:
      return "WidthOne";
    case ErrorCode::kIterationLimit:
      return "IterationLimit";
    case ErrorCode::kEpsOutOfRange:
      return "EpsOutOfRange";
    case ErrorCode::kRegimeMismatch:
      return "RegimeMismatch";
    case ErrorCode::kPreconditionViolated:
      return "PreconditionViolated";
    case ErrorCode::kDomainError:
      return "DomainError";
    case ErrorCode::kTooLarge:
      return "TooLarge";
    case ErrorCode::kNodeLimit:
      return "NodeLimit";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace pipround
