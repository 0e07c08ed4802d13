// Copyright 2026 The hpdual Authors
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

#include "hpdual/error.hpp"

namespace hpdual {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInternal: return "Internal";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kSchema: return "SchemaError";
    case ErrorCode::kLeadingZero: return "LeadingZero";
    case ErrorCode::kInsufficientTruncation: return "InsufficientTruncation";
    case ErrorCode::kNotNormal: return "NotNormal";
    case ErrorCode::kMixedInputs: return "MixedInputs";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

InsufficientTruncation::InsufficientTruncation(int required, int available,
                                               const std::string& context)
    : Error(ErrorCode::kInsufficientTruncation,
            context + ": coefficients needed through z^" + std::to_string(required) +
                " but only known through z^" + std::to_string(available)),
      required_(required),
      available_(available) {}

ParseError::ParseError(long position, const std::string& reason)
    : Error(ErrorCode::kParse,
            position >= 0 ? "parse error at byte " + std::to_string(position) + ": " + reason
                          : "parse error: " + reason),
      position_(position) {}

}  // namespace hpdual
