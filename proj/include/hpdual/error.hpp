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

#ifndef HPDUAL_ERROR_HPP
#define HPDUAL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hpdual {

enum class ErrorCode {
  kInternal,
  kParse,
  kSchema,
  kLeadingZero,
  kInsufficientTruncation,
  kNotNormal,
  kMixedInputs,
  kDimensionMismatch,
  kInvalidArgument,
};

const char* to_string(ErrorCode code);

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// A series is not known far enough towards z^-inf for the requested work.
/// Powers are exponents of z; `required` is the lowest power that must be
/// trusted and `available` is the lowest power that is.
class InsufficientTruncation : public Error {
 public:
  InsufficientTruncation(int required, int available, const std::string& context);
  int required() const noexcept { return required_; }
  int available() const noexcept { return available_; }

 private:
  int required_;
  int available_;
};

/// Parse failure; `position` is a byte offset, or -1 when the failure is
/// structural and has no meaningful offset.
class ParseError : public Error {
 public:
  ParseError(long position, const std::string& reason);
  long position() const noexcept { return position_; }

 private:
  long position_;
};

}  // namespace hpdual

#endif  // HPDUAL_ERROR_HPP
