// Copyright 2026 The polycrt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polycrt {

enum class ErrorCode {
  kNotPrime,
  kMixedFields,
  kDivisionByZero,
  kBothZero,
  kZeroInput,
  kParseError,
  kZeroModulus,
  kCoprimeModuli,
  kDegenerateModuli,
  kTooFewModuli,
  kDegreeOutOfRange,
  kInconsistentResidues,
  kInexactDivision,
  kLevelOutOfRange,
  kEnumerationTooLarge,
  kInvalidConfig,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can branch on the kind without parsing
// messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the polynomial text parser; position is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorCode::kParseError,
              "parse error at offset " + std::to_string(position) + ": " +
                  message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace polycrt
