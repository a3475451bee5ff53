// Copyright 2026 The scpkit Authors.
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace scpkit {

enum class ErrorCode {
  kInvalidArgument,
  kNumericFailure,
  kResourceExhausted,
  kUnsupportedProblem,
  kParseError,
  kIoError,
};

inline std::string_view ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid-argument";
    case ErrorCode::kNumericFailure:
      return "numeric-failure";
    case ErrorCode::kResourceExhausted:
      return "resource-exhausted";
    case ErrorCode::kUnsupportedProblem:
      return "unsupported-problem";
    case ErrorCode::kParseError:
      return "parse-error";
    case ErrorCode::kIoError:
      return "io-error";
  }
  return "unknown";
}

// All library failures surface as this exception; `code()` distinguishes
// the category for callers that recover (e.g. the benchmark grid).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ToString(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline void Require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) throw Error(code, message);
}

}  // namespace scpkit
