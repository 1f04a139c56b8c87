// Copyright 2026 The Interdict Authors
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

#ifndef INTERDICT_ERROR_HPP_
#define INTERDICT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace interdict {

enum class ErrorCode {
  kInvalidArgument,
  kUnknownEdge,
  kNotAFacility,
  kParseError,
  kNotConnected,
  kNotATree,
  kNotAForest,
  kWrongKind,
  kEmptyBucket,
  kInfeasible,
  kInvalidDecomposition,
  kBagMismatch,
  kTooLarge,
  kBadK,
  kInconsistentSolution,
};

std::string_view ErrorCodeName(ErrorCode code);

// The single exception type thrown by the library. Callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures carry the 1-based line number of the offending input line
// (0 when the failure is not tied to a line, e.g. a truncated file).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& reason)
      : Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ": " + reason),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace interdict

#endif  // INTERDICT_ERROR_HPP_
