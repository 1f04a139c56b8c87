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

#include "interdict/error.hpp"

namespace interdict {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kUnknownEdge: return "UnknownEdge";
    case ErrorCode::kNotAFacility: return "NotAFacility";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kNotConnected: return "NotConnected";
    case ErrorCode::kNotATree: return "NotATree";
    case ErrorCode::kNotAForest: return "NotAForest";
    case ErrorCode::kWrongKind: return "WrongKind";
    case ErrorCode::kEmptyBucket: return "EmptyBucket";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kInvalidDecomposition: return "InvalidDecomposition";
    case ErrorCode::kBagMismatch: return "BagMismatch";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kBadK: return "BadK";
    case ErrorCode::kInconsistentSolution: return "InconsistentSolution";
  }
  return "Unknown";
}

}  // namespace interdict
