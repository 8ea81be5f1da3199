// Copyright 2026 The natinterp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "natinterp/error.hpp"

namespace natinterp {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kDuplicateLabel: return "DuplicateLabel";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kRedundantCover: return "RedundantCover";
    case ErrorCode::kSizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::kNotAnElement: return "NotAnElement";
    case ErrorCode::kNotALattice: return "NotALattice";
    case ErrorCode::kNotDistributive: return "NotDistributive";
    case ErrorCode::kNotComparable: return "NotComparable";
    case ErrorCode::kNotInBipolarExtension: return "NotInBipolarExtension";
    case ErrorCode::kNotNonincreasing: return "NotNonincreasing";
    case ErrorCode::kValueOutOfRange: return "ValueOutOfRange";
    case ErrorCode::kBaseMismatch: return "BaseMismatch";
    case ErrorCode::kNegativeScore: return "NegativeScore";
    case ErrorCode::kNotZeroOne: return "NotZeroOne";
    case ErrorCode::kNotMonotone: return "NotMonotone";
    case ErrorCode::kNotComplemented: return "NotComplemented";
    case ErrorCode::kSignConstraintViolated: return "SignConstraintViolated";
    case ErrorCode::kNotInTile: return "NotInTile";
    case ErrorCode::kNotRegularMosaic: return "NotRegularMosaic";
    case ErrorCode::kProfileNotInAnyTile: return "ProfileNotInAnyTile";
    case ErrorCode::kConflictingValues: return "ConflictingValues";
    case ErrorCode::kMissingValue: return "MissingValue";
    case ErrorCode::kInvalidDimensions: return "InvalidDimensions";
    case ErrorCode::kOutOfScale: return "OutOfScale";
    case ErrorCode::kNotStaircase: return "NotStaircase";
  }
  return "Unknown";
}

}  // namespace natinterp
