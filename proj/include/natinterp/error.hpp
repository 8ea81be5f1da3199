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

#ifndef NATINTERP_ERROR_HPP_
#define NATINTERP_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace natinterp {

// Stable error codes. The names returned by error_code_name() are part of the
// CLI output contract and must not change.
enum class ErrorCode {
  kParseError,
  kInvalidInput,
  kDuplicateLabel,
  kUnknownLabel,
  kCycleDetected,
  kRedundantCover,
  kSizeLimitExceeded,
  kNotAnElement,
  kNotALattice,
  kNotDistributive,
  kNotComparable,
  kNotInBipolarExtension,
  kNotNonincreasing,
  kValueOutOfRange,
  kBaseMismatch,
  kNegativeScore,
  kNotZeroOne,
  kNotMonotone,
  kNotComplemented,
  kSignConstraintViolated,
  kNotInTile,
  kNotRegularMosaic,
  kProfileNotInAnyTile,
  kConflictingValues,
  kMissingValue,
  kInvalidDimensions,
  kOutOfScale,
  kNotStaircase,
};

std::string_view error_code_name(ErrorCode code);

// Validation failure on user-supplied data. The CLI maps it to exit code 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Error(ErrorCode code, const std::string& message, std::string context)
      : std::runtime_error(message), code_(code), context_(std::move(context)) {}

  ErrorCode code() const noexcept { return code_; }
  // Offending file and/or field, empty when not known.
  const std::string& context() const noexcept { return context_; }

  Error with_context(const std::string& context) const {
    return Error(code_, what(),
                 context_.empty() ? context : context + ": " + context_);
  }

 private:
  ErrorCode code_;
  std::string context_;
};

// Two evaluation routes that must agree did not. Exit code 3.
class InvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace natinterp

#endif  // NATINTERP_ERROR_HPP_
