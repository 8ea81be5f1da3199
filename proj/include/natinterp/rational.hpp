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

#ifndef NATINTERP_RATIONAL_HPP_
#define NATINTERP_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace natinterp {

// Exact rational scalar used for every value, weight and coefficient.
//
// mpq_class uses expression templates: never bind the result of an arithmetic
// expression to `auto`, always spell out Rational.
using Rational = mpq_class;

// Parses "p/q", an integer, or a decimal with optional exponent ("-0.25",
// "1e-3") into the exact rational it denotes. Throws Error(kParseError).
Rational parse_rational(std::string_view text);

// The exact value of the shortest decimal that round-trips to `value`, so a
// JSON 0.1 becomes 1/10 rather than the binary approximation.
Rational rational_from_double(double value);

// Canonical text: "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

inline Rational abs_value(const Rational& value) {
  return value < 0 ? Rational(-value) : value;
}

}  // namespace natinterp

#endif  // NATINTERP_RATIONAL_HPP_
