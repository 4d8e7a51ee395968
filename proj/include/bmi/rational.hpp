// Copyright 2026 The Authors.
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

#ifndef BMI_RATIONAL_HPP_
#define BMI_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bmi {

// Exact rational scalar used for every cost, profit, budget and LP value.
using Rational = mpq_class;
using BigInt = mpz_class;

// Parses "a", "a/b" or a plain decimal "12.375" (optional leading '-')
// into a canonical rational. Throws std::invalid_argument on bad syntax or a
// zero denominator.
Rational parse_rational(std::string_view text);

// num/den in lowest terms. mpq_class(num, den) alone does not reduce, and
// GMP arithmetic on unreduced values is undefined.
inline Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Canonical "a" or "a/b" form in lowest terms.
std::string to_string(const Rational& value);

}  // namespace bmi

#endif  // BMI_RATIONAL_HPP_
