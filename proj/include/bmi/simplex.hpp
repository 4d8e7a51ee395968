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

#ifndef BMI_SIMPLEX_HPP_
#define BMI_SIMPLEX_HPP_

#include <cstddef>
#include <vector>

#include "bmi/rational.hpp"

namespace bmi {

// max objective·x  s.t.  rows·x <= rhs,  x >= 0, with rhs >= 0 so that the
// origin is a feasible starting basis.
struct DenseLp {
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
};

struct SimplexResult {
  enum class Status { kOptimal, kUnbounded };

  Status status = Status::kOptimal;
  // Basic feasible solution at termination (structural variables only).
  std::vector<Rational> x;
  Rational objective;
  // Basic variable per row; indices >= #structural are slacks.
  std::vector<std::size_t> basis;
  std::size_t pivots = 0;
};

// Exact tableau simplex with Bland's rule. Returns a vertex of the feasible
// region. Throws PreconditionError on a negative rhs or ragged rows.
SimplexResult solve_simplex(const DenseLp& lp);

}  // namespace bmi

#endif  // BMI_SIMPLEX_HPP_
