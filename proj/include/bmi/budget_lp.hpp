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

#ifndef BMI_BUDGET_LP_HPP_
#define BMI_BUDGET_LP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bmi/element_set.hpp"
#include "bmi/instance.hpp"
#include "bmi/matroid.hpp"
#include "bmi/rational.hpp"

namespace bmi {

// Exact point over `domain`; values[i] belongs to domain[i].
struct FractionalPoint {
  ElementSet domain;
  std::vector<Rational> values;

  // Zero for elements outside the domain.
  Rational at(ElementId e) const;
  ElementSet support() const;
  ElementSet ones() const;
  ElementSet fractional() const;
};

struct SeparationResult {
  bool inside = true;
  // Set with x(violated) > rank(violated) when !inside.
  ElementSet violated;
  std::size_t rank = 0;
  Rational mass;
};

// Largest support the exhaustive separation accepts.
inline constexpr std::size_t kMaxSeparationSupport = 24;

// Membership in the matroid polytope of `m`. Minimizes rank(S) - x(S)
// exhaustively over subsets of supp(x); the returned set is the minimizer
// with the smallest subset index. Throws PreconditionError for a negative
// entry and ScaleCapError beyond kMaxSeparationSupport.
SeparationResult separate(const MatroidHandle& m, const FractionalPoint& x);

struct RankConstraint {
  ElementSet set;
  std::size_t rank = 0;

  bool operator==(const RankConstraint&) const = default;
};

struct LpOutcome {
  FractionalPoint point;
  Rational objective;
  ElementSet fractional_support;
  // Rank constraints of the working LP at termination.
  std::vector<RankConstraint> working_set;
  std::size_t rounds = 0;
  std::size_t pivots = 0;
};

// Cutting-plane solve of
//   max p·x  s.t.  c·x <= residual_budget,  x ∈ P(restrict(contract(m, F), vars))
// returning an exact vertex. `vars` must be disjoint from F.
LpOutcome solve_budget_lp(const BmiInstance& k, const MatroidHandle& m,
                          const ElementSet& f, const ElementSet& vars,
                          const Rational& residual_budget);

// E(α) \ F with E(α) = {e : p(e) <= 2 ε α}.
ElementSet lp_variables(const BmiInstance& k, const ElementSet& f,
                        const Rational& eps, const Rational& alpha);

// LP(K, F, α) over M_F(α). Throws PreconditionError if F is dependent or
// over budget.
LpOutcome solve_lp(const BmiInstance& k, const MatroidHandle& m,
                   const ElementSet& f, const Rational& eps,
                   const Rational& alpha);
LpOutcome solve_lp(const BmiInstance& k, const ElementSet& f,
                   const Rational& eps, const Rational& alpha);

// C_F = {e : x_e = 1} ∪ F. Throws InvariantViolation if the result is not a
// solution of `k`.
ElementSet round_integral(const BmiInstance& k, const MatroidHandle& m,
                          const LpOutcome& out, const ElementSet& f);
ElementSet round_integral(const BmiInstance& k, const LpOutcome& out,
                          const ElementSet& f);

struct ProfitBounds {
  Rational upper;  // >= OPT
  Rational lower;  // profit of a feasible solution, >= upper / 3
  ElementSet lower_witness;
  LpOutcome lp;
};

// One LP over every element with F = ∅ and no profit cap.
ProfitBounds lp_upper_bound(const BmiInstance& k, const MatroidHandle& m);
ProfitBounds lp_upper_bound(const BmiInstance& k);

// Process-wide counters over every cutting-plane solve.
struct LpStats {
  std::uint64_t solves = 0;
  std::uint64_t max_fractional = 0;
  std::uint64_t fractional_violations = 0;
};
LpStats lp_stats();

}  // namespace bmi

#endif  // BMI_BUDGET_LP_HPP_
