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

#ifndef BMI_INSTANCE_HPP_
#define BMI_INSTANCE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "bmi/element_set.hpp"
#include "bmi/families.hpp"
#include "bmi/matroid.hpp"
#include "bmi/rational.hpp"

namespace bmi {

// A budgeted matroid independent set instance: ground set {0..n-1} with
// costs in [0, budget], non-negative profits, a positive budget and a
// matroid.
class BmiInstance {
 public:
  // Validates and builds the matroid handle. Throws ValidationError.
  BmiInstance(Rational budget, std::vector<Rational> costs,
              std::vector<Rational> profits, FamilySpec matroid);

  std::size_t size() const { return costs_.size(); }
  const Rational& budget() const { return budget_; }
  const Rational& cost(ElementId e) const { return costs_[e]; }
  const Rational& profit(ElementId e) const { return profits_[e]; }
  const std::vector<Rational>& costs() const { return costs_; }
  const std::vector<Rational>& profits() const { return profits_; }
  const FamilySpec& spec() const { return spec_; }
  const MatroidHandle& matroid() const { return matroid_; }
  ElementSet ground() const { return matroid_.ground(); }

  Rational cost_of(std::span<const ElementId> s) const;
  Rational profit_of(std::span<const ElementId> s) const;

  // Independent in the matroid and within budget.
  bool is_solution(std::span<const ElementId> s) const;
  bool is_solution(const MatroidHandle& m, std::span<const ElementId> s) const;

  bool operator==(const BmiInstance& o) const {
    return budget_ == o.budget_ && costs_ == o.costs_ &&
           profits_ == o.profits_ && spec_ == o.spec_;
  }

 private:
  Rational budget_;
  std::vector<Rational> costs_;
  std::vector<Rational> profits_;
  FamilySpec spec_;
  MatroidHandle matroid_;
};

// Deterministic tie-break for "best solution": higher profit wins, then the
// lexicographically smaller sorted element list.
inline bool better_solution(const Rational& profit_a, const ElementSet& a,
                            const Rational& profit_b, const ElementSet& b) {
  if (profit_a != profit_b) return profit_a > profit_b;
  return a < b;
}

}  // namespace bmi

#endif  // BMI_INSTANCE_HPP_
