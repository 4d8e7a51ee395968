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

#include "bmi/instance.hpp"

#include <string>

#include "bmi/errors.hpp"

namespace bmi {

BmiInstance::BmiInstance(Rational budget, std::vector<Rational> costs,
                         std::vector<Rational> profits, FamilySpec matroid)
    : budget_(std::move(budget)),
      costs_(std::move(costs)),
      profits_(std::move(profits)),
      spec_(std::move(matroid)),
      matroid_(MatroidHandle::from_oracle({}, [](auto) { return true; }, "")) {
  if (sgn(budget_) <= 0) throw ValidationError("budget", "must be positive");
  if (costs_.size() != profits_.size()) {
    throw ValidationError("elements", "cost and profit counts differ");
  }
  for (std::size_t i = 0; i < costs_.size(); ++i) {
    const std::string at = "elements[" + std::to_string(i) + "]";
    if (sgn(costs_[i]) < 0) {
      throw ValidationError(at + ".cost", "element " + std::to_string(i) +
                                              " has negative cost");
    }
    if (costs_[i] > budget_) {
      throw ValidationError(at + ".cost", "element " + std::to_string(i) +
                                              " costs more than the budget");
    }
    if (sgn(profits_[i]) < 0) {
      throw ValidationError(at + ".profit", "element " + std::to_string(i) +
                                                " has negative profit");
    }
  }
  if (spec_.ground_size != costs_.size()) {
    throw ValidationError("matroid", "ground size does not match element count");
  }
  matroid_ = construct(spec_);
}

Rational BmiInstance::cost_of(std::span<const ElementId> s) const {
  Rational total = 0;
  for (ElementId e : s) total += costs_[e];
  return total;
}

Rational BmiInstance::profit_of(std::span<const ElementId> s) const {
  Rational total = 0;
  for (ElementId e : s) total += profits_[e];
  return total;
}

bool BmiInstance::is_solution(std::span<const ElementId> s) const {
  return is_solution(matroid_, s);
}

bool BmiInstance::is_solution(const MatroidHandle& m,
                              std::span<const ElementId> s) const {
  return cost_of(s) <= budget_ && m.is_independent(s);
}

}  // namespace bmi
