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

#include "bmi/exact_oracle.hpp"

#include <string>
#include <vector>

#include "bmi/errors.hpp"

namespace bmi {

ExactResult brute_force_opt(const BmiInstance& k, std::size_t limit) {
  if (k.size() > limit) {
    throw ScaleCapError("brute_force_opt: " + std::to_string(k.size()) +
                        " elements exceeds limit " + std::to_string(limit));
  }
  const MatroidHandle& m = k.matroid();
  ExactResult best;
  best.profit = 0;
  ElementSet current;
  auto dfs = [&](auto&& self, ElementId next, const Rational& cost,
                 const Rational& profit) -> void {
    ++best.nodes;
    if (better_solution(profit, current, best.profit, best.solution)) {
      best.solution = current;
      best.profit = profit;
    }
    for (ElementId e = next; e < k.size(); ++e) {
      Rational c = cost + k.cost(e);
      if (c > k.budget()) continue;
      current.push_back(e);
      if (m.independent_unchecked(current)) {
        self(self, e + 1, c, profit + k.profit(e));
      }
      current.pop_back();
    }
  };
  dfs(dfs, 0, Rational(0), Rational(0));
  return best;
}

Rational knapsack_dp(const BmiInstance& k, unsigned long capacity_limit) {
  const auto* uniform = std::get_if<UniformSpec>(&k.spec().payload);
  if (uniform == nullptr || uniform->rank < k.size()) {
    throw PreconditionError("knapsack_dp: matroid must be free (uniform, rank >= n)");
  }
  BigInt denom = k.budget().get_den();
  for (const Rational& c : k.costs()) {
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational scaled_budget = k.budget() * denom;
  const BigInt cap_value = scaled_budget.get_num();
  if (cap_value > BigInt(capacity_limit)) {
    throw ScaleCapError("knapsack_dp: integer capacity " + cap_value.get_str() +
                        " exceeds limit " + std::to_string(capacity_limit));
  }
  const unsigned long cap = cap_value.get_ui();
  std::vector<Rational> best(cap + 1, Rational(0));
  for (ElementId e = 0; e < k.size(); ++e) {
    Rational w = k.cost(e) * denom;
    const unsigned long weight = w.get_num().get_ui();
    for (unsigned long b = cap + 1; b-- > weight;) {
      Rational candidate = best[b - weight] + k.profit(e);
      if (candidate > best[b]) best[b] = std::move(candidate);
    }
  }
  return best[cap];
}

}  // namespace bmi
