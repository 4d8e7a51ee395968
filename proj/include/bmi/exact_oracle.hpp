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

#ifndef BMI_EXACT_ORACLE_HPP_
#define BMI_EXACT_ORACLE_HPP_

#include <cstddef>
#include <cstdint>

#include "bmi/element_set.hpp"
#include "bmi/instance.hpp"
#include "bmi/rational.hpp"

namespace bmi {

struct ExactResult {
  ElementSet solution;
  Rational profit;
  std::uint64_t nodes = 0;
};

inline constexpr std::size_t kBruteForceLimit = 20;
inline constexpr unsigned long kKnapsackCapacityLimit = 100000;

// Exact optimum by depth-first search over subsets, pruning dependent or
// over-budget prefixes. Ties resolve like the approximation scheme.
ExactResult brute_force_opt(const BmiInstance& k,
                            std::size_t limit = kBruteForceLimit);

// 0/1-knapsack optimum for a free matroid (uniform with rank >= n), by a
// dynamic program over integerized costs.
Rational knapsack_dp(const BmiInstance& k,
                     unsigned long capacity_limit = kKnapsackCapacityLimit);

}  // namespace bmi

#endif  // BMI_EXACT_ORACLE_HPP_
