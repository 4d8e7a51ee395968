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


#include "bmi/errors.hpp"
#include "bmi/exact_oracle.hpp"
#include "gtest/gtest.h"
#include "support/builders.hpp"
#include "support/oracles.hpp"

namespace bmi {
namespace {

TEST(BruteForce, Examples) {
  BmiInstance empty(Rational(1), {}, {}, testing::uniform_spec(0, 0));
  ExactResult e = brute_force_opt(empty);
  EXPECT_TRUE(e.solution.empty());
  EXPECT_EQ(e.profit, 0);

  BmiInstance two = testing::make_instance("2", {"1", "1"}, {"2", "3"},
                                           testing::uniform_spec(1, 2));
  ExactResult t = brute_force_opt(two);
  EXPECT_EQ(t.solution, (ElementSet{1}));
  EXPECT_EQ(t.profit, 3);

  BmiInstance tri = testing::make_instance("2", {"1", "1", "1"}, {"1", "1", "1"},
                                           testing::triangle_spec());
  ExactResult r = brute_force_opt(tri);
  EXPECT_EQ(r.profit, 2);
  EXPECT_EQ(r.solution, (ElementSet{0, 1}));
  EXPECT_EQ(r.profit, testing::subset_scan_opt(tri));
}

TEST(BruteForce, RefusesAboveCap) {
  BmiInstance k = testing::generated("uniform", 21, 1);
  EXPECT_THROW(brute_force_opt(k), ScaleCapError);
  EXPECT_NO_THROW(brute_force_opt(testing::generated("uniform", 8, 1), 8));
}

TEST(BruteForce, MatchesSubsetScan) {
  for (const auto& family : testing::all_families()) {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      BmiInstance k = testing::generated(family, seed % 13, seed);
      ExactResult r = brute_force_opt(k);
      ASSERT_EQ(r.profit, testing::subset_scan_opt(k)) << family << " " << seed;
      ASSERT_TRUE(k.is_solution(r.solution));
      ASSERT_EQ(k.profit_of(r.solution), r.profit);
    }
  }
}

TEST(Knapsack, Examples) {
  BmiInstance one = testing::make_instance("2", {"1"}, {"7/2"},
                                           testing::uniform_spec(1, 1));
  EXPECT_EQ(knapsack_dp(one), Rational(7, 2));
  BmiInstance two = testing::make_instance("3", {"2", "2"}, {"4", "5"},
                                           testing::uniform_spec(2, 2));
  EXPECT_EQ(knapsack_dp(two), 5);
}

TEST(Knapsack, Preconditions) {
  BmiInstance not_free = testing::make_instance("3", {"1", "1"}, {"1", "1"},
                                                testing::uniform_spec(1, 2));
  EXPECT_THROW(knapsack_dp(not_free), PreconditionError);
  BmiInstance fine = testing::make_instance("1000", {"1/7", "999"}, {"1", "1"},
                                            testing::uniform_spec(2, 2));
  EXPECT_THROW(knapsack_dp(fine, 1000), ScaleCapError);
  EXPECT_EQ(knapsack_dp(fine), 2);
}

TEST(Knapsack, EqualsBruteForce) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    BmiInstance k = testing::generated("free", seed % 13, seed);
    ASSERT_EQ(knapsack_dp(k), brute_force_opt(k).profit) << seed;
  }
}

}  // namespace
}  // namespace bmi
