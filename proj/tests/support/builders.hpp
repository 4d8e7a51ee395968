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

// Small constructors for test matroids and instances.

#ifndef BMI_TESTS_SUPPORT_BUILDERS_HPP_
#define BMI_TESTS_SUPPORT_BUILDERS_HPP_

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "bmi/families.hpp"
#include "bmi/instance.hpp"
#include "bmi/instance_io.hpp"
#include "bmi/rational.hpp"

namespace bmi::testing {

inline FamilySpec uniform_spec(std::size_t rank, std::size_t n) {
  return FamilySpec{n, UniformSpec{rank}};
}

inline FamilySpec partition_spec(std::vector<ElementSet> blocks,
                                 std::vector<std::size_t> caps) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  return FamilySpec{n, PartitionSpec{std::move(blocks), std::move(caps)}};
}

inline FamilySpec graphic_spec(
    std::size_t vertices,
    std::vector<std::pair<std::size_t, std::size_t>> edges) {
  std::size_t n = edges.size();
  return FamilySpec{n, GraphicSpec{vertices, std::move(edges)}};
}

inline FamilySpec triangle_spec() {
  return graphic_spec(3, {{0, 1}, {1, 2}, {0, 2}});
}

inline FamilySpec linear_spec(
    std::initializer_list<std::initializer_list<const char*>> columns) {
  LinearSpec spec;
  for (const auto& col : columns) {
    std::vector<Rational> c;
    for (const char* v : col) c.push_back(parse_rational(v));
    spec.columns.push_back(std::move(c));
  }
  std::size_t n = spec.columns.size();
  return FamilySpec{n, std::move(spec)};
}

inline FamilySpec explicit_spec(std::size_t n, std::vector<ElementSet> sets) {
  return FamilySpec{n, ExplicitSpec{std::move(sets)}};
}

inline BmiInstance make_instance(const char* budget,
                                 std::initializer_list<const char*> costs,
                                 std::initializer_list<const char*> profits,
                                 FamilySpec spec) {
  std::vector<Rational> c, p;
  for (const char* v : costs) c.push_back(parse_rational(v));
  for (const char* v : profits) p.push_back(parse_rational(v));
  return BmiInstance(parse_rational(budget), std::move(c), std::move(p),
                     std::move(spec));
}

inline BmiInstance generated(const std::string& family, std::size_t n,
                             std::uint64_t seed) {
  GenSpec g;
  g.family = family;
  g.n = n;
  g.seed = seed;
  return generate_instance(g);
}

// Every family the generator knows, for sweeps.
inline const std::vector<std::string>& all_families() {
  static const std::vector<std::string> kFamilies = {
      "uniform", "partition", "graphic", "linear", "explicit", "free"};
  return kFamilies;
}

}  // namespace bmi::testing

#endif  // BMI_TESTS_SUPPORT_BUILDERS_HPP_
