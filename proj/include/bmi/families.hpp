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

#ifndef BMI_FAMILIES_HPP_
#define BMI_FAMILIES_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bmi/element_set.hpp"
#include "bmi/matroid.hpp"
#include "bmi/rational.hpp"

namespace bmi {

struct UniformSpec {
  std::size_t rank = 0;

  bool operator==(const UniformSpec&) const = default;
};

struct PartitionSpec {
  std::vector<ElementSet> blocks;
  std::vector<std::size_t> capacities;

  bool operator==(const PartitionSpec&) const = default;
};

// Element i is edge i. Loops and parallel edges are allowed.
struct GraphicSpec {
  std::size_t num_vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  bool operator==(const GraphicSpec&) const = default;
};

// Element i is column i; all columns share one dimension.
struct LinearSpec {
  std::vector<std::vector<Rational>> columns;

  bool operator==(const LinearSpec&) const = default;
};

// Independent sets are exactly the subsets of a listed maximal set.
struct ExplicitSpec {
  std::vector<ElementSet> maximal_sets;

  bool operator==(const ExplicitSpec&) const = default;
};

enum class FamilyKind { kUniform, kPartition, kGraphic, kLinear, kExplicit };

std::string to_string(FamilyKind kind);
FamilyKind parse_family_kind(const std::string& name);

// In-memory image of the "matroid" stanza of an instance file. The ground
// set is {0, ..., ground_size - 1}.
struct FamilySpec {
  std::size_t ground_size = 0;
  std::variant<UniformSpec, PartitionSpec, GraphicSpec, LinearSpec,
               ExplicitSpec>
      payload;

  FamilyKind kind() const { return static_cast<FamilyKind>(payload.index()); }

  bool operator==(const FamilySpec&) const = default;
};

// Throws ValidationError with a "matroid.<field>" path.
void validate(const FamilySpec& spec);

MatroidHandle construct(const FamilySpec& spec);

// Re-indexes the spec onto the kept elements (ascending), which become
// 0..keep.size()-1.
FamilySpec restrict_spec(const FamilySpec& spec, const ElementSet& keep);

// Exact rank of a rational column set by Gaussian elimination.
std::size_t column_rank(const std::vector<std::vector<Rational>>& columns);

}  // namespace bmi

#endif  // BMI_FAMILIES_HPP_
