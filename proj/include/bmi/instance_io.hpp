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

#ifndef BMI_INSTANCE_IO_HPP_
#define BMI_INSTANCE_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bmi/eptas.hpp"
#include "bmi/exact_oracle.hpp"
#include "bmi/instance.hpp"

namespace bmi {

struct ParsedInstance {
  BmiInstance instance;
  // Index in the input file of each kept element.
  std::vector<std::size_t> source_index;
  std::vector<std::string> warnings;
};

// Parses the JSON instance format. Elements whose singleton is dependent
// are dropped (with a warning) and the rest renumbered in order. Throws
// ValidationError naming the offending JSON path.
ParsedInstance parse_instance(std::string_view text);

// Canonical JSON text; rationals are written in lowest terms.
std::string serialize_instance(const BmiInstance& k);

inline constexpr const char* kGeneratorName = "bmi-gen/1 mt19937_64";

struct GenSpec {
  // uniform | partition | graphic | linear | explicit | free
  std::string family = "uniform";
  std::size_t n = 10;
  std::uint64_t seed = 1;
  // Costs are a/d with a in [1, cost_max], d in {1, 2, 4}.
  unsigned cost_max = 12;
  // Profits are b/d with b in [1, profit_max], d in {1, 3}.
  unsigned profit_max = 30;
};

// Deterministic: identical specs give identical instances on every platform.
BmiInstance generate_instance(const GenSpec& spec);

std::string report_to_json(const RunReport& report,
                           const std::vector<std::size_t>& source_index = {},
                           bool include_timing = true);

std::string exact_to_json(const ExactResult& result,
                          const std::vector<std::size_t>& source_index = {});

}  // namespace bmi

#endif  // BMI_INSTANCE_IO_HPP_
