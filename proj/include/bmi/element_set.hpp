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

#ifndef BMI_ELEMENT_SET_HPP_
#define BMI_ELEMENT_SET_HPP_

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace bmi {

// Index into the ground set of the owning instance.
using ElementId = std::uint32_t;

// A set of elements, always kept sorted ascending without duplicates.
using ElementSet = std::vector<ElementId>;

inline ElementSet make_set(std::vector<ElementId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

inline ElementSet make_set(std::initializer_list<ElementId> ids) {
  return make_set(std::vector<ElementId>(ids));
}

inline bool is_canonical(std::span<const ElementId> s) {
  return std::adjacent_find(s.begin(), s.end(), [](ElementId a, ElementId b) {
           return a >= b;
         }) == s.end();
}

inline bool contains(std::span<const ElementId> s, ElementId e) {
  return std::binary_search(s.begin(), s.end(), e);
}

inline bool is_subset(std::span<const ElementId> a,
                      std::span<const ElementId> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline ElementSet set_union(std::span<const ElementId> a,
                            std::span<const ElementId> b) {
  ElementSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

inline ElementSet set_difference(std::span<const ElementId> a,
                                 std::span<const ElementId> b) {
  ElementSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline ElementSet set_intersection(std::span<const ElementId> a,
                                   std::span<const ElementId> b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline ElementSet with(std::span<const ElementId> s, ElementId e) {
  ElementSet out(s.begin(), s.end());
  auto it = std::lower_bound(out.begin(), out.end(), e);
  if (it == out.end() || *it != e) out.insert(it, e);
  return out;
}

inline ElementSet without(std::span<const ElementId> s, ElementId e) {
  ElementSet out;
  out.reserve(s.size());
  for (ElementId x : s) {
    if (x != e) out.push_back(x);
  }
  return out;
}

// "{0,2,5}" for diagnostics.
std::string format_set(std::span<const ElementId> s);

}  // namespace bmi

#endif  // BMI_ELEMENT_SET_HPP_
