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

#include "bmi/families.hpp"

#include <algorithm>
#include <numeric>

#include "bmi/errors.hpp"

namespace bmi {

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kUniform: return "uniform";
    case FamilyKind::kPartition: return "partition";
    case FamilyKind::kGraphic: return "graphic";
    case FamilyKind::kLinear: return "linear";
    case FamilyKind::kExplicit: return "explicit";
  }
  return "unknown";
}

FamilyKind parse_family_kind(const std::string& name) {
  for (FamilyKind k : {FamilyKind::kUniform, FamilyKind::kPartition,
                       FamilyKind::kGraphic, FamilyKind::kLinear,
                       FamilyKind::kExplicit}) {
    if (to_string(k) == name) return k;
  }
  throw ValidationError("matroid.kind", "unknown matroid kind '" + name + "'");
}

std::size_t column_rank(const std::vector<std::vector<Rational>>& columns) {
  if (columns.empty()) return 0;
  // Rows of `m` are the columns; row rank equals column rank.
  std::vector<std::vector<Rational>> m = columns;
  const std::size_t dim = m.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < dim && r < m.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < m.size() && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (sgn(m[i][col]) == 0) continue;
      Rational factor = m[i][col] / m[r][col];
      for (std::size_t j = col; j < dim; ++j) m[i][j] -= factor * m[r][j];
    }
    ++r;
  }
  return r;
}

namespace {

std::string path(const std::string& field) { return "matroid." + field; }

void check_element(std::size_t n, std::size_t e, const std::string& where) {
  if (e >= n) {
    throw ValidationError(where, "element " + std::to_string(e) +
                                     " outside ground set of size " +
                                     std::to_string(n));
  }
}

struct Validator {
  std::size_t n;

  void operator()(const UniformSpec&) const {}

  void operator()(const PartitionSpec& s) const {
    if (s.blocks.size() != s.capacities.size()) {
      throw ValidationError(path("capacities"),
                            "expected one capacity per block");
    }
    std::vector<int> seen(n, 0);
    for (std::size_t b = 0; b < s.blocks.size(); ++b) {
      for (std::size_t k = 0; k < s.blocks[b].size(); ++k) {
        std::string where = path("blocks[" + std::to_string(b) + "][" +
                                 std::to_string(k) + "]");
        check_element(n, s.blocks[b][k], where);
        if (seen[s.blocks[b][k]]++) {
          throw ValidationError(where, "element " +
                                           std::to_string(s.blocks[b][k]) +
                                           " appears in more than one block");
        }
      }
    }
    for (std::size_t e = 0; e < n; ++e) {
      if (!seen[e]) {
        throw ValidationError(path("blocks"), "element " + std::to_string(e) +
                                                  " is in no block");
      }
    }
  }

  void operator()(const GraphicSpec& s) const {
    if (s.edges.size() != n) {
      throw ValidationError(path("edges"), "expected " + std::to_string(n) +
                                               " edges, one per element");
    }
    for (std::size_t i = 0; i < s.edges.size(); ++i) {
      if (s.edges[i].first >= s.num_vertices ||
          s.edges[i].second >= s.num_vertices) {
        throw ValidationError(path("edges[" + std::to_string(i) + "]"),
                              "vertex index out of range");
      }
    }
  }

  void operator()(const LinearSpec& s) const {
    if (s.columns.size() != n) {
      throw ValidationError(path("columns"), "expected " + std::to_string(n) +
                                                 " columns, one per element");
    }
    for (std::size_t i = 0; i < s.columns.size(); ++i) {
      if (s.columns[i].size() != s.columns.front().size()) {
        throw ValidationError(path("columns[" + std::to_string(i) + "]"),
                              "column dimension mismatch");
      }
    }
  }

  void operator()(const ExplicitSpec& s) const {
    if (s.maximal_sets.empty()) {
      throw ValidationError(path("maximal_sets"),
                            "at least one maximal set is required");
    }
    for (std::size_t i = 0; i < s.maximal_sets.size(); ++i) {
      const ElementSet& set = s.maximal_sets[i];
      std::string where = path("maximal_sets[" + std::to_string(i) + "]");
      if (!is_canonical(set)) {
        throw ValidationError(where, "set is not sorted without duplicates");
      }
      for (ElementId e : set) check_element(n, e, where);
    }
    for (std::size_t i = 0; i < s.maximal_sets.size(); ++i) {
      for (std::size_t j = 0; j < s.maximal_sets.size(); ++j) {
        if (i != j && is_subset(s.maximal_sets[i], s.maximal_sets[j])) {
          throw ValidationError(
              path("maximal_sets[" + std::to_string(i) + "]"),
              "not an antichain: contained in maximal_sets[" +
                  std::to_string(j) + "]");
        }
      }
    }
  }
};

ElementSet iota_set(std::size_t n) {
  ElementSet g(n);
  std::iota(g.begin(), g.end(), ElementId{0});
  return g;
}

std::string summary(const FamilySpec& spec) {
  return to_string(spec.kind()) + "(n=" + std::to_string(spec.ground_size) +
         ")";
}

struct Builder {
  std::size_t n;
  std::string name;

  MatroidHandle operator()(const UniformSpec& s) const {
    const std::size_t r = s.rank;
    return MatroidHandle::from_oracle(
        iota_set(n),
        [r](std::span<const ElementId> set) { return set.size() <= r; }, name);
  }

  MatroidHandle operator()(const PartitionSpec& s) const {
    std::vector<std::size_t> block_of(n);
    for (std::size_t b = 0; b < s.blocks.size(); ++b) {
      for (ElementId e : s.blocks[b]) block_of[e] = b;
    }
    return MatroidHandle::from_oracle(
        iota_set(n),
        [block_of, caps = s.capacities](std::span<const ElementId> set) {
          std::vector<std::size_t> used(caps.size(), 0);
          for (ElementId e : set) {
            if (++used[block_of[e]] > caps[block_of[e]]) return false;
          }
          return true;
        },
        name);
  }

  MatroidHandle operator()(const GraphicSpec& s) const {
    return MatroidHandle::from_oracle(
        iota_set(n),
        [edges = s.edges, v = s.num_vertices](std::span<const ElementId> set) {
          std::vector<std::size_t> parent(v);
          std::iota(parent.begin(), parent.end(), std::size_t{0});
          auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
          };
          for (ElementId e : set) {
            std::size_t a = find(edges[e].first);
            std::size_t b = find(edges[e].second);
            if (a == b) return false;
            parent[a] = b;
          }
          return true;
        },
        name);
  }

  MatroidHandle operator()(const LinearSpec& s) const {
    return MatroidHandle::from_oracle(
        iota_set(n),
        [cols = s.columns](std::span<const ElementId> set) {
          if (set.empty()) return true;
          if (set.size() > cols.front().size()) return false;
          std::vector<std::vector<Rational>> picked;
          picked.reserve(set.size());
          for (ElementId e : set) picked.push_back(cols[e]);
          return column_rank(picked) == set.size();
        },
        name);
  }

  MatroidHandle operator()(const ExplicitSpec& s) const {
    return MatroidHandle::from_oracle(
        iota_set(n),
        [sets = s.maximal_sets](std::span<const ElementId> set) {
          for (const ElementSet& m : sets) {
            if (std::includes(m.begin(), m.end(), set.begin(), set.end())) {
              return true;
            }
          }
          return false;
        },
        name);
  }
};

}  // namespace

void validate(const FamilySpec& spec) {
  std::visit(Validator{spec.ground_size}, spec.payload);
}

MatroidHandle construct(const FamilySpec& spec) {
  validate(spec);
  return std::visit(Builder{spec.ground_size, summary(spec)}, spec.payload);
}

FamilySpec restrict_spec(const FamilySpec& spec, const ElementSet& keep) {
  std::vector<long> new_id(spec.ground_size, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) new_id[keep[i]] = static_cast<long>(i);
  auto remap = [&](const ElementSet& s) {
    ElementSet out;
    for (ElementId e : s) {
      if (new_id[e] >= 0) out.push_back(static_cast<ElementId>(new_id[e]));
    }
    return out;
  };

  FamilySpec out;
  out.ground_size = keep.size();
  switch (spec.kind()) {
    case FamilyKind::kUniform:
      out.payload = std::get<UniformSpec>(spec.payload);
      break;
    case FamilyKind::kPartition: {
      const auto& p = std::get<PartitionSpec>(spec.payload);
      PartitionSpec q;
      for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        ElementSet block = remap(p.blocks[b]);
        if (block.empty()) continue;
        q.blocks.push_back(std::move(block));
        q.capacities.push_back(p.capacities[b]);
      }
      out.payload = std::move(q);
      break;
    }
    case FamilyKind::kGraphic: {
      const auto& g = std::get<GraphicSpec>(spec.payload);
      GraphicSpec h{g.num_vertices, {}};
      for (ElementId e : keep) h.edges.push_back(g.edges[e]);
      out.payload = std::move(h);
      break;
    }
    case FamilyKind::kLinear: {
      const auto& l = std::get<LinearSpec>(spec.payload);
      LinearSpec m;
      for (ElementId e : keep) m.columns.push_back(l.columns[e]);
      out.payload = std::move(m);
      break;
    }
    case FamilyKind::kExplicit: {
      const auto& x = std::get<ExplicitSpec>(spec.payload);
      std::vector<ElementSet> sets;
      for (const ElementSet& s : x.maximal_sets) sets.push_back(remap(s));
      // Restriction can make one maximal set a subset of another.
      std::sort(sets.begin(), sets.end());
      sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
      ExplicitSpec y;
      for (std::size_t i = 0; i < sets.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < sets.size() && !dominated; ++j) {
          dominated = i != j && is_subset(sets[i], sets[j]);
        }
        if (!dominated) y.maximal_sets.push_back(sets[i]);
      }
      out.payload = std::move(y);
      break;
    }
  }
  return out;
}

}  // namespace bmi
