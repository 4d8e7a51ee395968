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

#include "bmi/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "bmi/errors.hpp"

namespace bmi {

std::string format_set(std::span<const ElementId> s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ',';
    out << s[i];
  }
  out << '}';
  return out.str();
}

namespace detail {

MatroidNode::MatroidNode(ElementSet ground, std::string description,
                         std::shared_ptr<OracleMeter> meter)
    : ground_(std::move(ground)),
      description_(std::move(description)),
      meter_(std::move(meter)) {
  if (!ground_.empty()) member_.assign(ground_.back() + 1, false);
  for (ElementId e : ground_) member_[e] = true;
}

}  // namespace detail

namespace {

class OracleNode final : public detail::MatroidNode {
 public:
  OracleNode(ElementSet ground, MatroidHandle::Oracle oracle,
             std::string description)
      : MatroidNode(std::move(ground), std::move(description),
                    std::make_shared<OracleMeter>()),
        oracle_(std::move(oracle)) {}

  bool independent(std::span<const ElementId> s) const override {
    meter()->tick();
    return oracle_(s);
  }

 private:
  MatroidHandle::Oracle oracle_;
};

class RestrictionNode final : public detail::MatroidNode {
 public:
  RestrictionNode(MatroidHandle parent, ElementSet f)
      : MatroidNode(std::move(f),
                    "restrict(" + parent.description() + ")",
                    parent.node()->meter()),
        parent_(std::move(parent)) {}

  bool independent(std::span<const ElementId> s) const override {
    return parent_.independent_unchecked(s);
  }

 private:
  MatroidHandle parent_;
};

class ContractionNode final : public detail::MatroidNode {
 public:
  ContractionNode(MatroidHandle parent, ElementSet f)
      : MatroidNode(set_difference(parent.ground(), f),
                    "contract(" + parent.description() + "," + format_set(f) +
                        ")",
                    parent.node()->meter()),
        parent_(std::move(parent)),
        contracted_(std::move(f)) {}

  bool independent(std::span<const ElementId> s) const override {
    if (contracted_.empty()) return parent_.independent_unchecked(s);
    ElementSet merged = set_union(s, contracted_);
    return parent_.independent_unchecked(merged);
  }

 private:
  MatroidHandle parent_;
  ElementSet contracted_;
};

class TruncationNode final : public detail::MatroidNode {
 public:
  TruncationNode(MatroidHandle parent, std::size_t q)
      : MatroidNode(parent.ground(),
                    "truncate(" + parent.description() + "," +
                        std::to_string(q) + ")",
                    parent.node()->meter()),
        parent_(std::move(parent)),
        q_(q) {}

  bool independent(std::span<const ElementId> s) const override {
    return s.size() <= q_ && parent_.independent_unchecked(s);
  }

 private:
  MatroidHandle parent_;
  std::size_t q_;
};

std::string union_description(const std::vector<MatroidHandle>& parts) {
  std::string d = "union(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) d += ",";
    d += parts[i].description();
  }
  return d + ")";
}

ElementSet union_ground(const std::vector<MatroidHandle>& parts) {
  ElementSet g;
  for (const auto& p : parts) g.insert(g.end(), p.ground().begin(), p.ground().end());
  std::sort(g.begin(), g.end());
  return g;
}

class UnionNode final : public detail::MatroidNode {
 public:
  explicit UnionNode(std::vector<MatroidHandle> parts)
      : MatroidNode(union_ground(parts), union_description(parts),
                    parts.empty() ? std::make_shared<OracleMeter>()
                                  : parts.front().node()->meter()),
        parts_(std::move(parts)) {
    const ElementSet& g = ground();
    owner_.assign(g.empty() ? 0 : g.back() + 1, 0);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      for (ElementId e : parts_[i].ground()) owner_[e] = i;
    }
  }

  bool independent(std::span<const ElementId> s) const override {
    std::vector<ElementSet> pieces(parts_.size());
    for (ElementId e : s) pieces[owner_[e]].push_back(e);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      // Empty pieces are only queried for the empty set itself.
      if (pieces[i].empty() && !s.empty()) continue;
      if (!parts_[i].independent_unchecked(pieces[i])) return false;
    }
    return true;
  }

 private:
  std::vector<MatroidHandle> parts_;
  std::vector<std::size_t> owner_;
};

ElementSet checked_canonical(const MatroidHandle& m,
                             std::span<const ElementId> s,
                             const char* what) {
  ElementSet c(s.begin(), s.end());
  if (!is_canonical(c)) c = make_set(std::move(c));
  for (ElementId e : c) {
    if (!m.in_ground(e)) {
      throw DomainError(std::string(what) + ": element " + std::to_string(e) +
                        " is not in the ground set of " + m.description());
    }
  }
  return c;
}

}  // namespace

MatroidHandle MatroidHandle::from_oracle(ElementSet ground, Oracle oracle,
                                         std::string description) {
  return MatroidHandle(std::make_shared<OracleNode>(
      make_set(std::move(ground)), std::move(oracle), std::move(description)));
}

bool MatroidHandle::is_independent(std::span<const ElementId> s) const {
  if (is_canonical(s)) {
    for (ElementId e : s) {
      if (!in_ground(e)) {
        throw DomainError("is_independent: element " + std::to_string(e) +
                          " is not in the ground set of " + description());
      }
    }
    return node_->independent(s);
  }
  return node_->independent(checked_canonical(*this, s, "is_independent"));
}

bool is_independent(const MatroidHandle& m, std::span<const ElementId> s) {
  return m.is_independent(s);
}

ElementSet greedy_basis(const MatroidHandle& m, std::span<const ElementId> s) {
  ElementSet set = checked_canonical(m, s, "rank");
  ElementSet basis;
  basis.reserve(set.size());
  for (ElementId e : set) {
    basis.push_back(e);
    if (!m.independent_unchecked(basis)) basis.pop_back();
  }
  return basis;
}

std::size_t rank(const MatroidHandle& m, std::span<const ElementId> s) {
  return greedy_basis(m, s).size();
}

ElementSet min_weight_basis(const MatroidHandle& m, const WeightFn& w) {
  std::vector<ElementId> order = m.ground();
  for (ElementId e : order) {
    if (e >= w.size()) {
      throw DomainError("min_weight_basis: no weight for element " +
                        std::to_string(e));
    }
    if (sgn(w[e]) < 0) {
      throw DomainError("min_weight_basis: negative weight for element " +
                        std::to_string(e));
    }
  }
  std::stable_sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
    return w[a] < w[b];
  });
  ElementSet basis;
  for (ElementId e : order) {
    ElementSet candidate = with(basis, e);
    if (m.independent_unchecked(candidate)) basis = std::move(candidate);
  }
  return basis;
}

ElementSet extend_to_independent(const MatroidHandle& m,
                                 std::span<const ElementId> a,
                                 std::span<const ElementId> b) {
  ElementSet sa = checked_canonical(m, a, "extend_to_independent");
  ElementSet sb = checked_canonical(m, b, "extend_to_independent");
  if (!m.independent_unchecked(sa) || !m.independent_unchecked(sb)) {
    throw PreconditionError("extend_to_independent: A and B must be independent");
  }
  const std::size_t need = sa.size() > sb.size() ? sa.size() - sb.size() : 0;
  ElementSet d;
  ElementSet current = sb;
  for (ElementId e : set_difference(sa, sb)) {
    if (d.size() == need) break;
    ElementSet candidate = with(current, e);
    if (m.independent_unchecked(candidate)) {
      current = std::move(candidate);
      d.push_back(e);
    }
  }
  if (d.size() != need) {
    throw InvariantViolation(
        "extend_to_independent: exchange property failed for " +
        m.description() + " with A=" + format_set(sa) + " B=" + format_set(sb));
  }
  return d;
}

ElementId exchange_witness(const MatroidHandle& m,
                           std::span<const ElementId> a,
                           std::span<const ElementId> b, ElementId removed) {
  ElementSet sa = checked_canonical(m, a, "exchange_witness");
  ElementSet sb = checked_canonical(m, b, "exchange_witness");
  if (!m.independent_unchecked(sa) || !m.independent_unchecked(sb)) {
    throw PreconditionError("exchange_witness: A and B must be independent");
  }
  if (!contains(sa, removed) || contains(sb, removed)) {
    throw PreconditionError("exchange_witness: a must lie in A \\ B");
  }
  if (m.independent_unchecked(with(sb, removed))) {
    throw PreconditionError("exchange_witness: B + a must be dependent");
  }
  ElementSet base = without(sa, removed);
  for (ElementId cand : set_difference(sb, sa)) {
    if (m.independent_unchecked(with(base, cand))) return cand;
  }
  throw InvariantViolation("exchange_witness: no witness in " +
                           m.description() + "; oracle is not a matroid");
}

MatroidHandle restrict_to(const MatroidHandle& m, ElementSet f) {
  f = checked_canonical(m, f, "restrict");
  return MatroidHandle(std::make_shared<RestrictionNode>(m, std::move(f)));
}

MatroidHandle contract(const MatroidHandle& m, ElementSet f) {
  f = checked_canonical(m, f, "contract");
  if (!m.independent_unchecked(f)) {
    throw PreconditionError("contract: F=" + format_set(f) +
                            " is dependent in " + m.description());
  }
  return MatroidHandle(std::make_shared<ContractionNode>(m, std::move(f)));
}

MatroidHandle truncate(const MatroidHandle& m, std::size_t q) {
  return MatroidHandle(std::make_shared<TruncationNode>(m, q));
}

MatroidHandle matroid_union(const std::vector<MatroidHandle>& parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.ground_size();
  ElementSet g = union_ground(parts);
  if (std::adjacent_find(g.begin(), g.end()) != g.end() || g.size() != total) {
    throw PreconditionError("union: ground sets must be pairwise disjoint");
  }
  return MatroidHandle(std::make_shared<UnionNode>(parts));
}

AxiomReport check_axioms(const MatroidHandle& m, std::size_t limit) {
  const ElementSet& g = m.ground();
  const std::size_t n = g.size();
  if (n > limit || n >= 31) {
    throw ScaleCapError("check_axioms: ground has " + std::to_string(n) +
                        " elements, limit is " + std::to_string(limit));
  }
  const std::uint32_t full = 1u << n;
  auto to_set = [&](std::uint32_t mask) {
    ElementSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1u) s.push_back(g[i]);
    }
    return s;
  };

  std::vector<char> indep(full);
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    indep[mask] = m.independent_unchecked(to_set(mask)) ? 1 : 0;
  }

  AxiomReport report;
  report.sets_checked = full;
  if (!indep[0]) {
    report.failure = AxiomReport::Failure::kEmptyDependent;
    report.message = "empty set is dependent";
    return report;
  }
  // Closure under single-element deletion implies closure under subsets.
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    if (!indep[mask]) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t bit = 1u << i;
      if ((mask & bit) && !indep[mask ^ bit]) {
        report.failure = AxiomReport::Failure::kHereditary;
        report.a = to_set(mask);
        report.b = to_set(mask ^ bit);
        report.message = "hereditary: " + format_set(report.a) +
                         " independent but " + format_set(report.b) +
                         " dependent";
        return report;
      }
    }
  }
  // Given hereditary, exchange for |B| = |A| + 1 implies the general axiom.
  std::vector<std::vector<std::uint32_t>> by_size(n + 1);
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (indep[mask]) by_size[std::popcount(mask)].push_back(mask);
  }
  for (std::size_t k = 0; k + 1 <= n; ++k) {
    for (std::uint32_t a : by_size[k]) {
      for (std::uint32_t b : by_size[k + 1]) {
        std::uint32_t diff = b & ~a;
        bool found = false;
        while (diff) {
          const std::uint32_t bit = diff & (~diff + 1);
          if (indep[a | bit]) {
            found = true;
            break;
          }
          diff ^= bit;
        }
        if (!found) {
          report.failure = AxiomReport::Failure::kExchange;
          report.a = to_set(a);
          report.b = to_set(b);
          report.message = "exchange: no element of " + format_set(report.b) +
                           " extends " + format_set(report.a);
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace bmi
