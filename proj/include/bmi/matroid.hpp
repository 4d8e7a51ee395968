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

#ifndef BMI_MATROID_HPP_
#define BMI_MATROID_HPP_

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bmi/element_set.hpp"
#include "bmi/rational.hpp"

namespace bmi {

// Counts evaluations of a leaf membership oracle. Derived handles share the
// meter of the family they were built from.
class OracleMeter {
 public:
  void tick() { calls_.fetch_add(1, std::memory_order_relaxed); }
  std::uint64_t calls() const { return calls_.load(std::memory_order_relaxed); }

 private:
  std::atomic<std::uint64_t> calls_{0};
};

namespace detail {

class MatroidNode {
 public:
  MatroidNode(ElementSet ground, std::string description,
              std::shared_ptr<OracleMeter> meter);
  virtual ~MatroidNode() = default;

  // `s` is canonical and a subset of ground(); no checks are made here.
  virtual bool independent(std::span<const ElementId> s) const = 0;

  const ElementSet& ground() const { return ground_; }
  const std::string& description() const { return description_; }
  const std::shared_ptr<OracleMeter>& meter() const { return meter_; }
  bool in_ground(ElementId e) const {
    return e < member_.size() && member_[e];
  }

 private:
  ElementSet ground_;
  std::vector<bool> member_;
  std::string description_;
  std::shared_ptr<OracleMeter> meter_;
};

}  // namespace detail

// Immutable, cheaply copyable view of a matroid through its independence
// oracle. Safe to share between threads.
class MatroidHandle {
 public:
  using Oracle = std::function<bool(std::span<const ElementId>)>;

  // Leaf handle backed by an arbitrary oracle. The oracle receives canonical
  // subsets of `ground` and must be a pure function of its argument.
  static MatroidHandle from_oracle(ElementSet ground, Oracle oracle,
                                   std::string description);

  explicit MatroidHandle(std::shared_ptr<const detail::MatroidNode> node)
      : node_(std::move(node)) {}

  const ElementSet& ground() const { return node_->ground(); }
  bool in_ground(ElementId e) const { return node_->in_ground(e); }
  std::size_t ground_size() const { return node_->ground().size(); }

  // Provenance, e.g. "truncate(restrict(graphic(V=4,E=5),{0,1}),2)".
  const std::string& description() const { return node_->description(); }

  // Membership-oracle evaluations of the underlying family so far.
  std::uint64_t oracle_calls() const { return node_->meter()->calls(); }

  // Accepts any order; duplicates are ignored. Throws DomainError for an
  // element outside the ground set.
  bool is_independent(std::span<const ElementId> s) const;
  bool is_independent(std::initializer_list<ElementId> s) const {
    return is_independent(std::span<const ElementId>(s.begin(), s.size()));
  }

  // Unchecked fast path: `s` must be canonical and inside the ground set.
  bool independent_unchecked(std::span<const ElementId> s) const {
    return node_->independent(s);
  }

  const std::shared_ptr<const detail::MatroidNode>& node() const {
    return node_;
  }

 private:
  std::shared_ptr<const detail::MatroidNode> node_;
};

// Per-element non-negative weights indexed by ElementId.
using WeightFn = std::vector<Rational>;

bool is_independent(const MatroidHandle& m, std::span<const ElementId> s);

// Size of a largest independent subset of `s`, by greedy growth.
std::size_t rank(const MatroidHandle& m, std::span<const ElementId> s);

// Greedy basis of `s` scanning ascending ElementId.
ElementSet greedy_basis(const MatroidHandle& m, std::span<const ElementId> s);

// Minimum-weight basis; scan order is ascending weight, ties by ElementId.
ElementSet min_weight_basis(const MatroidHandle& m, const WeightFn& w);

// D ⊆ A \ B with |D| = max(|A|-|B|, 0) and B ∪ D independent.
ElementSet extend_to_independent(const MatroidHandle& m,
                                 std::span<const ElementId> a,
                                 std::span<const ElementId> b);

// Some b ∈ B \ A with A - a + b independent, given B + a dependent.
ElementId exchange_witness(const MatroidHandle& m,
                           std::span<const ElementId> a,
                           std::span<const ElementId> b, ElementId removed);

MatroidHandle restrict_to(const MatroidHandle& m, ElementSet f);
MatroidHandle contract(const MatroidHandle& m, ElementSet f);
MatroidHandle truncate(const MatroidHandle& m, std::size_t q);
// Direct sum; the grounds must be pairwise disjoint.
MatroidHandle matroid_union(const std::vector<MatroidHandle>& parts);

struct AxiomReport {
  enum class Failure { kNone, kEmptyDependent, kHereditary, kExchange };

  bool ok() const { return failure == Failure::kNone; }

  Failure failure = Failure::kNone;
  // Hereditary: `a` independent, `b` = a dependent subset of it.
  // Exchange: |a| < |b| and no element of b \ a extends a.
  ElementSet a;
  ElementSet b;
  std::uint64_t sets_checked = 0;
  std::string message;
};

inline constexpr std::size_t kDefaultAxiomLimit = 10;

// Exhaustive check of the matroid axioms. Throws ScaleCapError when the
// ground set exceeds `limit` elements.
AxiomReport check_axioms(const MatroidHandle& m,
                         std::size_t limit = kDefaultAxiomLimit);

}  // namespace bmi

#endif  // BMI_MATROID_HPP_
