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

// Brute-force reference oracles for tests. Nothing here calls rank, greedy,
// separation, or the LP code under test: every answer comes from the raw
// independence oracle and subset enumeration.

#ifndef BMI_TESTS_SUPPORT_ORACLES_HPP_
#define BMI_TESTS_SUPPORT_ORACLES_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bmi/instance.hpp"
#include "bmi/matroid.hpp"
#include "bmi/rational.hpp"
#include "bmi/simplex.hpp"

namespace bmi::testing {

using Mask = std::uint32_t;

// Independence of every subset of `ground`, indexed by position mask.
class IndependenceTable {
 public:
  IndependenceTable(const MatroidHandle& m, ElementSet ground)
      : ground_(std::move(ground)), indep_(Mask{1} << ground_.size()) {
    for (Mask s = 0; s < indep_.size(); ++s) {
      indep_[s] = m.is_independent(to_set(s));
    }
  }
  explicit IndependenceTable(const MatroidHandle& m)
      : IndependenceTable(m, m.ground()) {}

  // Table of M/F restricted to `ground`, built from the parent oracle.
  static IndependenceTable contracted(const MatroidHandle& m,
                                      const ElementSet& f,
                                      ElementSet ground) {
    IndependenceTable t;
    t.ground_ = std::move(ground);
    t.indep_.resize(Mask{1} << t.ground_.size());
    for (Mask s = 0; s < t.indep_.size(); ++s) {
      t.indep_[s] = m.is_independent(set_union(t.to_set(s), f));
    }
    return t;
  }

  std::size_t size() const { return ground_.size(); }
  Mask full() const { return (Mask{1} << ground_.size()) - 1; }
  const ElementSet& ground() const { return ground_; }
  bool independent(Mask s) const { return indep_[s]; }

  ElementSet to_set(Mask s) const {
    ElementSet out;
    for (std::size_t i = 0; i < ground_.size(); ++i) {
      if (s >> i & 1) out.push_back(ground_[i]);
    }
    return out;
  }
  Mask to_mask(const ElementSet& s) const {
    Mask m = 0;
    for (ElementId e : s) {
      auto it = std::lower_bound(ground_.begin(), ground_.end(), e);
      m |= Mask{1} << (it - ground_.begin());
    }
    return m;
  }

  // Largest independent submask, by enumeration.
  std::size_t rank(Mask s) const {
    std::size_t best = 0;
    for (Mask t = s;; t = (t - 1) & s) {
      if (indep_[t]) best = std::max<std::size_t>(best, std::popcount(t));
      if (t == 0) break;
    }
    return best;
  }

  // rank of every mask: |S| if S is independent, else the best rank after
  // deleting one element.
  std::vector<std::size_t> rank_table() const {
    std::vector<std::size_t> r(indep_.size(), 0);
    for (Mask s = 1; s < indep_.size(); ++s) {
      if (indep_[s]) {
        r[s] = std::popcount(s);
        continue;
      }
      for (Mask rest = s; rest != 0; rest &= rest - 1) {
        r[s] = std::max(r[s], r[s & ~(rest & -rest)]);
      }
    }
    return r;
  }

  std::vector<Mask> bases() const {
    std::size_t r = rank(full());
    std::vector<Mask> out;
    for (Mask s = 0; s <= full(); ++s) {
      if (indep_[s] && static_cast<std::size_t>(std::popcount(s)) == r) {
        out.push_back(s);
      }
    }
    return out;
  }

 private:
  IndependenceTable() = default;
  ElementSet ground_;
  std::vector<char> indep_;
};

inline Rational mask_sum(const IndependenceTable& t, Mask s,
                         const std::vector<Rational>& w) {
  Rational total = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (s >> i & 1) total += w[t.ground()[i]];
  }
  return total;
}

inline Rational min_basis_weight(const IndependenceTable& t,
                                 const std::vector<Rational>& w) {
  std::optional<Rational> best;
  for (Mask b : t.bases()) {
    Rational v = mask_sum(t, b, w);
    if (!best || v < *best) best = v;
  }
  return *best;
}

// x indexed by ElementId. Returns every subset with x(S) > rank(S).
inline std::vector<Mask> violated_constraints(
    const IndependenceTable& t, const std::vector<Rational>& x,
    const std::vector<std::size_t>& ranks) {
  std::vector<Mask> out;
  std::vector<Rational> mass(std::size_t{t.full()} + 1);
  for (Mask s = 1; s <= t.full(); ++s) {
    const Mask low = s & -s;
    mass[s] = mass[s ^ low] + x[t.ground()[std::countr_zero(low)]];
    if (mass[s] > ranks[s]) out.push_back(s);
  }
  return out;
}

inline std::vector<Mask> violated_constraints(const IndependenceTable& t,
                                              const std::vector<Rational>& x) {
  return violated_constraints(t, x, t.rank_table());
}

// max p·x over {x in P_M, c·x <= budget} with every rank constraint written
// out, solved by the simplex on the full system.
inline Rational dense_lp_value(const IndependenceTable& t,
                               const std::vector<Rational>& p,
                               const std::vector<Rational>& c,
                               const Rational& budget) {
  const std::size_t n = t.size();
  if (n == 0) return 0;
  DenseLp lp;
  for (ElementId e : t.ground()) lp.objective.push_back(p[e]);
  std::vector<Rational> cost_row;
  for (ElementId e : t.ground()) cost_row.push_back(c[e]);
  lp.rows.push_back(cost_row);
  lp.rhs.push_back(budget);
  for (Mask s = 1; s <= t.full(); ++s) {
    std::vector<Rational> row(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (s >> i & 1) row[i] = 1;
    }
    lp.rows.push_back(row);
    lp.rhs.push_back(Rational(static_cast<unsigned long>(t.rank(s))));
  }
  return solve_simplex(lp).objective;
}

// Same LP value through Lagrangian duality:
//   min over λ >= 0 of  λ·budget + max_{I independent} Σ_{e∈I} (p_e − λ c_e).
// The dual function is convex and piecewise linear; its breakpoints lie where
// two elements swap order or an element's reduced weight crosses zero.
inline Rational lagrangian_lp_value(const IndependenceTable& t,
                                    const std::vector<Rational>& p,
                                    const std::vector<Rational>& c,
                                    const Rational& budget) {
  const ElementSet& g = t.ground();
  std::vector<Rational> lambdas = {Rational(0)};
  for (ElementId a : g) {
    if (sgn(c[a]) > 0) lambdas.push_back(p[a] / c[a]);
    for (ElementId b : g) {
      if (c[a] != c[b]) {
        Rational l = (p[a] - p[b]) / (c[a] - c[b]);
        if (sgn(l) > 0) lambdas.push_back(l);
      }
    }
  }
  auto dual = [&](const Rational& l) -> Rational {
    Rational best = 0;
    for (Mask s = 0; s <= t.full(); ++s) {
      if (!t.independent(s)) continue;
      Rational v = 0;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (s >> i & 1) v += p[g[i]] - l * c[g[i]];
      }
      best = std::max(best, v);
    }
    return l * budget + best;
  };
  Rational best = dual(lambdas[0]);
  for (const Rational& l : lambdas) best = std::min(best, dual(l));
  if (sgn(budget) == 0) {
    // λ → ∞ only leaves the zero-cost elements.
    Rational zero_only = 0;
    for (Mask s = 0; s <= t.full(); ++s) {
      if (!t.independent(s)) continue;
      bool free = true;
      Rational v = 0;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (s >> i & 1) {
          free = free && sgn(c[g[i]]) == 0;
          v += p[g[i]];
        }
      }
      if (free) zero_only = std::max(zero_only, v);
    }
    best = std::min(best, zero_only);
  }
  return best;
}

// Optimum of an instance by scanning every subset.
inline Rational subset_scan_opt(const BmiInstance& k) {
  IndependenceTable t(k.matroid());
  Rational best = 0;
  for (Mask s = 0; s <= t.full(); ++s) {
    if (!t.independent(s)) continue;
    if (mask_sum(t, s, k.costs()) > k.budget()) continue;
    best = std::max(best, mask_sum(t, s, k.profits()));
  }
  return best;
}

inline std::vector<Rational> rationals(std::initializer_list<const char*> v) {
  std::vector<Rational> out;
  for (const char* s : v) out.push_back(parse_rational(s));
  return out;
}

}  // namespace bmi::testing

#endif  // BMI_TESTS_SUPPORT_ORACLES_HPP_
