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

#include "bmi/budget_lp.hpp"

#include <algorithm>
#include <atomic>
#include <bit>

#include "bmi/errors.hpp"
#include "bmi/simplex.hpp"

namespace bmi {

namespace {

std::atomic<std::uint64_t> g_solves{0};
std::atomic<std::uint64_t> g_max_fractional{0};
std::atomic<std::uint64_t> g_violations{0};

void record_solve(std::uint64_t fractional) {
  g_solves.fetch_add(1, std::memory_order_relaxed);
  std::uint64_t seen = g_max_fractional.load(std::memory_order_relaxed);
  while (fractional > seen &&
         !g_max_fractional.compare_exchange_weak(seen, fractional)) {
  }
  if (fractional > 2) g_violations.fetch_add(1, std::memory_order_relaxed);
}

bool is_fractional(const Rational& v) {
  return sgn(v) > 0 && v < 1;
}

}  // namespace

LpStats lp_stats() {
  return {g_solves.load(), g_max_fractional.load(), g_violations.load()};
}

Rational FractionalPoint::at(ElementId e) const {
  auto it = std::lower_bound(domain.begin(), domain.end(), e);
  if (it == domain.end() || *it != e) return 0;
  return values[static_cast<std::size_t>(it - domain.begin())];
}

ElementSet FractionalPoint::support() const {
  ElementSet s;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (sgn(values[i]) > 0) s.push_back(domain[i]);
  }
  return s;
}

ElementSet FractionalPoint::ones() const {
  ElementSet s;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (values[i] == 1) s.push_back(domain[i]);
  }
  return s;
}

ElementSet FractionalPoint::fractional() const {
  ElementSet s;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (is_fractional(values[i])) s.push_back(domain[i]);
  }
  return s;
}

SeparationResult separate(const MatroidHandle& m, const FractionalPoint& x) {
  if (x.domain.size() != x.values.size() || !is_canonical(x.domain)) {
    throw PreconditionError("separate: malformed point");
  }
  ElementSet support;
  std::vector<Rational> weight;
  bool integral = true;
  for (std::size_t i = 0; i < x.domain.size(); ++i) {
    if (!m.in_ground(x.domain[i])) {
      throw DomainError("separate: element " + std::to_string(x.domain[i]) +
                        " is not in the ground set");
    }
    const int s = sgn(x.values[i]);
    if (s < 0) throw PreconditionError("separate: negative entry");
    if (s > 0) {
      support.push_back(x.domain[i]);
      weight.push_back(x.values[i]);
      integral = integral && x.values[i] == 1;
    }
  }
  SeparationResult result;
  // Elements with x_e = 0 never lower rank(S) - x(S), so the minimum is
  // attained inside the support.
  if (support.empty()) return result;
  if (integral && m.independent_unchecked(support)) return result;

  const std::size_t k = support.size();
  if (k > kMaxSeparationSupport) {
    throw ScaleCapError("separate: support of " + std::to_string(k) +
                        " elements exceeds limit " +
                        std::to_string(kMaxSeparationSupport));
  }
  const std::uint32_t full = std::uint32_t{1} << k;

  // basis[mask]: greedy basis (as a bit mask) of the elements in `mask`.
  std::vector<std::uint32_t> basis(full, 0);
  ElementSet scratch;
  scratch.reserve(k);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const int top = 31 - std::countl_zero(mask);
    const std::uint32_t prev = basis[mask ^ (std::uint32_t{1} << top)];
    scratch.clear();
    for (std::uint32_t b = prev; b; b &= b - 1) {
      scratch.push_back(support[std::countr_zero(b)]);
    }
    scratch.push_back(support[top]);
    basis[mask] = m.independent_unchecked(scratch)
                      ? prev | (std::uint32_t{1} << top)
                      : prev;
  }

  // Gray-code sweep keeps x(S) incrementally.
  Rational mass = 0;
  Rational value;
  Rational best_value = 0;
  std::uint32_t best_mask = 0;
  for (std::uint32_t i = 1; i < full; ++i) {
    const std::uint32_t mask = i ^ (i >> 1);
    const std::uint32_t flipped = mask ^ ((i - 1) ^ ((i - 1) >> 1));
    const int bit = std::countr_zero(flipped);
    if (mask & flipped) {
      mass += weight[bit];
    } else {
      mass -= weight[bit];
    }
    value = std::popcount(basis[mask]);
    value -= mass;
    if (value < best_value ||
        (sgn(best_value) < 0 && value == best_value && mask < best_mask)) {
      best_value = value;
      best_mask = mask;
    }
  }
  if (sgn(best_value) >= 0) return result;

  result.inside = false;
  result.mass = 0;
  for (std::uint32_t b = best_mask; b; b &= b - 1) {
    const int idx = std::countr_zero(b);
    result.violated.push_back(support[idx]);
    result.mass += weight[idx];
  }
  result.rank = static_cast<std::size_t>(std::popcount(basis[best_mask]));
  return result;
}

LpOutcome solve_budget_lp(const BmiInstance& k, const MatroidHandle& m,
                          const ElementSet& f, const ElementSet& vars,
                          const Rational& residual_budget) {
  if (sgn(residual_budget) < 0) {
    throw PreconditionError("solve_lp: negative residual budget");
  }
  if (!set_intersection(f, vars).empty()) {
    throw PreconditionError("solve_lp: variables overlap F");
  }
  LpOutcome out;
  out.point.domain = vars;
  out.point.values.assign(vars.size(), Rational(0));
  out.objective = 0;
  if (vars.empty()) {
    record_solve(0);
    return out;
  }

  const MatroidHandle contracted = f.empty() ? m : contract(m, f);
  const MatroidHandle polytope = restrict_to(contracted, vars);

  for (ElementId e : vars) {
    const ElementId single[] = {e};
    out.working_set.push_back(
        {{e}, polytope.independent_unchecked(single) ? 1u : 0u});
  }

  const std::size_t n = vars.size();
  DenseLp lp;
  lp.objective.reserve(n);
  std::vector<Rational> budget_row;
  for (ElementId e : vars) {
    lp.objective.push_back(k.profit(e));
    budget_row.push_back(k.cost(e));
  }
  lp.rows.push_back(std::move(budget_row));
  lp.rhs.push_back(residual_budget);
  auto add_row = [&](const RankConstraint& c) {
    std::vector<Rational> row(n);
    for (ElementId e : c.set) {
      row[static_cast<std::size_t>(
          std::lower_bound(vars.begin(), vars.end(), e) - vars.begin())] = 1;
    }
    lp.rows.push_back(std::move(row));
    lp.rhs.push_back(Rational(static_cast<unsigned long>(c.rank)));
  };
  for (const auto& c : out.working_set) add_row(c);

  for (;;) {
    ++out.rounds;
    SimplexResult sol = solve_simplex(lp);
    if (sol.status != SimplexResult::Status::kOptimal) {
      throw InvariantViolation("solve_lp: working LP is unbounded");
    }
    out.pivots += sol.pivots;
    out.point.values = std::move(sol.x);
    out.objective = sol.objective;
    SeparationResult sep = separate(polytope, out.point);
    if (sep.inside) break;
    RankConstraint cut{std::move(sep.violated), sep.rank};
    if (std::find(out.working_set.begin(), out.working_set.end(), cut) !=
        out.working_set.end()) {
      throw InvariantViolation("solve_lp: separation repeated constraint " +
                               format_set(cut.set));
    }
    add_row(cut);
    out.working_set.push_back(std::move(cut));
  }

  out.fractional_support = out.point.fractional();
  record_solve(out.fractional_support.size());
  if (out.fractional_support.size() > 2) {
    throw InvariantViolation("solve_lp: basic solution has " +
                             std::to_string(out.fractional_support.size()) +
                             " fractional entries");
  }
  return out;
}

ElementSet lp_variables(const BmiInstance& k, const ElementSet& f,
                        const Rational& eps, const Rational& alpha) {
  const Rational cap = 2 * eps * alpha;
  ElementSet vars;
  for (ElementId e = 0; e < k.size(); ++e) {
    if (k.profit(e) <= cap && !contains(f, e)) vars.push_back(e);
  }
  return vars;
}

LpOutcome solve_lp(const BmiInstance& k, const MatroidHandle& m,
                   const ElementSet& f, const Rational& eps,
                   const Rational& alpha) {
  if (!is_canonical(f)) throw PreconditionError("solve_lp: F is not canonical");
  const Rational spent = k.cost_of(f);
  if (spent > k.budget()) throw PreconditionError("solve_lp: F is over budget");
  if (!m.is_independent(f)) throw PreconditionError("solve_lp: F is dependent");
  return solve_budget_lp(k, m, f, lp_variables(k, f, eps, alpha),
                         k.budget() - spent);
}

LpOutcome solve_lp(const BmiInstance& k, const ElementSet& f,
                   const Rational& eps, const Rational& alpha) {
  return solve_lp(k, k.matroid(), f, eps, alpha);
}

ElementSet round_integral(const BmiInstance& k, const MatroidHandle& m,
                          const LpOutcome& out, const ElementSet& f) {
  ElementSet c = set_union(out.point.ones(), f);
  if (k.cost_of(c) > k.budget()) {
    throw InvariantViolation("round_integral: " + format_set(c) +
                             " exceeds the budget");
  }
  if (!m.is_independent(c)) {
    throw InvariantViolation("round_integral: " + format_set(c) +
                             " is dependent");
  }
  return c;
}

ElementSet round_integral(const BmiInstance& k, const LpOutcome& out,
                          const ElementSet& f) {
  return round_integral(k, k.matroid(), out, f);
}

ProfitBounds lp_upper_bound(const BmiInstance& k, const MatroidHandle& m) {
  ProfitBounds b;
  b.lp = solve_budget_lp(k, m, {}, k.ground(), k.budget());
  b.upper = b.lp.objective;
  b.lower_witness = round_integral(k, m, b.lp, {});
  b.lower = k.profit_of(b.lower_witness);
  for (ElementId e = 0; e < k.size(); ++e) {
    const ElementId single[] = {e};
    if (k.profit(e) > b.lower && m.is_independent(single)) {
      b.lower = k.profit(e);
      b.lower_witness = {e};
    }
  }
  return b;
}

ProfitBounds lp_upper_bound(const BmiInstance& k) {
  return lp_upper_bound(k, k.matroid());
}

}  // namespace bmi
