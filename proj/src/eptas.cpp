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

#include "bmi/eptas.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <map>
#include <thread>
#include <utility>

#include "bmi/errors.hpp"
#include "bmi/families.hpp"

namespace bmi {

EpsParam::EpsParam(unsigned long reciprocal) : k_(reciprocal) {
  if (k_ < 2) {
    throw PreconditionError("EpsParam: reciprocal must be at least 2");
  }
  value_ = Rational(1, k_);
  mpz_ui_pow_ui(q_.get_mpz_t(), k_, k_);
  const Rational floor = value_ / 2;
  const Rational step = 1 - value_;
  powers_.push_back(Rational(1));
  while (powers_.back() >= floor) powers_.push_back(powers_.back() * step);
}

EpsParam EpsParam::for_target(const Rational& target) {
  if (sgn(target) <= 0 || target > Rational(1, 2)) {
    throw PreconditionError("eps must satisfy 0 < eps <= 1/2, got " +
                            to_string(target));
  }
  Rational seven_over = Rational(7) / target;
  BigInt k;
  mpz_cdiv_q(k.get_mpz_t(), seven_over.get_num_mpz_t(),
             seven_over.get_den_mpz_t());
  if (!k.fits_ulong_p()) throw PreconditionError("eps is too small");
  return EpsParam(k.get_ui());
}

std::size_t EpsParam::truncation_level(std::size_t n) const {
  if (q_ >= BigInt(static_cast<unsigned long>(n))) return n;
  return q_.get_ui();
}

std::optional<std::size_t> profit_class(const BmiInstance& k,
                                        const EpsParam& eps,
                                        const Rational& alpha, ElementId e) {
  if (sgn(alpha) <= 0) throw PreconditionError("profit_class: alpha must be positive");
  const Rational ratio = k.profit(e) / (2 * alpha);
  const std::size_t r_max = eps.class_count();
  if (ratio > 1 || ratio <= eps.decay(r_max)) return std::nullopt;
  for (std::size_t r = 1; r <= r_max; ++r) {
    if (ratio > eps.decay(r)) return r;
  }
  return std::nullopt;
}

RepresentativeSet find_rep(const BmiInstance& k, const MatroidHandle& m,
                           const EpsParam& eps, const Rational& alpha) {
  if (sgn(alpha) <= 0) throw PreconditionError("find_rep: alpha must be positive");
  RepresentativeSet rep;
  rep.alpha = alpha;
  rep.truncation = eps.truncation_level(k.size());
  rep.cardinality_bound =
      eps.q() * BigInt(static_cast<unsigned long>(eps.class_count()));
  rep.classes.assign(eps.class_count(), {});
  rep.slices.assign(eps.class_count(), {});
  for (ElementId e = 0; e < k.size(); ++e) {
    if (auto r = profit_class(k, eps, alpha, e)) rep.classes[*r - 1].push_back(e);
  }

  std::vector<MatroidHandle> parts;
  for (const ElementSet& cls : rep.classes) {
    if (cls.empty()) continue;
    parts.push_back(truncate(restrict_to(m, cls), rep.truncation));
  }
  if (parts.empty()) return rep;
  rep.elements = min_weight_basis(matroid_union(parts), k.costs());
  for (std::size_t r = 0; r < rep.classes.size(); ++r) {
    rep.slices[r] = set_intersection(rep.elements, rep.classes[r]);
  }
  return rep;
}

RepresentativeSet find_rep(const BmiInstance& k, const EpsParam& eps,
                           const Rational& alpha) {
  return find_rep(k, k.matroid(), eps, alpha);
}

std::vector<ElementSet> enumerate_guesses(const BmiInstance& k,
                                          const MatroidHandle& m,
                                          const ElementSet& r,
                                          std::size_t max_size) {
  std::vector<ElementSet> out;
  ElementSet current;
  // Both filters are monotone, so a failing prefix prunes its subtree.
  auto dfs = [&](auto&& self, std::size_t from, const Rational& cost) -> void {
    out.push_back(current);
    if (current.size() == max_size) return;
    for (std::size_t i = from; i < r.size(); ++i) {
      Rational next_cost = cost + k.cost(r[i]);
      if (next_cost > k.budget()) continue;
      current.push_back(r[i]);
      if (m.independent_unchecked(current)) self(self, i + 1, next_cost);
      current.pop_back();
    }
  };
  dfs(dfs, 0, Rational(0));
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

namespace {

struct Candidate {
  bool set = false;
  ElementSet solution;
  Rational profit;
  std::uint64_t lp_calls = 0;
  std::size_t max_fractional = 0;

  void offer(ElementSet s, Rational p) {
    if (!set || better_solution(p, s, profit, solution)) {
      solution = std::move(s);
      profit = std::move(p);
      set = true;
    }
  }

  void merge(Candidate&& o) {
    lp_calls += o.lp_calls;
    max_fractional = std::max(max_fractional, o.max_fractional);
    if (o.set) offer(std::move(o.solution), std::move(o.profit));
  }
};

AlphaRun run_with_rep(const BmiInstance& k, const MatroidHandle& m,
                      const EpsParam& eps, const Rational& alpha,
                      RepresentativeSet rep, const RunOptions& options) {
  AlphaRun run;
  run.alpha = alpha;
  run.lp_domain = lp_variables(k, {}, eps.value(), alpha);
  const std::vector<ElementSet> guesses =
      enumerate_guesses(k, m, rep.elements, eps.reciprocal());
  run.enum_count = guesses.size();
  mpz_ui_pow_ui(run.enum_bound.get_mpz_t(), rep.elements.size() + 1,
                eps.reciprocal());

  auto evaluate = [&](const ElementSet& f, Candidate& into) {
    ElementSet vars = set_difference(run.lp_domain, f);
    LpOutcome out =
        solve_budget_lp(k, m, f, vars, k.budget() - k.cost_of(f));
    ++into.lp_calls;
    into.max_fractional =
        std::max(into.max_fractional, out.fractional_support.size());
    ElementSet c = round_integral(k, m, out, f);
    Rational p = k.profit_of(c);
    into.offer(std::move(c), std::move(p));
  };

  Candidate best;
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1 || guesses.size() < 2) {
    for (const ElementSet& f : guesses) evaluate(f, best);
  } else {
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(jobs, guesses.size()));
    std::vector<Candidate> local(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < guesses.size(); i += workers) {
            evaluate(guesses[i], local[w]);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (auto& c : local) best.merge(std::move(c));
  }

  run.solution = std::move(best.solution);
  run.profit = best.set ? best.profit : Rational(0);
  run.lp_calls = best.lp_calls;
  run.max_fractional = best.max_fractional;
  run.rep = std::move(rep);
  return run;
}

}  // namespace

AlphaRun run_for_alpha(const BmiInstance& k, const MatroidHandle& m,
                       const EpsParam& eps, const Rational& alpha,
                       const RunOptions& options) {
  return run_with_rep(k, m, eps, alpha, find_rep(k, m, eps, alpha), options);
}

AlphaRun run_for_alpha(const BmiInstance& k, const EpsParam& eps,
                       const Rational& alpha, const RunOptions& options) {
  return run_for_alpha(k, k.matroid(), eps, alpha, options);
}

std::vector<Rational> alpha_grid(const Rational& lower, const Rational& upper,
                                 const EpsParam& eps) {
  std::vector<Rational> grid;
  if (sgn(lower) <= 0) return grid;
  const Rational step = 1 + eps.value();
  for (Rational a = lower; a <= upper; a *= step) grid.push_back(a);
  return grid;
}

RunReport approximate(const BmiInstance& k, const Rational& eps_target,
                      const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const EpsParam eps = EpsParam::for_target(eps_target);
  // A private handle keeps the oracle meter specific to this run.
  const MatroidHandle m = construct(k.spec());

  RunReport report;
  report.eps_target = eps_target;
  report.eps_internal = eps.value();
  report.profit = 0;
  report.lower_bound = 0;
  report.upper_bound = 0;

  if (k.size() > 0) {
    ProfitBounds bounds = lp_upper_bound(k, m);
    report.lp_calls = 1;
    report.lower_bound = bounds.lower;
    report.upper_bound = bounds.upper;
    report.bootstrap_lp = bounds.lp;

    std::map<std::pair<ElementSet, ElementSet>, AlphaRun> done;
    bool have = false;
    for (const Rational& alpha : alpha_grid(bounds.lower, bounds.upper, eps)) {
      RepresentativeSet rep = find_rep(k, m, eps, alpha);
      auto key = std::make_pair(rep.elements,
                                lp_variables(k, {}, eps.value(), alpha));
      AlphaSummary summary;
      summary.alpha = alpha;
      auto it = done.find(key);
      if (it != done.end()) {
        summary.reused = true;
      } else {
        AlphaRun run = run_with_rep(k, m, eps, alpha, std::move(rep), options);
        summary.lp_calls = run.lp_calls;
        report.lp_calls += run.lp_calls;
        it = done.emplace(std::move(key), std::move(run)).first;
      }
      const AlphaRun& run = it->second;
      summary.rep_size = run.rep.elements.size();
      summary.lp_domain_size = run.lp_domain.size();
      summary.enum_count = run.enum_count;
      summary.enum_bound = run.enum_bound;
      summary.profit = run.profit;
      report.enum_total += run.enum_count;
      if (!have || better_solution(run.profit, run.solution, report.profit,
                                   report.solution)) {
        report.solution = run.solution;
        report.profit = run.profit;
        report.winning_alpha = alpha;
        have = true;
      }
      report.grid.push_back(std::move(summary));
    }
  }

  report.oracle_calls = m.oracle_calls();
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

ElementSet profitable_elements(const BmiInstance& k, const EpsParam& eps,
                               const Rational& opt_value) {
  ElementSet h;
  const Rational threshold = eps.value() * opt_value;
  for (ElementId e = 0; e < k.size(); ++e) {
    if (k.profit(e) > threshold) h.push_back(e);
  }
  return h;
}

namespace {

void require_small_independent(const BmiInstance& k, const MatroidHandle& m,
                               const EpsParam& eps, const ElementSet& g,
                               const char* who) {
  if (!is_canonical(g) || !m.is_independent(g) ||
      g.size() > eps.truncation_level(k.size())) {
    throw PreconditionError(std::string(who) +
                            ": G must be independent with |G| <= q(eps)");
  }
}

bool in_truncation(const BmiInstance& k, const MatroidHandle& m,
                   const EpsParam& eps, const ElementSet& s) {
  return s.size() <= eps.truncation_level(k.size()) && m.is_independent(s);
}

}  // namespace

bool is_replacement(const BmiInstance& k, const MatroidHandle& m,
                    const EpsParam& eps, const ElementSet& g,
                    const ElementSet& z, const Rational& opt_value) {
  require_small_independent(k, m, eps, g, "is_replacement");
  const ElementSet h = profitable_elements(k, eps, opt_value);
  const ElementSet kept = set_difference(g, h);
  const ElementSet hit = set_intersection(g, h);
  const ElementSet merged = set_union(kept, z);
  return in_truncation(k, m, eps, merged) &&
         k.cost_of(z) <= k.cost_of(hit) &&
         k.profit_of(merged) >= (1 - eps.value()) * k.profit_of(g) &&
         z.size() <= hit.size();
}

bool is_substitution(const BmiInstance& k, const MatroidHandle& m,
                     const EpsParam& eps, const Rational& alpha,
                     const ElementSet& g, const ElementSet& z,
                     const Rational& opt_value) {
  require_small_independent(k, m, eps, g, "is_substitution");
  const ElementSet h = profitable_elements(k, eps, opt_value);
  const ElementSet kept = set_difference(g, h);
  const ElementSet hit = set_intersection(g, h);
  std::vector<long> balance(eps.class_count(), 0);
  for (ElementId e : z) {
    auto r = profit_class(k, eps, alpha, e);
    if (!r) return false;
    ++balance[*r - 1];
  }
  for (ElementId e : hit) {
    if (auto r = profit_class(k, eps, alpha, e)) --balance[*r - 1];
  }
  if (std::any_of(balance.begin(), balance.end(), [](long b) { return b != 0; })) {
    return false;
  }
  return set_intersection(kept, z).empty() &&
         in_truncation(k, m, eps, set_union(kept, z)) &&
         k.cost_of(z) <= k.cost_of(hit);
}

RepresentativeCheck verify_representative(const BmiInstance& k,
                                          const MatroidHandle& m,
                                          const EpsParam& eps,
                                          const ElementSet& r,
                                          const Rational& opt_value,
                                          std::size_t limit) {
  if (k.size() > limit) {
    throw ScaleCapError("verify_representative: " + std::to_string(k.size()) +
                        " elements exceeds limit " + std::to_string(limit));
  }
  const ElementSet h = profitable_elements(k, eps, opt_value);
  const std::size_t level = eps.truncation_level(k.size());
  const ElementSet ground = k.ground();
  RepresentativeCheck check;

  auto has_replacement = [&](const ElementSet& g) {
    const ElementSet kept = set_difference(g, h);
    const ElementSet hit = set_intersection(g, h);
    const Rational cost_cap = k.cost_of(hit);
    const Rational profit_need = (1 - eps.value()) * k.profit_of(g);
    ElementSet z;
    auto dfs = [&](auto&& self, std::size_t from, const Rational& cost) -> bool {
      ElementSet merged = set_union(kept, z);
      if (merged.size() > level || !m.independent_unchecked(merged)) {
        return false;
      }
      if (k.profit_of(merged) >= profit_need) return true;
      if (z.size() == hit.size()) return false;
      for (std::size_t i = from; i < r.size(); ++i) {
        Rational next = cost + k.cost(r[i]);
        if (next > cost_cap) continue;
        z.push_back(r[i]);
        if (self(self, i + 1, next)) return true;
        z.pop_back();
      }
      return false;
    };
    return dfs(dfs, 0, Rational(0));
  };

  ElementSet g;
  auto walk = [&](auto&& self, std::size_t from) -> bool {
    ++check.sets_checked;
    if (!has_replacement(g)) {
      check.ok = false;
      check.witness = g;
      return false;
    }
    if (g.size() == level) return true;
    for (std::size_t i = from; i < ground.size(); ++i) {
      g.push_back(ground[i]);
      if (m.independent_unchecked(g) && !self(self, i + 1)) return false;
      g.pop_back();
    }
    return true;
  };
  walk(walk, 0);
  return check;
}

}  // namespace bmi
