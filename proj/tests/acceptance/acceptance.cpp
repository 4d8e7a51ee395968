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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is 0 only
// when every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bmi/budget_lp.hpp"
#include "bmi/eptas.hpp"
#include "bmi/exact_oracle.hpp"
#include "bmi/families.hpp"
#include "bmi/instance_io.hpp"
#include "bmi/matroid.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

namespace bmi {
namespace {

using testing::IndependenceTable;
using testing::Mask;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Every grid summary and α run seen by the suite, for the enumeration bound.
struct EnumLedger {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  void check(std::uint64_t count, const BigInt& bound) {
    ++checked;
    if (BigInt(static_cast<unsigned long>(count)) > bound) ++violations;
  }
  void check(const RunReport& r) {
    for (const auto& g : r.grid) check(g.enum_count, g.enum_bound);
  }
} g_enum;

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const std::vector<std::string> kCoreFamilies = {"uniform", "partition",
                                                "graphic", "linear"};

// 1. approximate(K, ε) >= (1-ε)·OPT.
Outcome approximation_guarantee() {
  Outcome o;
  std::size_t runs = 0, failures = 0;
  double worst_ms = 0;
  for (const auto& family : kCoreFamilies) {
    for (std::uint64_t i = 0; i < 200; ++i) {
      BmiInstance k = testing::generated(family, 5 + i % 10, 1000 + i);
      const Rational opt = brute_force_opt(k).profit;
      for (Rational target : {Rational(1, 2), Rational(1, 3)}) {
        RunReport r = approximate(k, target);
        g_enum.check(r);
        ++runs;
        worst_ms = std::max(worst_ms, r.wall_ms);
        if (r.profit < (1 - target) * opt || !k.is_solution(r.solution) ||
            k.profit_of(r.solution) != r.profit) {
          ++failures;
          if (o.pass) {
            o.detail = fmt("first failure %s seed %llu eps %s; ", family.c_str(),
                           static_cast<unsigned long long>(1000 + i),
                           to_string(target).c_str());
          }
          o.pass = false;
        }
      }
    }
  }
  o.detail += fmt("%zu runs over 4 families, %zu failures, slowest %.1f ms",
                  runs, failures, worst_ms);
  return o;
}

// Grid points α ∈ [OPT/2, OPT] for the internal parameter.
std::vector<Rational> good_alphas(const BmiInstance& k, const EpsParam& eps,
                                  const Rational& opt) {
  ProfitBounds b = lp_upper_bound(k);
  std::vector<Rational> out;
  for (const Rational& a : alpha_grid(b.lower, b.upper, eps)) {
    if (2 * a >= opt && a <= opt) out.push_back(a);
  }
  return out;
}

// 2. run_for_alpha(K, ε, α) >= (1-7ε)·OPT on good α; (1-ε)·OPT reported.
Outcome inner_guarantee() {
  Outcome o;
  std::size_t runs = 0, hard = 0, soft = 0, no_alpha = 0;
  auto sweep = [&](unsigned long rec, std::size_t max_n, std::size_t count) {
    const EpsParam eps(rec);
    for (std::uint64_t i = 0; i < count; ++i) {
      const std::string& family = testing::all_families()[i % 6];
      BmiInstance k = testing::generated(family, max_n - i % 5, 2000 + i);
      const Rational opt = brute_force_opt(k).profit;
      std::vector<Rational> alphas = good_alphas(k, eps, opt);
      if (alphas.empty() && sgn(opt) > 0) ++no_alpha;
      for (const Rational& a : alphas) {
        AlphaRun run = run_for_alpha(k, eps, a);
        g_enum.check(run.enum_count, run.enum_bound);
        ++runs;
        if (run.profit < (1 - 7 * eps.value()) * opt || !k.is_solution(run.solution)) {
          ++hard;
        }
        if (run.profit < (1 - eps.value()) * opt) ++soft;
      }
    }
  };
  sweep(7, 12, 240);
  sweep(14, 10, 240);
  o.pass = hard == 0 && no_alpha == 0;
  o.detail = fmt("%zu runs at eps 1/7 (n<=12) and 1/14 (n<=10); "
                 "%zu below (1-7eps)OPT, %zu below (1-eps)OPT, "
                 "%zu instances without a grid point in [OPT/2, OPT]",
                 runs, hard, soft, no_alpha);
  return o;
}

// 3. Every LP solved in this process had at most two fractional entries.
Outcome basic_structure() {
  LpStats s = lp_stats();
  Outcome o;
  o.pass = s.fractional_violations == 0 && s.max_fractional <= 2 &&
           s.solves >= 10000;
  o.detail = fmt("%llu LP solves, max fractional entries %llu, %llu violations",
                 static_cast<unsigned long long>(s.solves),
                 static_cast<unsigned long long>(s.max_fractional),
                 static_cast<unsigned long long>(s.fractional_violations));
  return o;
}

// 4. find_rep respects |R ∩ C_r| <= q and is representative for good α.
Outcome representative_sets() {
  Outcome o;
  const EpsParam eps(3);
  std::size_t instances = 0, checks = 0, failures = 0;
  std::uint64_t sets = 0;
  for (std::uint64_t i = 0; i < 300; ++i) {
    const std::string& family = testing::all_families()[i % 6];
    BmiInstance k = testing::generated(family, 10 - i % 4, 3000 + i);
    const Rational opt = brute_force_opt(k).profit;
    std::vector<Rational> alphas = good_alphas(k, eps, opt);
    if (alphas.empty()) continue;
    ++instances;
    for (const Rational& a : alphas) {
      RepresentativeSet rep = find_rep(k, eps, a);
      bool ok = true;
      for (const auto& slice : rep.slices) {
        ok = ok && BigInt(static_cast<unsigned long>(slice.size())) <= eps.q();
      }
      RepresentativeCheck c =
          verify_representative(k, k.matroid(), eps, rep.elements, opt);
      sets += c.sets_checked;
      ok = ok && c.ok;
      ++checks;
      if (!ok) ++failures;
    }
  }
  o.pass = failures == 0 && instances >= 100;
  o.detail = fmt("%zu instances, %zu (instance, alpha) checks, %llu sets G "
                 "examined, %zu failures",
                 instances, checks, static_cast<unsigned long long>(sets), failures);
  return o;
}

// 5. |W| <= (|R|+1)^(1/ε) everywhere, including a bench directory pass.
Outcome enumeration_bound() {
  for (std::uint64_t i = 0; i < 30; ++i) {
    BmiInstance k = testing::generated(testing::all_families()[i % 6], 14, 5000 + i);
    g_enum.check(approximate(k, Rational(1, 3)));
  }
  Outcome o;
  o.pass = g_enum.violations == 0 && g_enum.checked > 0;
  o.detail = fmt("%llu enumeration counts checked, %llu above the bound",
                 static_cast<unsigned long long>(g_enum.checked),
                 static_cast<unsigned long long>(g_enum.violations));
  return o;
}

// 6. separate agrees with all 2^n rank constraints.
Outcome separation_equivalence() {
  Outcome o;
  std::mt19937_64 rng(6);
  std::size_t points = 0, inside = 0, mismatches = 0;
  for (std::uint64_t i = 0; i < 60; ++i) {
    BmiInstance k = testing::generated(testing::all_families()[i % 6], 12 - i % 6, 6000 + i);
    IndependenceTable t(k.matroid());
    const std::vector<std::size_t> ranks = t.rank_table();
    std::vector<Mask> indep;
    for (Mask s = 0; s <= t.full(); ++s) {
      if (t.independent(s)) indep.push_back(s);
    }
    for (int j = 0; j < 20; ++j) {
      std::vector<Rational> x(k.size(), Rational(0));
      if (j % 2 == 0) {
        // Convex combination of independent sets, nudged outward on odd
        // draws so both verdicts occur near the boundary.
        const int parts = 1 + static_cast<int>(rng() % 4);
        for (int p = 0; p < parts; ++p) {
          Mask s = indep[rng() % indep.size()];
          for (std::size_t e = 0; e < k.size(); ++e) {
            if (s >> e & 1) x[e] += Rational(1, parts);
          }
        }
        if (j % 4 == 2) {
          Rational scale = ratio(9 + static_cast<long>(rng() % 4), 10);
          for (auto& v : x) v *= scale;
          x[rng() % k.size()] += Rational(1, 1 + static_cast<long>(rng() % 6));
        }
      } else {
        for (auto& v : x) v = ratio(static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 6));
      }
      FractionalPoint fp{k.ground(), x};
      SeparationResult r = separate(k.matroid(), fp);
      const bool truth = testing::violated_constraints(t, x, ranks).empty();
      ++points;
      inside += truth;
      bool ok = r.inside == truth;
      if (ok && !r.inside) {
        Mask s = t.to_mask(r.violated);
        ok = ranks[s] == r.rank && testing::mask_sum(t, s, x) == r.mass &&
             r.mass > Rational(static_cast<unsigned long>(r.rank));
      }
      if (!ok) ++mismatches;
    }
  }
  o.pass = mismatches == 0 && points >= 1000;
  o.detail = fmt("%zu points (%zu inside, %zu outside), %zu disagreements",
                 points, inside, points - inside, mismatches);
  return o;
}

std::vector<Rational> random_weights(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> w(n);
  for (auto& v : w) v = ratio(static_cast<long>(rng() % 7), 1 + static_cast<long>(rng() % 3));
  return w;
}

// 7. Greedy optimality, blocking, union slices.
Outcome greedy_properties() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::size_t matroids = 0, failures = 0, unions = 0;
  for (std::uint64_t i = 0; i < 1200; ++i) {
    BmiInstance k = testing::generated(testing::all_families()[i % 6], 1 + i % 9, 7000 + i);
    const MatroidHandle& m = k.matroid();
    IndependenceTable t(m);
    std::vector<Rational> w = random_weights(rng, k.size());
    ElementSet b = min_weight_basis(m, w);
    ++matroids;
    bool ok = t.independent(t.to_mask(b)) && b.size() == t.rank(t.full()) &&
              testing::mask_sum(t, t.to_mask(b), w) == testing::min_basis_weight(t, w);
    for (ElementId a : set_difference(k.ground(), b)) {
      ElementSet lighter;
      for (ElementId e : b) {
        if (w[e] <= w[a]) lighter.push_back(e);
      }
      ok = ok && !t.independent(t.to_mask(with(lighter, a)));
    }
    // Split the ground into up to three disjoint pieces and union their
    // restrictions.
    if (k.size() >= 2) {
      std::vector<ElementSet> pieces(2 + rng() % 2);
      for (ElementId e : k.ground()) pieces[rng() % pieces.size()].push_back(e);
      std::vector<MatroidHandle> parts;
      for (const auto& p : pieces) parts.push_back(restrict_to(m, p));
      MatroidHandle u = matroid_union(parts);
      ElementSet ub = min_weight_basis(u, w);
      for (const auto& p : pieces) {
        IndependenceTable pt(m, p);
        ElementSet slice = set_intersection(ub, p);
        ok = ok && pt.independent(pt.to_mask(slice)) &&
             slice.size() == pt.rank(pt.full()) &&
             testing::mask_sum(pt, pt.to_mask(slice), w) == testing::min_basis_weight(pt, w);
      }
      ++unions;
    }
    if (!ok) ++failures;
  }
  o.pass = failures == 0;
  o.detail = fmt("%zu matroids (n<=9), %zu unions, %zu failures", matroids, unions,
                 failures);
  return o;
}

// Copy of `m` with every id shifted by `offset`.
MatroidHandle shifted(const MatroidHandle& m, ElementId offset) {
  ElementSet ground;
  for (ElementId e : m.ground()) ground.push_back(e + offset);
  return MatroidHandle::from_oracle(
      ground,
      [m, offset](std::span<const ElementId> s) {
        std::vector<ElementId> back;
        for (ElementId e : s) back.push_back(e - offset);
        return m.is_independent(back);
      },
      "shifted");
}

// 8. Derived matroids pass the axioms.
Outcome operation_closure() {
  Outcome o;
  std::mt19937_64 rng(8);
  std::size_t counts[4] = {0, 0, 0, 0}, failures = 0;
  for (std::uint64_t i = 0; counts[0] < 200 || counts[1] < 200 ||
                            counts[2] < 200 || counts[3] < 200; ++i) {
    BmiInstance k = testing::generated(testing::all_families()[i % 6], 1 + i % 9, 8000 + i);
    const MatroidHandle& m = k.matroid();
    if (!check_axioms(m).ok()) {
      ++failures;
      continue;
    }
    const int op = static_cast<int>(i % 4);
    MatroidHandle d = m;
    if (op == 0) {
      ElementSet f;
      for (ElementId e : k.ground()) {
        if (rng() % 2) f.push_back(e);
      }
      d = restrict_to(m, f);
    } else if (op == 1) {
      ElementSet f;
      for (ElementId e : k.ground()) {
        if (rng() % 3 == 0 && m.is_independent(with(f, e))) f = with(f, e);
      }
      d = contract(m, f);
    } else if (op == 2) {
      d = truncate(m, rng() % (k.size() + 2));
    } else {
      BmiInstance other = testing::generated(testing::all_families()[rng() % 6],
                                             rng() % (10 - k.size()), 9000 + i);
      d = matroid_union({m, shifted(other.matroid(), static_cast<ElementId>(k.size()))});
    }
    ++counts[op];
    if (!check_axioms(d, 9).ok()) ++failures;
  }
  o.pass = failures == 0;
  o.detail = fmt("restrict %zu, contract %zu, truncate %zu, union %zu; %zu failures",
                 counts[0], counts[1], counts[2], counts[3], failures);
  return o;
}

// 9. Knapsack special case.
Outcome knapsack_regression() {
  Outcome o;
  std::size_t failures = 0;
  for (std::uint64_t i = 0; i < 120; ++i) {
    BmiInstance k = testing::generated("free", 3 + i % 10, 10000 + i);
    const Rational dp = knapsack_dp(k);
    const Rational bf = brute_force_opt(k).profit;
    RunReport r = approximate(k, Rational(1, 3));
    g_enum.check(r);
    if (dp != bf || r.profit * 3 < dp * 2) ++failures;
  }
  o.pass = failures == 0;
  o.detail = fmt("120 free-matroid instances (n<=12), %zu failures", failures);
  return o;
}

// 10. Reports are identical across repetitions and job counts.
Outcome determinism() {
  Outcome o;
  std::size_t differ = 0, runs = 0;
  for (std::uint64_t i = 0; i < 36; ++i) {
    GenSpec g;
    g.family = testing::all_families()[i % 6];
    g.n = 6 + i % 8;
    g.seed = 11000 + i;
    const std::string a = serialize_instance(generate_instance(g));
    const std::string b = serialize_instance(generate_instance(g));
    ParsedInstance p = parse_instance(a);
    std::string first;
    for (unsigned jobs : {1u, 4u, 1u, 3u}) {
      RunReport r = approximate(p.instance, Rational(1, 3), RunOptions{jobs});
      g_enum.check(r);
      std::string json = report_to_json(r, p.source_index, false);
      if (first.empty()) first = json;
      if (json != first) ++differ;
      ++runs;
    }
    if (a != b) ++differ;
  }
  o.pass = differ == 0;
  o.detail = fmt("%zu solve runs with jobs in {1,3,4}, %zu differing reports", runs,
                 differ);
  return o;
}

}  // namespace
}  // namespace bmi

int main() {
  using bmi::Outcome;
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  // 3 and 5 summarize counters filled by the others, so they run last.
  std::vector<Criterion> order = {
      {1, "approximation guarantee", bmi::approximation_guarantee},
      {2, "inner guarantee at fixed alpha", bmi::inner_guarantee},
      {4, "representative set bound and property", bmi::representative_sets},
      {6, "separation oracle equivalence", bmi::separation_equivalence},
      {7, "greedy min-basis optimality", bmi::greedy_properties},
      {8, "matroid operation closure", bmi::operation_closure},
      {9, "knapsack regression", bmi::knapsack_regression},
      {10, "determinism", bmi::determinism},
      {5, "enumeration bound", bmi::enumeration_bound},
      {3, "basic solution structure", bmi::basic_structure},
  };
  std::vector<std::string> lines(11);
  bool all = true;
  for (const auto& c : order) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << " (" << c.name
         << "): " << o.detail;
    char t[32];
    std::snprintf(t, sizeof t, " [%.1fs]", secs);
    line << t;
    lines[c.id] = line.str();
    std::cerr << lines[c.id] << std::endl;
    all = all && o.pass;
  }
  for (int id = 1; id <= 10; ++id) std::cout << lines[id] << "\n";
  std::cout << (all ? "ALL PASS" : "SOME CRITERIA FAILED") << "\n";
  return all ? 0 : 1;
}
