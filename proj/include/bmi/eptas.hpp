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

#ifndef BMI_EPTAS_HPP_
#define BMI_EPTAS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bmi/budget_lp.hpp"
#include "bmi/element_set.hpp"
#include "bmi/instance.hpp"
#include "bmi/matroid.hpp"
#include "bmi/rational.hpp"

namespace bmi {

// Accuracy parameter ε = 1/k for an integer k >= 2, with the derived
// quantities the scheme needs, all exact.
class EpsParam {
 public:
  explicit EpsParam(unsigned long reciprocal);

  // Internal parameter for a requested guarantee: ε = 1/⌈7/target⌉.
  // Throws PreconditionError unless 0 < target <= 1/2.
  static EpsParam for_target(const Rational& target);

  unsigned long reciprocal() const { return k_; }
  const Rational& value() const { return value_; }
  // q(ε) = k^k.
  const BigInt& q() const { return q_; }
  // min(q(ε), n): the truncation level actually applied.
  std::size_t truncation_level(std::size_t n) const;
  // r_max = max{m : (1-ε)^m >= ε/2} + 1.
  std::size_t class_count() const { return powers_.size() - 1; }
  // (1-ε)^r for r in [0, r_max].
  const Rational& decay(std::size_t r) const { return powers_[r]; }

 private:
  unsigned long k_;
  Rational value_;
  BigInt q_;
  std::vector<Rational> powers_;
};

// Class r (1-based) with p(e)/(2α) ∈ ((1-ε)^r, (1-ε)^(r-1)], or nullopt when
// the ratio exceeds 1 or is at most (1-ε)^r_max.
std::optional<std::size_t> profit_class(const BmiInstance& k,
                                        const EpsParam& eps,
                                        const Rational& alpha, ElementId e);

struct RepresentativeSet {
  ElementSet elements;
  // slices[r - 1] = R ∩ C_r(α).
  std::vector<ElementSet> slices;
  std::vector<ElementSet> classes;
  Rational alpha;
  std::size_t truncation = 0;
  // q(ε) · r_max.
  BigInt cardinality_bound;
};

// Minimum-cost basis of the disjoint union over classes r of
// truncate(restrict(M, C_r(α)), min(q(ε), n)).
RepresentativeSet find_rep(const BmiInstance& k, const MatroidHandle& m,
                           const EpsParam& eps, const Rational& alpha);
RepresentativeSet find_rep(const BmiInstance& k, const EpsParam& eps,
                           const Rational& alpha);

struct RunOptions {
  unsigned jobs = 1;
};

struct AlphaRun {
  Rational alpha;
  ElementSet solution;
  Rational profit;
  RepresentativeSet rep;
  ElementSet lp_domain;  // E(α)
  // |W|: subsets F of R with |F| <= 1/ε that are solutions.
  std::uint64_t enum_count = 0;
  // (|R| + 1)^(1/ε).
  BigInt enum_bound;
  std::uint64_t lp_calls = 0;
  std::size_t max_fractional = 0;
};

// Subsets F ⊆ R with |F| <= max_size that are solutions, ordered by size
// then lexicographically.
std::vector<ElementSet> enumerate_guesses(const BmiInstance& k,
                                          const MatroidHandle& m,
                                          const ElementSet& r,
                                          std::size_t max_size);

// One pass of the enumeration scheme for a fixed α.
AlphaRun run_for_alpha(const BmiInstance& k, const MatroidHandle& m,
                       const EpsParam& eps, const Rational& alpha,
                       const RunOptions& options = {});
AlphaRun run_for_alpha(const BmiInstance& k, const EpsParam& eps,
                       const Rational& alpha, const RunOptions& options = {});

// {L (1+ε)^j : j >= 0} ∩ [L, U]; empty when U <= 0.
std::vector<Rational> alpha_grid(const Rational& lower, const Rational& upper,
                                 const EpsParam& eps);

struct AlphaSummary {
  Rational alpha;
  std::size_t rep_size = 0;
  std::size_t lp_domain_size = 0;
  std::uint64_t enum_count = 0;
  BigInt enum_bound;
  std::uint64_t lp_calls = 0;
  // True when (R, E(α)) matched an earlier grid point and its result was
  // reused.
  bool reused = false;
  Rational profit;
};

struct RunReport {
  ElementSet solution;
  Rational profit;
  Rational eps_target;
  Rational eps_internal;
  Rational lower_bound;
  Rational upper_bound;
  std::vector<AlphaSummary> grid;
  std::optional<Rational> winning_alpha;
  std::uint64_t lp_calls = 0;
  std::uint64_t enum_total = 0;
  std::uint64_t oracle_calls = 0;
  double wall_ms = 0;
  std::optional<Rational> exact_opt;
  std::optional<Rational> ratio;
  // The bootstrap LP that produced the bounds.
  std::optional<LpOutcome> bootstrap_lp;
};

// Approximation with guarantee (1 - eps_target) · OPT.
RunReport approximate(const BmiInstance& k, const Rational& eps_target,
                      const RunOptions& options = {});

// H = {e : p(e) > ε · opt}.
ElementSet profitable_elements(const BmiInstance& k, const EpsParam& eps,
                               const Rational& opt_value);

// Z is a replacement of G. Throws PreconditionError unless G is independent
// with |G| <= q(ε).
bool is_replacement(const BmiInstance& k, const MatroidHandle& m,
                    const EpsParam& eps, const ElementSet& g,
                    const ElementSet& z, const Rational& opt_value);

// Z is a substitution of G for the classes at `alpha`.
bool is_substitution(const BmiInstance& k, const MatroidHandle& m,
                     const EpsParam& eps, const Rational& alpha,
                     const ElementSet& g, const ElementSet& z,
                     const Rational& opt_value);

struct RepresentativeCheck {
  bool ok = true;
  ElementSet witness;  // G without a replacement inside R
  std::uint64_t sets_checked = 0;
};

inline constexpr std::size_t kRepresentativeCheckLimit = 16;

// For every G ∈ I with |G| <= q(ε), searches a replacement Z ⊆ R.
// Throws ScaleCapError beyond `limit` elements.
RepresentativeCheck verify_representative(
    const BmiInstance& k, const MatroidHandle& m, const EpsParam& eps,
    const ElementSet& r, const Rational& opt_value,
    std::size_t limit = kRepresentativeCheckLimit);

}  // namespace bmi

#endif  // BMI_EPTAS_HPP_
