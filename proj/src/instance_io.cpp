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

#include "bmi/instance_io.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "bmi/errors.hpp"
#include "json.hpp"

namespace bmi {

namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

const json& field(const json& obj, const std::string& key,
                  const std::string& at) {
  if (!obj.is_object()) throw ValidationError(at, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ValidationError(at.empty() ? key : at + "." + key, "missing field");
  }
  return *it;
}

Rational rational_field(const json& v, const std::string& at) {
  if (!v.is_string()) {
    throw ValidationError(at, "rationals must be JSON strings like \"3/4\"");
  }
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ValidationError(at, e.what());
  }
}

std::size_t count_field(const json& v, const std::string& at) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw ValidationError(at, "expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

ElementSet id_list(const json& v, const std::string& at) {
  if (!v.is_array()) throw ValidationError(at, "expected an array of ids");
  ElementSet s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    s.push_back(static_cast<ElementId>(
        count_field(v[i], at + "[" + std::to_string(i) + "]")));
  }
  return s;
}

FamilySpec parse_matroid(const json& m, std::size_t n) {
  const std::string kind_name = [&] {
    const json& k = field(m, "kind", "matroid");
    if (!k.is_string()) throw ValidationError("matroid.kind", "expected a string");
    return k.get<std::string>();
  }();
  FamilySpec spec;
  spec.ground_size = n;
  switch (parse_family_kind(kind_name)) {
    case FamilyKind::kUniform:
      spec.payload = UniformSpec{count_field(field(m, "rank", "matroid"), "matroid.rank")};
      break;
    case FamilyKind::kPartition: {
      PartitionSpec p;
      const json& blocks = field(m, "blocks", "matroid");
      if (!blocks.is_array()) throw ValidationError("matroid.blocks", "expected an array");
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        ElementSet block = id_list(blocks[b], "matroid.blocks[" + std::to_string(b) + "]");
        std::sort(block.begin(), block.end());
        p.blocks.push_back(std::move(block));
      }
      const json& caps = field(m, "capacities", "matroid");
      if (!caps.is_array()) throw ValidationError("matroid.capacities", "expected an array");
      for (std::size_t b = 0; b < caps.size(); ++b) {
        p.capacities.push_back(
            count_field(caps[b], "matroid.capacities[" + std::to_string(b) + "]"));
      }
      spec.payload = std::move(p);
      break;
    }
    case FamilyKind::kGraphic: {
      GraphicSpec g;
      g.num_vertices = count_field(field(m, "num_vertices", "matroid"), "matroid.num_vertices");
      const json& edges = field(m, "edges", "matroid");
      if (!edges.is_array()) throw ValidationError("matroid.edges", "expected an array");
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string at = "matroid.edges[" + std::to_string(i) + "]";
        if (!edges[i].is_array() || edges[i].size() != 2) {
          throw ValidationError(at, "expected a [u, v] pair");
        }
        g.edges.emplace_back(count_field(edges[i][0], at + "[0]"),
                             count_field(edges[i][1], at + "[1]"));
      }
      spec.payload = std::move(g);
      break;
    }
    case FamilyKind::kLinear: {
      LinearSpec l;
      const json& cols = field(m, "columns", "matroid");
      if (!cols.is_array()) throw ValidationError("matroid.columns", "expected an array");
      for (std::size_t i = 0; i < cols.size(); ++i) {
        const std::string at = "matroid.columns[" + std::to_string(i) + "]";
        if (!cols[i].is_array()) throw ValidationError(at, "expected an array");
        std::vector<Rational> col;
        for (std::size_t j = 0; j < cols[i].size(); ++j) {
          col.push_back(rational_field(cols[i][j], at + "[" + std::to_string(j) + "]"));
        }
        l.columns.push_back(std::move(col));
      }
      spec.payload = std::move(l);
      break;
    }
    case FamilyKind::kExplicit: {
      ExplicitSpec x;
      const json& sets = field(m, "maximal_sets", "matroid");
      if (!sets.is_array()) throw ValidationError("matroid.maximal_sets", "expected an array");
      for (std::size_t i = 0; i < sets.size(); ++i) {
        x.maximal_sets.push_back(make_set(
            id_list(sets[i], "matroid.maximal_sets[" + std::to_string(i) + "]")));
      }
      spec.payload = std::move(x);
      break;
    }
  }
  return spec;
}

ojson matroid_json(const FamilySpec& spec) {
  ojson m;
  m["kind"] = to_string(spec.kind());
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, UniformSpec>) {
          m["rank"] = p.rank;
        } else if constexpr (std::is_same_v<T, PartitionSpec>) {
          m["blocks"] = p.blocks;
          m["capacities"] = p.capacities;
        } else if constexpr (std::is_same_v<T, GraphicSpec>) {
          m["num_vertices"] = p.num_vertices;
          ojson edges = ojson::array();
          for (auto [u, v] : p.edges) edges.push_back({u, v});
          m["edges"] = std::move(edges);
        } else if constexpr (std::is_same_v<T, LinearSpec>) {
          ojson cols = ojson::array();
          for (const auto& c : p.columns) {
            ojson col = ojson::array();
            for (const auto& v : c) col.push_back(to_string(v));
            cols.push_back(std::move(col));
          }
          m["columns"] = std::move(cols);
        } else {
          m["maximal_sets"] = p.maximal_sets;
        }
      },
      spec.payload);
  return m;
}

ojson set_json(const ElementSet& s) { return ojson(s); }

ojson source_ids(const ElementSet& s, const std::vector<std::size_t>& source) {
  ojson out = ojson::array();
  for (ElementId e : s) out.push_back(e < source.size() ? source[e] : e);
  return out;
}

ojson lp_json(const LpOutcome& lp) {
  ojson j;
  j["objective"] = to_string(lp.objective);
  ojson point = ojson::object();
  for (std::size_t i = 0; i < lp.point.domain.size(); ++i) {
    if (sgn(lp.point.values[i]) != 0) {
      point[std::to_string(lp.point.domain[i])] = to_string(lp.point.values[i]);
    }
  }
  j["point"] = std::move(point);
  j["fractional_support"] = set_json(lp.fractional_support);
  ojson cuts = ojson::array();
  for (const auto& c : lp.working_set) {
    cuts.push_back({{"set", c.set}, {"rank", c.rank}});
  }
  j["working_set"] = std::move(cuts);
  j["rounds"] = lp.rounds;
  return j;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n) by rejection, independent of library distributions.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = engine_.max() - engine_.max() % n;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % n;
  }

 private:
  std::mt19937_64 engine_;
};

std::vector<std::vector<Rational>> random_columns(Rng& rng, std::size_t n,
                                                  std::size_t dim) {
  std::vector<std::vector<Rational>> cols;
  while (cols.size() < n) {
    std::vector<Rational> col(dim);
    bool nonzero = false;
    for (auto& v : col) {
      v = static_cast<long>(rng.below(5)) - 2;
      nonzero = nonzero || sgn(v) != 0;
    }
    if (nonzero) cols.push_back(std::move(col));
  }
  return cols;
}

FamilySpec random_family(Rng& rng, const std::string& family, std::size_t n) {
  FamilySpec spec;
  spec.ground_size = n;
  if (family == "uniform") {
    spec.payload = UniformSpec{n == 0 ? 0 : 1 + rng.below(n)};
  } else if (family == "free") {
    spec.payload = UniformSpec{n};
  } else if (family == "partition") {
    const std::size_t blocks = 1 + rng.below(std::max<std::size_t>(1, (n + 1) / 2));
    std::vector<ElementSet> raw(blocks);
    for (ElementId e = 0; e < n; ++e) raw[rng.below(blocks)].push_back(e);
    PartitionSpec p;
    for (auto& b : raw) {
      if (b.empty()) continue;
      p.capacities.push_back(1 + rng.below(b.size()));
      p.blocks.push_back(std::move(b));
    }
    spec.payload = std::move(p);
  } else if (family == "graphic") {
    GraphicSpec g;
    g.num_vertices = 2 + rng.below(n / 2 + 1);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t u = rng.below(g.num_vertices);
      std::size_t v = rng.below(g.num_vertices - 1);
      if (v >= u) ++v;
      g.edges.emplace_back(u, v);
    }
    spec.payload = std::move(g);
  } else if (family == "linear") {
    const std::size_t dim = 1 + rng.below(std::max<std::size_t>(1, std::min<std::size_t>(n, 4)));
    spec.payload = LinearSpec{random_columns(rng, n, dim)};
  } else if (family == "explicit") {
    // Bases of a random low-rank linear matroid.
    const std::size_t dim = 1 + rng.below(std::max<std::size_t>(1, std::min<std::size_t>(n, 3)));
    auto cols = random_columns(rng, n, dim);
    const std::size_t r = column_rank(cols);
    ExplicitSpec x;
    ElementSet current;
    auto dfs = [&](auto&& self, ElementId from) -> void {
      if (current.size() == r) {
        x.maximal_sets.push_back(current);
        return;
      }
      for (ElementId e = from; e < n; ++e) {
        current.push_back(e);
        std::vector<std::vector<Rational>> picked;
        for (ElementId c : current) picked.push_back(cols[c]);
        if (column_rank(picked) == current.size()) self(self, e + 1);
        current.pop_back();
      }
    };
    dfs(dfs, 0);
    spec.payload = std::move(x);
  } else {
    throw ValidationError("family", "unknown generator family '" + family + "'");
  }
  return spec;
}

}  // namespace

ParsedInstance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ValidationError("", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("", "instance must be a JSON object");

  const Rational budget = rational_field(field(doc, "budget", ""), "budget");
  const json& elements = field(doc, "elements", "");
  if (!elements.is_array()) throw ValidationError("elements", "expected an array");
  std::vector<Rational> costs, profits;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const std::string at = "elements[" + std::to_string(i) + "]";
    costs.push_back(rational_field(field(elements[i], "cost", at), at + ".cost"));
    profits.push_back(rational_field(field(elements[i], "profit", at), at + ".profit"));
  }
  FamilySpec spec = parse_matroid(field(doc, "matroid", ""), elements.size());

  BmiInstance raw(budget, costs, profits, spec);
  ElementSet keep;
  std::vector<std::string> warnings;
  for (ElementId e = 0; e < raw.size(); ++e) {
    const ElementId single[] = {e};
    if (raw.matroid().independent_unchecked(single)) {
      keep.push_back(e);
    } else {
      warnings.push_back("element " + std::to_string(e) +
                         " is dependent on its own and was dropped");
    }
  }
  std::vector<std::size_t> source(keep.begin(), keep.end());
  if (keep.size() == raw.size()) {
    return {std::move(raw), std::move(source), std::move(warnings)};
  }
  std::vector<Rational> kc, kp;
  for (ElementId e : keep) {
    kc.push_back(costs[e]);
    kp.push_back(profits[e]);
  }
  BmiInstance normalized(budget, std::move(kc), std::move(kp),
                         restrict_spec(spec, keep));
  return {std::move(normalized), std::move(source), std::move(warnings)};
}

std::string serialize_instance(const BmiInstance& k) {
  ojson doc;
  doc["budget"] = to_string(k.budget());
  ojson elements = ojson::array();
  for (ElementId e = 0; e < k.size(); ++e) {
    elements.push_back({{"cost", to_string(k.cost(e))},
                        {"profit", to_string(k.profit(e))}});
  }
  doc["elements"] = std::move(elements);
  doc["matroid"] = matroid_json(k.spec());
  return doc.dump(2) + "\n";
}

BmiInstance generate_instance(const GenSpec& spec) {
  Rng rng(spec.seed);
  FamilySpec family = random_family(rng, spec.family, spec.n);
  static constexpr long kCostDen[] = {1, 2, 4};
  static constexpr long kProfitDen[] = {1, 3};
  const long cost_den = kCostDen[rng.below(3)];
  const long profit_den = kProfitDen[rng.below(2)];
  std::vector<Rational> costs, profits;
  Rational total = 0, largest = 0;
  for (std::size_t i = 0; i < spec.n; ++i) {
    Rational c = ratio(static_cast<long>(1 + rng.below(std::max(1u, spec.cost_max))), cost_den);
    Rational p = ratio(static_cast<long>(1 + rng.below(std::max(1u, spec.profit_max))), profit_den);
    total += c;
    largest = std::max(largest, c);
    costs.push_back(std::move(c));
    profits.push_back(std::move(p));
  }
  Rational budget = total * ratio(static_cast<long>(2 + rng.below(4)), 10);
  budget = std::max(budget, largest);
  if (sgn(budget) == 0) budget = 1;
  return BmiInstance(std::move(budget), std::move(costs), std::move(profits),
                     std::move(family));
}

std::string report_to_json(const RunReport& r,
                           const std::vector<std::size_t>& source_index,
                           bool include_timing) {
  ojson j;
  j["solution"] = set_json(r.solution);
  if (!source_index.empty()) j["solution_source_ids"] = source_ids(r.solution, source_index);
  j["profit"] = to_string(r.profit);
  j["eps_target"] = to_string(r.eps_target);
  j["eps_internal"] = to_string(r.eps_internal);
  j["lower_bound"] = to_string(r.lower_bound);
  j["upper_bound"] = to_string(r.upper_bound);
  j["winning_alpha"] = r.winning_alpha ? ojson(to_string(*r.winning_alpha)) : ojson();
  ojson grid = ojson::array();
  for (const auto& g : r.grid) {
    grid.push_back({{"alpha", to_string(g.alpha)},
                    {"rep_size", g.rep_size},
                    {"lp_domain_size", g.lp_domain_size},
                    {"enum_count", g.enum_count},
                    {"enum_bound", g.enum_bound.get_str()},
                    {"lp_calls", g.lp_calls},
                    {"reused", g.reused},
                    {"profit", to_string(g.profit)}});
  }
  j["alpha_grid"] = std::move(grid);
  j["lp_calls"] = r.lp_calls;
  j["enum_total"] = r.enum_total;
  j["oracle_calls"] = r.oracle_calls;
  if (r.bootstrap_lp) j["bootstrap_lp"] = lp_json(*r.bootstrap_lp);
  if (r.exact_opt) j["exact_opt"] = to_string(*r.exact_opt);
  if (r.ratio) j["ratio"] = to_string(*r.ratio);
  if (include_timing) j["wall_ms"] = r.wall_ms;
  return j.dump(2) + "\n";
}

std::string exact_to_json(const ExactResult& result,
                          const std::vector<std::size_t>& source_index) {
  ojson j;
  j["solution"] = set_json(result.solution);
  if (!source_index.empty()) j["solution_source_ids"] = source_ids(result.solution, source_index);
  j["profit"] = to_string(result.profit);
  j["nodes"] = result.nodes;
  return j.dump(2) + "\n";
}

}  // namespace bmi
