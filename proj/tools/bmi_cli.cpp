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

// Command-line front end: solve, exact, verify, gen, bench.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bmi/budget_lp.hpp"
#include "bmi/eptas.hpp"
#include "bmi/errors.hpp"
#include "bmi/exact_oracle.hpp"
#include "bmi/instance_io.hpp"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitScaleCap = 3;
constexpr int kExitInvariant = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bmi::ValidationError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw bmi::ValidationError(path, "cannot write file");
  out << text;
}

bmi::ParsedInstance load(const std::string& path) {
  bmi::ParsedInstance parsed = bmi::parse_instance(read_file(path));
  for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
  return parsed;
}

bmi::Rational parse_eps(const std::string& text) {
  try {
    return bmi::parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw bmi::ValidationError("--eps", e.what());
  }
}

int cmd_solve(const std::string& path, const std::string& eps_text, bool exact,
              unsigned jobs, const std::string& report_path) {
  bmi::ParsedInstance parsed = load(path);
  bmi::RunReport report = bmi::approximate(parsed.instance, parse_eps(eps_text),
                                           bmi::RunOptions{jobs});
  if (exact) {
    bmi::ExactResult opt = bmi::brute_force_opt(parsed.instance);
    report.exact_opt = opt.profit;
    report.ratio = sgn(opt.profit) == 0 ? bmi::Rational(1) : report.profit / opt.profit;
  }
  const std::string json = bmi::report_to_json(report, parsed.source_index);
  if (report_path.empty()) {
    std::cout << json;
  } else {
    write_file(report_path, json);
    std::cout << "profit " << bmi::to_string(report.profit) << " with "
              << report.solution.size() << " elements; report written to "
              << report_path << "\n";
  }
  return kExitOk;
}

int cmd_exact(const std::string& path) {
  bmi::ParsedInstance parsed = load(path);
  std::cout << bmi::exact_to_json(bmi::brute_force_opt(parsed.instance),
                                  parsed.source_index);
  return kExitOk;
}

struct Check {
  std::string name;
  std::string status;  // pass | fail | skipped
  std::string detail;
};

int cmd_verify(const std::string& path, const std::string& eps_text) {
  using namespace bmi;
  ParsedInstance parsed = load(path);
  const BmiInstance& k = parsed.instance;
  const Rational target = parse_eps(eps_text);
  const EpsParam eps = EpsParam::for_target(target);
  std::vector<Check> checks;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok ? "pass" : "fail", std::move(detail)});
  };
  auto skip = [&](std::string name, std::string why) {
    checks.push_back({std::move(name), "skipped", std::move(why)});
  };

  if (k.size() <= kDefaultAxiomLimit) {
    AxiomReport axioms = check_axioms(k.matroid());
    add("matroid_axioms", axioms.ok(), axioms.message);
  } else {
    skip("matroid_axioms", "ground set larger than " + std::to_string(kDefaultAxiomLimit));
  }

  RunReport report = approximate(k, target);
  bool enum_ok = true;
  for (const auto& g : report.grid) {
    enum_ok = enum_ok && BigInt(static_cast<unsigned long>(g.enum_count)) <= g.enum_bound;
  }
  add("enumeration_bound", enum_ok);
  add("solution_feasible", k.is_solution(report.solution) &&
                               k.profit_of(report.solution) == report.profit);

  // LP structure at every grid point with F = ∅.
  bool lp_ok = true;
  std::string lp_detail;
  for (const auto& g : report.grid) {
    LpOutcome out = solve_lp(k, {}, eps.value(), g.alpha);
    MatroidHandle poly = restrict_to(k.matroid(), out.point.domain);
    if (out.fractional_support.size() > 2 || !separate(poly, out.point).inside) {
      lp_ok = false;
      lp_detail = "alpha=" + to_string(g.alpha);
    }
  }
  add("lp_basic_structure", lp_ok, lp_detail);

  if (k.size() <= kBruteForceLimit) {
    ExactResult opt = brute_force_opt(k);
    add("approximation_guarantee", report.profit >= (1 - target) * opt.profit,
        "profit " + to_string(report.profit) + " opt " + to_string(opt.profit));
    if (k.size() <= kRepresentativeCheckLimit && sgn(opt.profit) > 0) {
      bool rep_ok = true;
      std::string rep_detail;
      for (const auto& g : report.grid) {
        if (g.alpha * 2 < opt.profit || g.alpha > opt.profit) continue;
        RepresentativeSet rep = find_rep(k, eps, g.alpha);
        for (const auto& slice : rep.slices) {
          rep_ok = rep_ok && BigInt(static_cast<unsigned long>(slice.size())) <= eps.q();
        }
        RepresentativeCheck rc =
            verify_representative(k, k.matroid(), eps, rep.elements, opt.profit);
        if (!rc.ok) {
          rep_ok = false;
          rep_detail = "alpha=" + to_string(g.alpha) + " witness " + format_set(rc.witness);
        }
      }
      add("representative_set", rep_ok, rep_detail);
    } else {
      skip("representative_set", "instance too large or OPT = 0");
    }
  } else {
    skip("approximation_guarantee", "instance too large for the exact oracle");
    skip("representative_set", "instance too large for the exact oracle");
  }

  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  bool all_ok = true;
  for (const auto& c : checks) {
    out.push_back({{"check", c.name}, {"status", c.status}, {"detail", c.detail}});
    all_ok = all_ok && c.status != "fail";
  }
  std::cout << out.dump(2) << "\n";
  return all_ok ? kExitOk : kExitInvariant;
}

int cmd_gen(const std::string& family, std::size_t n, std::uint64_t seed,
            const std::string& out_path) {
  bmi::GenSpec spec;
  spec.family = family;
  spec.n = n;
  spec.seed = seed;
  const std::string text = bmi::serialize_instance(bmi::generate_instance(spec));
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
  return kExitOk;
}

int cmd_bench(const std::string& dir, const std::string& eps_text,
              const std::string& csv_path) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  const bmi::Rational eps = parse_eps(eps_text);

  std::ostringstream csv;
  csv << "instance,n,eps,profit,opt,ratio,lp_calls,enum_count,oracle_calls,wall_ms\n";
  bool bound_ok = true;
  for (const auto& file : files) {
    bmi::ParsedInstance parsed = load(file.string());
    const bmi::BmiInstance& k = parsed.instance;
    bmi::RunReport r = bmi::approximate(k, eps);
    for (const auto& g : r.grid) {
      if (bmi::BigInt(static_cast<unsigned long>(g.enum_count)) > g.enum_bound) {
        bound_ok = false;
        std::cerr << file.filename().string() << ": enumeration count "
                  << g.enum_count << " exceeds bound " << g.enum_bound.get_str()
                  << " at alpha " << bmi::to_string(g.alpha) << "\n";
      }
    }
    std::string opt, ratio;
    if (k.size() <= bmi::kBruteForceLimit) {
      bmi::Rational o = bmi::brute_force_opt(k).profit;
      opt = bmi::to_string(o);
      ratio = sgn(o) == 0 ? "1" : bmi::to_string(r.profit / o);
    }
    csv << file.filename().string() << ',' << k.size() << ',' << eps_text << ','
        << bmi::to_string(r.profit) << ',' << opt << ',' << ratio << ','
        << r.lp_calls << ',' << r.enum_total << ',' << r.oracle_calls << ','
        << r.wall_ms << "\n";
  }
  write_file(csv_path, csv.str());
  return bound_ok ? kExitOk : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Budgeted matroid independent set solver"};
  app.require_subcommand(1);

  std::string instance, eps = "1/3", report, family = "uniform", out, dir, csv;
  bool exact = false;
  unsigned jobs = 1;
  std::size_t n = 10;
  std::uint64_t seed = 1;

  auto* solve = app.add_subcommand("solve", "Approximate the optimum");
  solve->add_option("--instance", instance, "Instance JSON file")->required();
  solve->add_option("--eps", eps, "Target accuracy a/b, 0 < eps <= 1/2")->required();
  solve->add_flag("--exact", exact, "Also compute the exact optimum and ratio");
  solve->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  solve->add_option("--report", report, "Write the JSON report here");

  auto* exact_cmd = app.add_subcommand("exact", "Exact optimum by brute force");
  exact_cmd->add_option("--instance", instance, "Instance JSON file")->required();

  auto* verify = app.add_subcommand("verify", "Run the property checks on an instance");
  verify->add_option("--instance", instance, "Instance JSON file")->required();
  verify->add_option("--eps", eps, "Target accuracy a/b")->required();

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--family", family,
                  "uniform|partition|graphic|linear|explicit|free")->required();
  gen->add_option("--n", n, "Element count")->required();
  gen->add_option("--seed", seed, "Seed")->required();
  gen->add_option("-o", out, "Output file (stdout if omitted)");

  auto* bench = app.add_subcommand("bench", "Solve every instance in a directory");
  bench->add_option("--dir", dir, "Directory of *.json instances")->required();
  bench->add_option("--eps", eps, "Target accuracy a/b")->required();
  bench->add_option("--csv", csv, "CSV output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*solve) return cmd_solve(instance, eps, exact, jobs, report);
    if (*exact_cmd) return cmd_exact(instance);
    if (*verify) return cmd_verify(instance, eps);
    if (*gen) return cmd_gen(family, n, seed, out);
    if (*bench) return cmd_bench(dir, eps, csv);
  } catch (const bmi::ScaleCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitScaleCap;
  } catch (const bmi::InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const bmi::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
