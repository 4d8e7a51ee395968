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

// Python bindings. Rationals cross the boundary as fractions.Fraction;
// anything str() turns into "a", "a/b" or a decimal is accepted on input.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "bmi/budget_lp.hpp"
#include "bmi/eptas.hpp"
#include "bmi/errors.hpp"
#include "bmi/exact_oracle.hpp"
#include "bmi/instance_io.hpp"

namespace py = pybind11;

namespace {

bmi::Rational to_rational(const py::handle& v) {
  try {
    return bmi::parse_rational(py::str(v).cast<std::string>());
  } catch (const std::invalid_argument& e) {
    throw py::value_error(e.what());
  }
}

py::object to_fraction(const bmi::Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(bmi::to_string(r));
}

py::list fractions(const std::vector<bmi::Rational>& v) {
  py::list out;
  for (const auto& r : v) out.append(to_fraction(r));
  return out;
}

py::object json_loads(const std::string& text) {
  return py::module_::import("json").attr("loads")(text);
}

struct PyInstance {
  bmi::BmiInstance instance;
  std::vector<std::size_t> source_index;
  std::vector<std::string> warnings;
};

PyInstance parse(const std::string& text) {
  bmi::ParsedInstance p = bmi::parse_instance(text);
  return {std::move(p.instance), std::move(p.source_index), std::move(p.warnings)};
}

PyInstance generate(const std::string& family, std::size_t n, std::uint64_t seed) {
  bmi::GenSpec g;
  g.family = family;
  g.n = n;
  g.seed = seed;
  bmi::BmiInstance k = bmi::generate_instance(g);
  std::vector<std::size_t> index(k.size());
  for (std::size_t i = 0; i < index.size(); ++i) index[i] = i;
  return {std::move(k), std::move(index), {}};
}

bmi::ElementSet to_set(const std::vector<bmi::ElementId>& v) {
  return bmi::make_set(v);
}

py::dict lp_dict(const bmi::LpOutcome& out) {
  py::dict point;
  for (std::size_t i = 0; i < out.point.domain.size(); ++i) {
    point[py::int_(out.point.domain[i])] = to_fraction(out.point.values[i]);
  }
  py::dict d;
  d["point"] = point;
  d["objective"] = to_fraction(out.objective);
  d["fractional_support"] = out.fractional_support;
  d["rounds"] = out.rounds;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Budgeted matroid independent set: EPTAS and exact oracles";

  auto base = py::register_exception<bmi::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<bmi::ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<bmi::PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<bmi::DomainError>(m, "DomainError", base.ptr());
  py::register_exception<bmi::ScaleCapError>(m, "ScaleCapError", base.ptr());
  py::register_exception<bmi::InvariantViolation>(m, "InvariantViolation", base.ptr());

  py::class_<PyInstance>(m, "Instance")
      .def_static("from_json", &parse, py::arg("text"),
                  "Parse an instance document. Dependent singletons are dropped "
                  "and listed in `warnings`.")
      .def_static("generate", &generate, py::arg("family"), py::arg("n"),
                  py::arg("seed"))
      .def("to_json", [](const PyInstance& p) { return bmi::serialize_instance(p.instance); })
      .def_property_readonly("size", [](const PyInstance& p) { return p.instance.size(); })
      .def_property_readonly("budget",
                             [](const PyInstance& p) { return to_fraction(p.instance.budget()); })
      .def_property_readonly("costs",
                             [](const PyInstance& p) { return fractions(p.instance.costs()); })
      .def_property_readonly("profits",
                             [](const PyInstance& p) { return fractions(p.instance.profits()); })
      .def_property_readonly("family",
                             [](const PyInstance& p) { return bmi::to_string(p.instance.spec().kind()); })
      .def_readonly("source_index", &PyInstance::source_index)
      .def_readonly("warnings", &PyInstance::warnings)
      .def("is_independent",
           [](const PyInstance& p, const std::vector<bmi::ElementId>& s) {
             return bmi::is_independent(p.instance.matroid(), s);
           })
      .def("rank",
           [](const PyInstance& p, const std::vector<bmi::ElementId>& s) {
             return bmi::rank(p.instance.matroid(), s);
           })
      .def("is_solution",
           [](const PyInstance& p, const std::vector<bmi::ElementId>& s) {
             return p.instance.is_solution(to_set(s));
           })
      .def("profit_of", [](const PyInstance& p, const std::vector<bmi::ElementId>& s) {
        return to_fraction(p.instance.profit_of(to_set(s)));
      });

  m.def(
      "approximate",
      [](const PyInstance& p, const py::object& eps, unsigned jobs, bool timing) {
        const bmi::Rational target = to_rational(eps);
        bmi::RunReport r;
        {
          py::gil_scoped_release release;
          r = bmi::approximate(p.instance, target, bmi::RunOptions{jobs});
        }
        return json_loads(bmi::report_to_json(r, p.source_index, timing));
      },
      py::arg("instance"), py::arg("eps"), py::arg("jobs") = 1,
      py::arg("timing") = true,
      "Run the approximation scheme; returns the JSON report as a dict.");

  m.def(
      "brute_force",
      [](const PyInstance& p) {
        bmi::ExactResult r = bmi::brute_force_opt(p.instance);
        return py::make_tuple(r.solution, to_fraction(r.profit));
      },
      py::arg("instance"), "Exact optimum as (solution, profit).");

  m.def(
      "knapsack_dp",
      [](const PyInstance& p) { return to_fraction(bmi::knapsack_dp(p.instance)); },
      py::arg("instance"));

  m.def(
      "solve_lp",
      [](const PyInstance& p, const std::vector<bmi::ElementId>& f,
         const py::object& eps, const py::object& alpha) {
        return lp_dict(bmi::solve_lp(p.instance, to_set(f), to_rational(eps),
                                     to_rational(alpha)));
      },
      py::arg("instance"), py::arg("fixed"), py::arg("eps"), py::arg("alpha"));

  m.def(
      "lp_upper_bound",
      [](const PyInstance& p) {
        bmi::ProfitBounds b = bmi::lp_upper_bound(p.instance);
        return py::make_tuple(to_fraction(b.lower), to_fraction(b.upper));
      },
      py::arg("instance"), "(lower, upper) bracket on the optimum.");

  m.def(
      "find_rep",
      [](const PyInstance& p, unsigned long reciprocal, const py::object& alpha) {
        bmi::RepresentativeSet r =
            bmi::find_rep(p.instance, bmi::EpsParam(reciprocal), to_rational(alpha));
        py::dict d;
        d["elements"] = r.elements;
        d["slices"] = r.slices;
        d["classes"] = r.classes;
        return d;
      },
      py::arg("instance"), py::arg("eps_reciprocal"), py::arg("alpha"));

  m.def(
      "check_axioms",
      [](const PyInstance& p) { return bmi::check_axioms(p.instance.matroid()).ok(); },
      py::arg("instance"));
}
