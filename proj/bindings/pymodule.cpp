// Copyright 2026 The tracemaps authors
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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <sstream>
#include <string>

#include "tracemaps/errors.hpp"
#include "tracemaps/fricke.hpp"
#include "tracemaps/orbit.hpp"
#include "tracemaps/report.hpp"
#include "tracemaps/word.hpp"

namespace py = pybind11;
using namespace tracemaps;

namespace {

Rat rat_from_string(const std::string& text) {
  try {
    Rat r(text);
    if (r.get_den() == 0) throw ParseError("zero denominator: " + text, 0);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("invalid rational: " + text, 0);
  }
}

std::array<Rat, 3> start_from_strings(const std::array<std::string, 3>& s) {
  return {rat_from_string(s[0]), rat_from_string(s[1]), rat_from_string(s[2])};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Trace maps of two-letter substitutions: exact polynomial maps, the "
      "Fricke-Vogt invariant, symmetry and reversing-symmetry groups.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<VerificationError>(m, "VerificationError",
                                            PyExc_RuntimeError);

  py::class_<TraceMap>(m, "TraceMap")
      .def_static(
          "from_matrix",
          [](const std::string& text) {
            return TraceMap::from_matrix(Mat2::parse(text));
          },
          py::arg("text"), "Build the trace map of a unimodular matrix.")
      .def_static(
          "from_substitution",
          [](const std::string& text) {
            return TraceMap::from_substitution(Substitution::parse(text));
          },
          py::arg("text"),
          "Build the trace map of an invertible two-letter substitution.")
      .def_property_readonly(
          "map", [](const TraceMap& f) { return f.map().str(); },
          "Polynomial components as a string \"(p, q, r)\".")
      .def_property_readonly(
          "matrix", [](const TraceMap& f) { return f.matrix().str(); },
          "Representative matrix as \"a,b;c,d\".")
      .def_property_readonly("provenance", &TraceMap::provenance)
      .def_property_readonly(
          "degree", [](const TraceMap& f) { return f.map().degree(); })
      .def("inverse", &TraceMap::inverse)
      .def("pow", &TraceMap::pow, py::arg("n"))
      .def(
          "__call__",
          [](const TraceMap& f, double x, double y, double z) {
            std::array<double, 3> p = f.map().eval_double({x, y, z});
            return py::make_tuple(p[0], p[1], p[2]);
          },
          py::arg("x"), py::arg("y"), py::arg("z"))
      .def(
          "evaluate_exact",
          [](const TraceMap& f, const std::string& x, const std::string& y,
             const std::string& z) {
            std::array<Rat, 3> p = f.map().eval(start_from_strings({x, y, z}));
            return py::make_tuple(p[0].get_str(), p[1].get_str(),
                                  p[2].get_str());
          },
          py::arg("x"), py::arg("y"), py::arg("z"),
          "Apply the map to exact rational coordinates given as strings.")
      .def("__eq__",
           [](const TraceMap& a, const TraceMap& b) { return a == b; })
      .def("__repr__", [](const TraceMap& f) {
        return "TraceMap(" + f.map().str() + ")";
      });

  m.def(
      "compose",
      [](const TraceMap& outer, const TraceMap& inner) {
        return compose(outer, inner);
      },
      py::arg("outer"), py::arg("inner"));

  m.def(
      "half_trace",
      [](const std::string& word) {
        return half_trace(Word::parse(word)).str();
      },
      py::arg("word"),
      "Half-trace polynomial of a word in the free group on a, b.");

  m.def(
      "invariant",
      [](const std::string& x, const std::string& y, const std::string& z) {
        std::array<Rat, 3> p = start_from_strings({x, y, z});
        return fricke_vogt_invariant().eval(p[0], p[1], p[2]).get_str();
      },
      py::arg("x"), py::arg("y"), py::arg("z"),
      "Fricke-Vogt invariant x^2 + y^2 + z^2 - 2xyz - 1 at a rational point.");

  m.def(
      "classify_matrix",
      [](const std::string& text) {
        return render_report_json(report_for_matrix(text));
      },
      py::arg("text"),
      "Full classification report for a matrix input as a JSON string.");

  m.def(
      "classify_substitution",
      [](const std::string& text) {
        return render_report_json(report_for_substitution(text));
      },
      py::arg("text"),
      "Full classification report for a substitution input as a JSON string.");

  m.def(
      "orbit_csv",
      [](const std::string& matrix, const std::string& x, const std::string& y,
         const std::string& z, long steps, long max_bits, bool exact) {
        TraceMap f = TraceMap::from_matrix(Mat2::parse(matrix));
        std::array<Rat, 3> start = start_from_strings({x, y, z});
        std::ostringstream out;
        if (exact) {
          write_orbit_csv(out, iterate_orbit(f, start, steps, max_bits));
        } else {
          std::array<double, 3> fstart{start[0].get_d(), start[1].get_d(),
                                       start[2].get_d()};
          write_orbit_csv(out, iterate_orbit(f, fstart, steps));
        }
        return out.str();
      },
      py::arg("matrix"), py::arg("x"), py::arg("y"), py::arg("z"),
      py::arg("steps") = 10, py::arg("max_bits") = 16384,
      py::arg("exact") = true,
      "Iterate the trace map of a matrix and render the orbit as CSV.");
}
