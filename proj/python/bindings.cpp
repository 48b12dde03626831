#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "deltak/enumerate.hpp"
#include "deltak/errors.hpp"
#include "deltak/json_io.hpp"
#include "deltak/localization.hpp"
#include "deltak/polytope_audit.hpp"
#include "deltak/realization.hpp"

namespace py = pybind11;
using namespace deltak;

namespace {

std::vector<std::string> coeff_strings(const UniPoly& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

std::vector<Subset> to_family(const std::vector<std::vector<int>>& sets) {
  std::vector<Subset> f;
  for (const auto& s : sets) f.push_back(subset_from_elements(s));
  return f;
}

std::vector<std::vector<int>> from_family(const DeltaMatroid& d) {
  std::vector<std::vector<int>> out;
  for (Subset s : d.feasible()) out.push_back(subset_elements(s));
  return out;
}

EngineOptions engine(int jobs, int directions, std::uint64_t seed) {
  EngineOptions e;
  e.jobs = jobs;
  e.directions = directions;
  e.seed = seed;
  return e;
}

}  // namespace

PYBIND11_MODULE(_deltak, m) {
  m.doc() = "Delta-matroid invariants by torus localization (exact arithmetic)";

  py::register_exception<InvalidInputError>(m, "InvalidInputError", PyExc_ValueError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ArithmeticError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<DeltaMatroid>(m, "DeltaMatroid")
      .def(py::init([](int n, const std::vector<std::vector<int>>& feasible) {
             return DeltaMatroid::create(n, to_family(feasible));
           }),
           py::arg("n"), py::arg("feasible"))
      .def_property_readonly("n", &DeltaMatroid::n)
      .def_property_readonly("feasible", &from_family)
      .def("lattice_distance",
           [](const DeltaMatroid& d, const std::vector<int>& s) { return d.lattice_distance(subset_from_elements(s)); })
      .def("to_json", [](const DeltaMatroid& d) { return to_json(d).dump(); })
      .def("__len__", &DeltaMatroid::size)
      .def("__eq__", [](const DeltaMatroid& a, const DeltaMatroid& b) { return a == b; })
      .def("__repr__", [](const DeltaMatroid& d) { return "DeltaMatroid(" + d.to_string() + ")"; });

  m.def("validate", [](int n, const std::vector<std::vector<int>>& feasible) {
    const ValidationResult r = validate(n, to_family(feasible));
    py::object edge = py::none();
    if (r.bad_edge) edge = py::make_tuple(subset_elements(r.bad_edge->first), subset_elements(r.bad_edge->second));
    return py::make_tuple(r.valid, edge);
  });
  m.def("from_json", [](const std::string& text) { return parse_input(Json::parse(text)).dm; },
        "Parse a family, matrix or graph JSON document.");
  m.def("from_graph", [](int n, const std::vector<std::pair<int, int>>& edges) { return from_graph(n, edges).first; });
  m.def("all_delta_matroids", [](int n) { return all_delta_matroids(n); });
  m.def("canonical_form", &canonical_form);

  m.def("_interlace", [](const DeltaMatroid& d) { return coeff_strings(d.interlace()); });
  m.def("_r_poly", [](const DeltaMatroid& d, const std::string& mode, int jobs, int directions, std::uint64_t seed) {
    const EngineOptions e = engine(jobs, directions, seed);
    py::gil_scoped_release release;
    if (mode == "y") return coeff_strings(r_poly_y(d, e));
    if (mode == "orbit") return coeff_strings(r_poly_orbit(d, e));
    throw InvalidInputError("mode must be 'y' or 'orbit'");
  });
  m.def("_euler_char", [](const DeltaMatroid& d, bool doubled, int jobs, int directions, std::uint64_t seed) {
    const EngineOptions e = engine(jobs, directions, seed);
    py::gil_scoped_release release;
    return to_string(euler_char_X(k_polytope(d, doubled), e));
  });
  m.def("_interlace_via_integral", [](const DeltaMatroid& d, int jobs, int directions, std::uint64_t seed) {
    const EngineOptions e = engine(jobs, directions, seed);
    py::gil_scoped_release release;
    return coeff_strings(interlace_via_integral(d, e));
  });
  m.def("is_very_ample", [](const DeltaMatroid& d, const std::string& lattice) {
    LatticeKind kind;
    if (lattice == "standard") kind = LatticeKind::Standard;
    else if (lattice == "vertex") kind = LatticeKind::VertexSpan;
    else throw InvalidInputError("lattice must be 'standard' or 'vertex'");
    const VeryAmpleReport r = is_very_ample(d, kind);
    std::vector<std::pair<std::vector<int>, IntVec>> gaps;
    for (const auto& g : r.gaps) gaps.emplace_back(subset_elements(g.vertex), g.point);
    return py::make_tuple(r.very_ample, gaps);
  }, py::arg("d"), py::arg("lattice") = "standard");
  m.def("member", [](const IntVec& x, const std::vector<IntVec>& gens) { return member(x, gens); });

  m.attr("DEFAULT_SEED") = EngineOptions{}.seed;
}
