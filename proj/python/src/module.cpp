#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "sqa/errors.hpp"
#include "sqa/fixtures.hpp"
#include "sqa/impression.hpp"
#include "sqa/mutation.hpp"
#include "sqa/resolution.hpp"
#include "sqa/simples.hpp"
#include "sqa/ypq.hpp"

namespace py = pybind11;
using namespace sqa;

namespace {

ExactPoint to_point(const std::vector<std::string>& coords) {
  if (coords.size() != 4) throw ParseError("a point has four coordinates");
  ExactPoint p;
  for (int k = 0; k < 4; ++k) p[k] = parse_rational(coords[k]);
  return p;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& f : fixtures::torus_fixtures()) out.push_back(f.name);
  return out;
}

TorusQuiver fixture(const std::string& name) {
  for (auto& f : fixtures::torus_fixtures())
    if (f.name == name) return f.quiver;
  throw NotFound("no torus fixture named " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Square quiver algebras on the torus";

  static py::exception<Error> error(m, "SqaError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error(e.what());
    }
  });

  py::class_<TorusQuiver>(m, "TorusQuiver")
      .def_readonly("n", &TorusQuiver::n)
      .def_readonly("m", &TorusQuiver::m)
      .def_readonly("shift", &TorusQuiver::shift)
      .def_property_readonly("num_vertices", &TorusQuiver::num_vertices)
      .def_property_readonly("arrows",
                             [](const TorusQuiver& q) {
                               std::vector<std::tuple<int, int, int, std::string>> out;
                               for (const auto& a : q.arrows) out.emplace_back(a.id, a.tail, a.head, class_name(a.cls));
                               return out;
                             })
      .def("is_square", [](const TorusQuiver& q) { return validate_square(q).ok; })
      .def("violations",
           [](const TorusQuiver& q) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const auto& v : validate_square(q).violations) out.emplace_back(std::string(1, v.condition), v.message);
             return out;
           })
      .def("labels", [](const TorusQuiver& q) { return build_tau(q).label; })
      .def("to_json", &export_json)
      .def("to_dot", &export_dot)
      .def_static("from_json", &import_json)
      .def("isomorphic", [](const TorusQuiver& a, const TorusQuiver& b) { return isomorphic(a.quiver(), b.quiver()); });

  m.def("fixture_names", &fixture_names);
  m.def("fixture", &fixture, py::arg("name"));

  m.def(
      "generate_ypq",
      [](int p, int q, std::optional<std::string> tiles, int shift) {
        std::optional<TileSequence> seq;
        if (tiles) seq = TileSequence{parse_tiles(*tiles), shift};
        return generate_ypq(p, q, seq);
      },
      py::arg("p"), py::arg("q"), py::arg("tiles") = std::nullopt, py::arg("shift") = 0);
  m.def(
      "q_of", [](const std::string& tiles, int shift) { return q_of(TileSequence{parse_tiles(tiles), shift}); },
      py::arg("tiles"), py::arg("shift") = 0);

  m.def(
      "center_generators",
      [](const TorusQuiver& q, int D) { return center_generators(q.quiver(), build_tau(q), D); }, py::arg("quiver"),
      py::arg("max_degree") = 12);
  m.def("ypq_center_formula", [](int p, int q) { return ypq_center_formula(p, q).generators(); });
  m.def("center_matches_formula", &center_matches_formula, py::arg("p"), py::arg("q"), py::arg("max_degree"));

  m.def(
      "bd_exact",
      [](const TorusQuiver& q, int vertex, int D) {
        GradedAlgebra A(square_algebra(q));
        BDComplex C = build_bd_complex(q, vertex);
        return verify_complex(A, C).ok && exactness_report(A, C, D).exact();
      },
      py::arg("quiver"), py::arg("vertex"), py::arg("max_degree") = 8);

  m.def(
      "mutate",
      [](const TorusQuiver& q, int vertex) { return tau_mutate(q, build_tau(q), vertex).first; }, py::arg("quiver"),
      py::arg("vertex"));

  m.def(
      "is_irreducible",
      [](const TorusQuiver& q, const std::vector<std::string>& point) {
        return is_irreducible(large_simple(q, to_point(point)));
      },
      py::arg("quiver"), py::arg("point"));

  m.def("rcharges", [](int p, int q) {
    RChargeTable t = rcharge_table(p, q);
    py::dict d;
    d["x1y1"] = t.x1y1;
    d["x1"] = t.x1;
    d["y1"] = t.y1;
    d["y2"] = t.y2;
    d["x1y2"] = t.x1y2;
    return d;
  });
}
