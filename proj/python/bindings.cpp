#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pivotminor/constructions.hpp"
#include "pivotminor/generators.hpp"
#include "pivotminor/serialize.hpp"

namespace py = pybind11;
using namespace pivotminor;

// Structured results cross the boundary as JSON text; the Python package
// turns them into dicts.
PYBIND11_MODULE(_pivotminor, m) {
  // Translators run newest first, so the base class goes in first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def_static("from_edges", [](int n, const std::vector<Edge>& e) { return Graph::from_edges(n, e); })
      .def_static("from_graph6", [](const std::string& s) { return graph6_decode(s); })
      .def_property_readonly("n", &Graph::n)
      .def("adjacent", &Graph::adjacent)
      .def("neighbors", &Graph::neighbors)
      .def("degree", &Graph::degree)
      .def("max_degree", &Graph::max_degree)
      .def("edges", &Graph::edges)
      .def("edge_count", &Graph::edge_count)
      .def("add_edge", &Graph::add_edge)
      .def("remove_edge", &Graph::remove_edge)
      .def("graph6", [](const Graph& g) { return graph6_encode(g); })
      .def("fingerprint", [](const Graph& g) { return fingerprint(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "<Graph n=" + std::to_string(g.n()) + " " + graph6_encode(g) + ">"; });

  m.def("complement", &complement);
  m.def("pivot", &pivot, py::arg("g"), py::arg("u"), py::arg("v"));
  m.def("canonical_form", [](const Graph& g) { return py::bytes(canonical_form(g)); });
  m.def("is_induced_cycle", [](const Graph& g, const VertexSet& order) { return is_induced_cycle(g, order); });

  m.def(
      "has_pivot_minor",
      [](const Graph& g, int k, std::size_t max_orbit, int threads) -> py::object {
        Witness w;
        if (!has_pivot_minor(g, k, OrbitOptions{10, max_orbit, threads}, &w)) return py::none();
        return py::str(json(w).dump());
      },
      py::arg("g"), py::arg("k"), py::arg("max_orbit") = 1'000'000, py::arg("threads") = 1,
      "Witness JSON if g has a C_k pivot-minor, else None.");
  m.def("cycle_reduce", [](const Graph& g, const VertexSet& order, int k) { return json(cycle_reduce(g, order, k)).dump(); });
  m.def("antihole_extract", [](const Graph& g, const VertexSet& order, int k) { return json(antihole_extract(g, order, k)).dump(); });
  m.def("skeleton", [](const Graph& g, Vertex root) { return json(dominating_skeleton(g, root)).dump(); },
        py::arg("g"), py::arg("root") = 0);
  m.def("pipeline", [](const Graph& g, int k) { return json(strong_eh_pipeline(g, k)).dump(); }, py::arg("g"), py::arg("k"));
  m.def(
      "verify",
      [](const Graph& g, const std::string& certificate, int min_hole) {
        const Verdict v = verify_certificate(g, parse_json<Certificate>(certificate, "certificate"), min_hole);
        return std::make_pair(v.ok, v.diagnostic);
      },
      py::arg("g"), py::arg("certificate"), py::arg("min_hole") = 5);

  m.def("gnp", &gen::gnp, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("caterpillar", &gen::caterpillar, py::arg("n"), py::arg("max_leaf"), py::arg("seed"));
  m.def("long_cycle", &gen::long_cycle);
  m.def("anti_hole", &gen::anti_hole);
  m.def("fan", &gen::fan);
  m.def("bounded_degree", &gen::bounded_degree, py::arg("n"), py::arg("d"), py::arg("seed"));
}
