#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spancol/colouring.hpp"
#include "spancol/error.hpp"
#include "spancol/io.hpp"
#include "spancol/realize.hpp"
#include "spancol/steenrod.hpp"

namespace py = pybind11;
using namespace spancol;

namespace {

// Structured values cross the boundary as JSON text; the Python side parses it.
std::string dump(const Json& j) { return j.dump(); }
Json load(const std::string& s) { return Json::parse(s); }

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> es(edges.begin(), edges.end());
  return graph_from_edges(n, es);
}

}  // namespace

PYBIND11_MODULE(_spancol, m) {
  m.doc() = "Span colourings, representing graphs and Steenrod actions on A(n, G)";

  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error(e.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("size", &Graph::size)
      .def("edges", [](const Graph& g) {
        const auto es = g.edges();
        return std::vector<std::pair<int, int>>(es.begin(), es.end());
      })
      .def("adjacent", &Graph::adjacent)
      .def("__repr__", [](const Graph& g) {
        return "<Graph " + std::to_string(g.size()) + " vertices, " + std::to_string(g.edge_count()) + " edges>";
      });

  m.def("cycle_graph", &cycle_graph);
  m.def("complete_graph", &complete_graph);
  m.def("path_graph", &path_graph);
  m.def("chromatic_number", &chromatic_number);
  m.def("clique_number", &clique_number);
  m.def("two_core", [](const Graph& g) {
    auto tc = two_core(g);
    return py::make_tuple(tc.core, tc.kept, tc.removed);
  });
  m.def(
      "count_homomorphisms",
      [](const Graph& g, const Graph& h, int jobs) { return count_homomorphisms(g, h, {.jobs = jobs}); },
      py::arg("g"), py::arg("h"), py::arg("jobs") = 1);

  m.def("_rep_graph", [](int q, int n) {
    const auto a = build_rep_graph(field_of_order(q), n);
    std::vector<std::string> labels;
    for (int v = 0; v < a.graph.size(); ++v) labels.push_back(a.vertex_label(v));
    return py::make_tuple(a.graph, labels);
  });
  m.def("_span_chromatic", [](const Graph& g, int q) {
    const auto s = span_chromatic_number(g, field_of_order(q));
    return py::make_tuple(s.value, s.lower, s.upper, dump(colouring_to_json(s.witness)));
  });
  m.def("_validate", [](const Graph& g, const std::string& c) {
    const auto v = validate_colouring(g, colouring_from_json(load(c)));
    return py::make_tuple(v.valid, v.vertex ? py::cast(*v.vertex) : py::none(), v.reason);
  });
  m.def("_convert", [](const Graph& g, const std::string& c, const std::string& to) {
    return dump(colouring_to_json(convert_colouring(g, colouring_from_json(load(c)), parse_variant(to))));
  });
  m.def("_count_extensions",
        [](const Graph& g, const std::string& c) { return count_span_extensions(g, colouring_from_json(load(c))); });
  m.def("_census", [](int q, int n) {
    const auto c = basis_census(field_of_order(q), n);
    return py::dict(py::arg("basis_count") = c.basis_count, py::arg("basis_count_formula") = c.basis_count_formula,
                    py::arg("class_count") = c.class_count, py::arg("fiber_counts") = c.fiber_counts,
                    py::arg("fiber_formula") = c.fiber_formula, py::arg("basis_match") = c.basis_match,
                    py::arg("fibers_match") = c.fibers_match);
  });
  m.def("hom_obstruction", [](long long q, long long p) {
    const auto o = hom_obstruction(q, p);
    return py::dict(py::arg("divides") = o.divides, py::arg("q_mod_p") = o.q_mod_p, py::arg("applies") = o.applies,
                    py::arg("conclusion") = o.conclusion);
  });

  m.def(
      "_steenrod_build",
      [](const Graph& g, int n, const std::string& c, int d) {
        return dump(action_to_json(action_from_colouring(g, n, colouring_from_json(load(c)), d)));
      },
      py::arg("g"), py::arg("n"), py::arg("colouring"), py::arg("max_degree") = kDefaultTruncation);
  m.def("_steenrod_verify", [](const std::string& a) {
    py::gil_scoped_release release;
    return dump(certificate_to_json(verify_action(action_from_json(load(a)))));
  });
  m.def("_steenrod_extract",
        [](const std::string& a) { return dump(extraction_to_json(extract_colouring(action_from_json(load(a))))); });
  m.def("_steenrod_modp", [](int p, const Graph& g, int n, const std::string& c) {
    return dump(modp_to_json(modp_p1_action(p, g, n, colouring_from_json(load(c)))));
  });

  m.def("_classify_two_x", [](const std::string& k) {
    const auto v = classify_two_x(complex_from_json(load(k)));
    return py::make_tuple(v.realizable, v.failed_condition, v.detail);
  });
  m.def("_join", [](int n, const Graph& g) { return dump(complex_to_json(join_with_simplex(n, g))); });
  m.def("top_bracket", [](const Graph& g) {
    const auto b = top_bracket(g);
    return py::make_tuple(b.s2chi, b.chi);
  });
}
