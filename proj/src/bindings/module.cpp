#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "listdist/dispatch.hpp"
#include "listdist/graph6.hpp"
#include "listdist/json_io.hpp"
#include "listdist/oracle.hpp"

namespace py = pybind11;
using namespace listdist;

namespace {

ListAssignment lists_from_py(const Graph& g, int universe,
                             const std::vector<std::vector<int>>& lists) {
  return make_list_assignment(g, universe, lists);
}

py::dict classification_dict(const GraphClass& cls) {
  py::dict d;
  d["class"] = std::string(to_string(cls.tag));
  d["delta"] = cls.delta;
  d["n"] = cls.n;
  try {
    auto req = required_list_size(cls);
    d["required_list_size"] = req.k;
    d["exceptional"] = req.exceptional;
  } catch (const Error&) {
    d["required_list_size"] = py::none();
    d["exceptional"] = true;
  }
  return d;
}

std::vector<std::vector<int>> colouring_rows(const Graph& g, const EdgeColouring& c) {
  std::vector<std::vector<int>> rows;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (c.coloured(e)) rows.push_back({g.edge(e).u, g.edge(e).v, c.colour[e]});
  return rows;
}

EdgeColouring colouring_from_rows(const Graph& g, const std::vector<std::vector<int>>& rows) {
  EdgeColouring c(g.edge_count());
  for (const auto& r : rows) {
    if (r.size() != 3) fail(ErrorCode::InvalidInput, "colouring rows are [u, v, colour]");
    EdgeId e = g.edge_id(r[0], r[1]);
    if (e < 0) fail(ErrorCode::InvalidInput, "colouring names a missing edge");
    c.colour[e] = r[2];
  }
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "distinguishing edge colourings from per-edge colour lists";

  py::register_exception<Error>(m, "ListdistError");

  py::class_<Graph>(m, "Graph")
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def("degree", &Graph::degree)
      .def("max_degree", &Graph::max_degree)
      .def("neighbours", [](const Graph& g, int v) { return g.neighbours(v); })
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<int, int>> out;
             for (const Edge& e : g.edges()) out.push_back({e.u, e.v});
             return out;
           })
      .def("graph6", &encode_graph6)
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.vertex_count()) +
               " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("parse_edge_list", &parse_edge_list, py::arg("text"));
  m.def("parse_graph6", &parse_graph6, py::arg("line"));
  m.def("graph_from_edges", [](int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Edge> es;
    for (auto [u, v] : edges) es.push_back(make_edge(u, v));
    return Graph::from_edges(n, std::move(es));
  });

  m.def("analyze", [](const Graph& g) {
    auto s = analyze(g);
    py::dict d;
    d["connected"] = s.connected;
    d["max_degree"] = s.max_degree;
    d["is_tree"] = s.is_tree;
    d["degree_histogram"] = s.degree_histogram;
    return d;
  });

  m.def("classify", [](const Graph& g) { return classification_dict(classify(g)); });

  m.def("automorphisms",
        [](const Graph& g, int cap) { return automorphisms(g, cap).elements; },
        py::arg("g"), py::arg("cap") = kDefaultAutCap);

  m.def("is_distinguishing",
        [](const Graph& g, const std::vector<std::vector<int>>& rows, int cap) {
          auto c = colouring_from_rows(g, rows);
          return is_distinguishing(g, automorphisms(g, cap), c);
        },
        py::arg("g"), py::arg("colouring"), py::arg("cap") = kDefaultAutCap);

  m.def("colour",
        [](const Graph& g, int universe, const std::vector<std::vector<int>>& lists,
           bool debug_invariants) {
          ColourOptions opt;
          opt.debug_invariants = debug_invariants;
          auto res = colour_auto(g, lists_from_py(g, universe, lists), opt);
          py::dict d;
          d["engine"] = res.engine;
          d["verified"] = res.verified;
          d["classification"] = classification_dict(res.cls);
          d["colouring"] = colouring_rows(g, res.colouring);
          return d;
        },
        py::arg("g"), py::arg("universe"), py::arg("lists"),
        py::arg("debug_invariants") = false);

  m.def("generate_lists",
        [](const Graph& g, int k, int universe, std::uint64_t seed, const std::string& mode) {
          ListMode lm = ListMode::Random;
          if (mode == "identical") lm = ListMode::Identical;
          else if (mode == "one-off-identical") lm = ListMode::OneOffIdentical;
          else if (mode != "random") fail(ErrorCode::InvalidInput, "unknown list mode");
          return generate_lists(g, k, universe, seed, lm).lists;
        },
        py::arg("g"), py::arg("k"), py::arg("universe"), py::arg("seed"),
        py::arg("mode") = "random");

  m.def("feasible_from_lists",
        [](const Graph& g, int universe, const std::vector<std::vector<int>>& lists,
           std::uint64_t budget) {
          auto group = automorphisms(g);
          auto rep =
              exists_distinguishing_from_lists(g, group, lists_from_py(g, universe, lists), budget);
          py::dict d;
          d["feasible"] = rep.feasible;
          d["search_nodes"] = rep.colourings_examined;
          if (rep.witness) d["witness"] = colouring_rows(g, *rep.witness);
          return d;
        },
        py::arg("g"), py::arg("universe"), py::arg("lists"), py::arg("budget") = kDefaultBudget);

  m.def("distinguishing_index",
        [](const Graph& g, int k_max, std::uint64_t budget) {
          auto group = automorphisms(g);
          return distinguishing_index(g, group, k_max > 0 ? k_max : g.max_degree() + 1, budget);
        },
        py::arg("g"), py::arg("k_max") = 0, py::arg("budget") = kDefaultBudget);

  m.def("probe_conjecture",
        [](const Graph& g, int universe, std::uint64_t budget) {
          auto probe = probe_conjecture(g, universe, budget);
          py::dict d;
          d["dprime"] = probe.dprime;
          d["list_feasible_at_dprime"] = probe.list_feasible_at_dprime;
          d["known_exceptional"] = probe.known_exceptional;
          d["assignments_tested"] = probe.assignments_tested;
          d["counterexample_lists"] = probe.counterexample_lists;
          return d;
        },
        py::arg("g"), py::arg("universe") = 3, py::arg("budget") = kDefaultBudget);

  m.def("dot", [](const Graph& g, const std::vector<std::vector<int>>& rows) {
    return dot_export(g, colouring_from_rows(g, rows));
  });
}
