#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "clawlab/catalog.hpp"
#include "clawlab/choosability.hpp"
#include "clawlab/graph.hpp"
#include "clawlab/solvers.hpp"
#include "clawlab/structure.hpp"
#include "clawlab/verifier.hpp"

namespace py = pybind11;
using namespace clawlab;

namespace {

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["choosable"] = v.choosable;
  d["pot_cap"] = v.pot_cap;
  d["nodes"] = v.stats.nodes;
  if (v.witness) {
    py::list lists;
    for (ColorSet c : v.witness->lists) {
      py::list colors;
      for (int x = 0; x < 32; ++x)
        if ((c >> x) & 1u) colors.append(x);
      lists.append(colors);
    }
    d["witness"] = lists;
  } else {
    d["witness"] = py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact choosability, structure recognition and lemma checks for small graphs";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<Edge>& edges) { return make_graph(n, edges); }), py::arg("n"),
           py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("order", &Graph::order)
      .def("edges", &Graph::edges)
      .def("degree", &Graph::degree)
      .def("adjacent", &Graph::adjacent)
      .def("max_degree", &Graph::max_degree)
      .def("min_degree", &Graph::min_degree)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph(" + graph_signature(g) + ")"; });

  m.def("catalog", [](const std::string& ref) { return resolve_catalog_ref(ref.starts_with("@") ? ref : "@" + ref).graph; },
        py::arg("ref"), "graph for a catalog name such as 'D8' or '@G_t:5'");
  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const auto& e : catalog_list()) names.push_back(e.name);
    return names;
  });
  m.def("join", &join);
  m.def("complement", &complement);
  m.def("line_graph", [](int n, const std::vector<std::tuple<int, int, int>>& edges) {
    Multigraph mg(n);
    for (auto [x, y, k] : edges) mg.add_edge(x, y, k);
    return line_graph(mg);
  }, py::arg("n"), py::arg("edges"), "edges are (x, y, multiplicity)");

  m.def("is_f_choosable",
        [](const Graph& g, const std::string& f, int workers, std::uint64_t node_budget, bool exhaustive) {
          ChooseOptions o;
          o.workers = workers;
          o.max_nodes = node_budget;
          o.exhaustive = exhaustive;
          Verdict v;
          {
            py::gil_scoped_release release;
            v = is_f_choosable(g, FSpec::parse(f), o);
          }
          return verdict_dict(v);
        },
        py::arg("graph"), py::arg("f") = "d1", py::arg("workers") = 1, py::arg("node_budget") = 0,
        py::arg("exhaustive") = false);
  m.def("chromatic_number", [](const Graph& g, std::uint64_t node_budget) {
    return chromatic_number(g, Budget{node_budget}).chi;
  }, py::arg("graph"), py::arg("node_budget") = 0);
  m.def("clique_number", py::overload_cast<const Graph&>(&clique_number));
  m.def("independence_number", &independence_number);
  m.def("is_claw_free", &is_claw_free);
  m.def("is_quasi_line", &is_quasi_line);
  m.def("is_circular_interval", [](const Graph& g) { return is_circular_interval(g).has_value(); });
  m.def("is_linear_interval", [](const Graph& g) { return is_linear_interval(g).has_value(); });
  m.def("is_thickened_c5", [](const Graph& g) { return as_thickened_c5(g).has_value(); });

  m.def("check_ids", &check_ids);
  m.def("run_check",
        [](const std::string& id, int max_b, int workers) {
          VerifyConfig c;
          if (max_b > 0) c.max_b = max_b;
          c.workers = workers;
          Report r;
          {
            py::gil_scoped_release release;
            r = run_check(id, c);
          }
          return report_to_json(r);
        },
        py::arg("id"), py::arg("max_b") = 0, py::arg("workers") = 1, "report as a JSON string");
}
