// Python bindings for the enumeration core.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "mecenum/baselines.hpp"
#include "mecenum/chordal.hpp"
#include "mecenum/enumerate.hpp"
#include "mecenum/errors.hpp"
#include "mecenum/instances.hpp"
#include "mecenum/io.hpp"
#include "mecenum/meek.hpp"
#include "mecenum/oracle.hpp"

namespace py = pybind11;
using namespace mecenum;

namespace {

std::uint64_t dispatch(const std::string& algo, const Pdag& g, const EnumerationSink& sink) {
  if (algo == "mcs") return enumerate_pdag(g, sink);
  if (algo == "meek") return meek_enum(g, sink);
  if (algo == "chickering") return chickering_enum(g, sink);
  if (algo == "shd3") return shd3_enum(g, sink);
  throw std::invalid_argument("unknown algorithm: " + algo);
}

std::vector<Pdag> collect(const std::string& algo, const Pdag& g, std::uint64_t limit) {
  std::vector<Pdag> out;
  dispatch(algo, g, [&](const DagView& view) {
    out.push_back(view.materialize());
    return limit == 0 || out.size() < limit;
  });
  return out;
}

GenConfig make_config(int n, int k, const std::string& model, std::uint64_t seed) {
  GenConfig cfg;
  cfg.n = n;
  cfg.k = k;
  cfg.seed = seed;
  if (model == "chordal")
    cfg.model = GenModel::Chordal;
  else if (model == "dag-uniform")
    cfg.model = GenModel::DagUniform;
  else if (model == "dag-ba")
    cfg.model = GenModel::DagBa;
  else
    throw std::invalid_argument("unknown model: " + model);
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Markov equivalence class enumeration core";

  py::register_exception<NotChordalError>(m, "NotChordalError", PyExc_ValueError);
  py::register_exception<NotExtendableError>(m, "NotExtendableError", PyExc_ValueError);
  py::register_exception<TooLargeError>(m, "TooLargeError", PyExc_ValueError);

  py::class_<Pdag>(m, "Pdag")
      .def(py::init<int>(), py::arg("n"))
      .def_property_readonly("n", &Pdag::vertex_count)
      .def_property_readonly("m", &Pdag::edge_count)
      .def("add_directed", &Pdag::add_directed)
      .def("add_undirected", &Pdag::add_undirected)
      .def("orient", &Pdag::orient)
      .def("adjacent", &Pdag::adjacent)
      .def("has_directed", &Pdag::has_directed)
      .def("has_undirected", &Pdag::has_undirected)
      .def("parents", [](const Pdag& g, Vertex v) { return g.parents(v); })
      .def("children", [](const Pdag& g, Vertex v) { return g.children(v); })
      .def("undirected_neighbors",
           [](const Pdag& g, Vertex v) { return g.undirected_neighbors(v); })
      .def("directed_edges", &Pdag::directed_edges)
      .def("undirected_edges", &Pdag::undirected_edges)
      .def("fully_directed", &Pdag::fully_directed)
      .def("__eq__", [](const Pdag& a, const Pdag& b) { return a == b; })
      .def("__hash__",
           [](const Pdag& g) { return py::hash(py::str(to_text(g))); })
      .def("__str__", [](const Pdag& g) { return to_text(g); })
      .def("__repr__", [](const Pdag& g) {
        return "<Pdag n=" + std::to_string(g.vertex_count()) +
               " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("parse", &parse_pdag, py::arg("text"));
  m.def("to_text", &to_text, py::arg("g"));
  m.def("to_dot", &to_dot, py::arg("g"));

  m.def("skeleton", &skeleton);
  m.def("shd", &shd);
  m.def("is_acyclic", &is_acyclic);
  m.def("v_structures", [](const Pdag& g) {
    std::vector<std::tuple<Vertex, Vertex, Vertex>> out;
    for (const VStructure& vs : v_structures(g)) out.emplace_back(vs.u, vs.c, vs.v);
    return out;
  });

  m.def("is_chordal", &is_chordal);
  m.def("mcs", [](const Pdag& g) { return mcs(g); });
  m.def("apply_meek_rules", &apply_meek_rules);
  m.def("maximal_orientation", &maximal_orientation);
  m.def("consistent_extension", [](const Pdag& g) {
    std::optional<Pdag> closure = maximal_orientation(g);
    if (!closure) throw NotExtendableError("no consistent extension");
    return consistent_extension_mpdag(*closure);
  });

  m.def(
      "enumerate_dags",
      [](const Pdag& g, const std::string& algo, std::uint64_t limit) {
        return collect(algo, g, limit);
      },
      py::arg("g"), py::arg("algo") = "mcs", py::arg("limit") = 0,
      "All DAGs of the class; limit=0 means unlimited.");
  m.def(
      "count_dags",
      [](const Pdag& g, const std::string& algo) {
        return dispatch(algo, g, [](const DagView&) { return true; });
      },
      py::arg("g"), py::arg("algo") = "mcs");
  m.def(
      "for_each_dag",
      [](const Pdag& g, const std::function<bool(const Pdag&)>& fn, const std::string& algo) {
        return dispatch(algo, g, [&](const DagView& view) { return fn(view.materialize()); });
      },
      py::arg("g"), py::arg("fn"), py::arg("algo") = "mcs",
      "Streaming enumeration; fn returns False to stop early.");

  m.def("markov_equivalent", &markov_equivalent);
  m.def("covered_edges", [](const Pdag& d) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const CoveredEdge& e : covered_edges(d)) out.emplace_back(e.x, e.y);
    return out;
  });

  m.def(
      "random_chordal",
      [](int n, int k, std::uint64_t seed) {
        return random_chordal(make_config(n, k, "chordal", seed));
      },
      py::arg("n"), py::arg("k") = 3, py::arg("seed") = 0);
  m.def(
      "random_dag",
      [](int n, int k, std::uint64_t seed, const std::string& model) {
        return random_dag(make_config(n, k, model, seed));
      },
      py::arg("n"), py::arg("k") = 3, py::arg("seed") = 0, py::arg("model") = "dag-uniform");
  m.def("dag_to_cpdag", &dag_to_cpdag);
  m.def(
      "cpdag_to_pdag",
      [](const Pdag& g, std::uint64_t seed, std::pair<int, int> bg_edges) {
        GenConfig cfg;
        cfg.n = g.vertex_count() > 0 ? g.vertex_count() : 1;
        cfg.seed = seed;
        cfg.bg_edges = bg_edges;
        return cpdag_to_pdag(g, cfg);
      },
      py::arg("g"), py::arg("seed") = 0, py::arg("bg_edges") = std::pair<int, int>{3, 7});

  m.def("brute_force_extensions", &oracle::brute_force_extensions);
  m.def("mec_size", &oracle::mec_size);
}
