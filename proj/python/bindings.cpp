#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cheegerlab/constants.hpp"
#include "cheegerlab/edge_list.hpp"
#include "cheegerlab/error.hpp"
#include "cheegerlab/families.hpp"
#include "cheegerlab/harness.hpp"
#include "cheegerlab/report.hpp"
#include "cheegerlab/spectral.hpp"

namespace py = pybind11;
using namespace cheegerlab;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(r.num(), r.den());
}

std::vector<Edge> to_edges(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return edges;
}

py::list edge_pairs(std::span<const Edge> edges) {
  py::list out;
  for (const Edge& e : edges) out.append(py::make_tuple(e.u, e.v));
  return out;
}

py::dict spectrum_dict(const Spectrum& s) {
  py::dict d;
  d["eigenvalues"] = s.eigenvalues;
  std::vector<std::vector<double>> vectors;
  for (std::size_t i = 0; i < s.size(); ++i) vectors.push_back(s.eigenvector(i));
  d["eigenvectors"] = vectors;
  d["residual_bound"] = s.residual_bound;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cheeger-like constants and normalized-Laplacian eigenvalue bounds";

  // Leaked on purpose: the type object must outlive interpreter teardown.
  static PyObject* error_type = PyErr_NewException("cheegerlab._core.Error", PyExc_ValueError, nullptr);
  m.attr("Error") = py::handle(error_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error_type)(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             return Graph::from_edge_list(n, to_edges(edges));
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("edges", [](const Graph& g) { return edge_pairs(g.edges()); })
      .def("degree", &Graph::degree)
      .def("neighbors", [](const Graph& g, int v) {
        auto nb = g.neighbors(v);
        return std::vector<int>(nb.begin(), nb.end());
      })
      .def("is_connected", [](const Graph& g) { return is_connected(g); })
      .def("is_bipartite", [](const Graph& g) { return is_bipartite(g); })
      .def("duplicate_classes", [](const Graph& g) { return duplicate_classes(g); })
      .def("graph_id", [](const Graph& g) { return graph_id(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) + ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("parse_edge_list", [](const std::string& text) { return read_edge_list(text); }, py::arg("text"));
  m.def("read_edge_list_file", [](const std::string& path) { return read_edge_list_file(path); }, py::arg("path"));
  m.def("to_edge_list", [](const Graph& g) { return to_edge_list(g); }, py::arg("graph"));

  m.def("q_constant", [](const Graph& g) {
    const EdgeValue v = q_constant(g);
    return py::make_tuple(fraction(v.value), py::make_tuple(v.witness.u, v.witness.v));
  });
  m.def("tau_constant", [](const Graph& g) {
    const EdgeValue v = tau_constant(g);
    return py::make_tuple(fraction(v.value), py::make_tuple(v.witness.u, v.witness.v));
  });
  m.def("cheeger_h", [](const Graph& g) {
    const CheegerValue v = cheeger_h(g);
    const auto& s = v.witness.members();
    return py::make_tuple(fraction(v.value), std::vector<int>(s.begin(), s.end()));
  });
  m.def("dual_cheeger", [](const Graph& g) {
    const DualCheegerValue v = dual_cheeger(g);
    const auto& a = v.first.members();
    const auto& b = v.second.members();
    return py::make_tuple(fraction(v.value), std::vector<int>(a.begin(), a.end()), std::vector<int>(b.begin(), b.end()));
  });
  m.def("q_via_bipartite_subgraphs", [](const Graph& g) { return fraction(q_via_bipartite_subgraphs(g)); });
  m.def("l1_edge_quotient", [](const Graph& g, const std::vector<double>& gamma) {
    return l1_edge_quotient(OrientedGraph(g), gamma);
  });
  m.def("l1_vertex_quotient_plain",
        [](const Graph& g, const std::vector<double>& f) { return l1_vertex_quotient_plain(g, f); });
  m.def("l1_vertex_quotient_maxt",
        [](const Graph& g, const std::vector<double>& f) { return l1_vertex_quotient_maxt(g, f); });

  m.def("vertex_spectrum", [](const Graph& g) { return spectrum_dict(vertex_spectrum(g)); });
  m.def("edge_spectrum", [](const Graph& g) { return spectrum_dict(edge_spectrum(OrientedGraph(g))); });
  m.def("lambda_max", [](const Graph& g) { return vertex_spectrum(g).max(); });

  m.def("_check_graph_json",
        [](const Graph& g, double tol) { return to_json(check_graph(g, tol)).dump(); },
        py::arg("graph"), py::arg("tol") = kDefaultCheckTolerance);
  m.def("_analyze_graph_json",
        [](const Graph& g, double tol) { return to_json(analyze_graph(g, {tol, false})).dump(); },
        py::arg("graph"), py::arg("tol") = kDefaultCheckTolerance);
  m.def("_fuzz_json",
        [](int trials, int n_min, int n_max, std::vector<double> p, std::uint64_t seed, int threads) {
          FuzzOptions o;
          o.trials = trials;
          o.n_min = n_min;
          o.n_max = n_max;
          o.p_values = std::move(p);
          o.seed = seed;
          o.threads = threads;
          py::gil_scoped_release release;
          return to_json(fuzz(o)).dump();
        },
        py::arg("trials") = 1000, py::arg("n_min") = 3, py::arg("n_max") = 14,
        py::arg("p") = std::vector<double>{0.3, 0.5, 0.8}, py::arg("seed") = 0, py::arg("threads") = 1);
  m.def("random_connected_graph", &random_connected_graph, py::arg("n"), py::arg("p"), py::arg("seed"));

  m.def("one_sided", [](int n, int k, int d) { return build_one_sided({n, k, d}); });
  m.def("one_sided_exists", [](int n, int k, int d) { return exists_one_sided({n, k, d}); });
  m.def("predict_lambda_max", [](int n, int k, int d) {
    const LambdaPrediction p = predict_lambda_max({n, k, d});
    return py::make_tuple(fraction(p.lower), fraction(p.upper));
  });
  m.def("complete_graph", &complete_graph);
  m.def("complete_bipartite", &complete_bipartite);
  m.def("cycle_graph", &cycle_graph);
  m.def("path_graph", &path_graph);
  m.def("petal_graph", &petal_graph);

  m.def("_search_json", [](const std::string& name, int n_max, const std::vector<int>& n_list) {
    py::gil_scoped_release release;
    if (name == "tau-bound") return to_json(tau_upper_search(n_max)).dump();
    if (name == "epsilon-witness") return to_json(epsilon_witness_search(n_max)).dump();
    if (name == "no-shift") return to_json(no_linear_shift_bound(n_list)).dump();
    throw Error(ErrorCode::InvalidParams, "unknown search '" + name + "'");
  });
  m.def("_demo_json", [] { return to_json(lower_sharpness_demo()).dump(); });
}
