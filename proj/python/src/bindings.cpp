#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <map>
#include <sstream>

#include "algdist/cli.hpp"
#include "algdist/distance.hpp"
#include "algdist/graph.hpp"
#include "algdist/hpart.hpp"
#include "algdist/io.hpp"
#include "algdist/matching.hpp"
#include "algdist/relax.hpp"
#include "algdist/spectral.hpp"

namespace py = pybind11;
using namespace algdist;

namespace {

using Row = std::tuple<VertexId, VertexId, double>;

Graph graph_from_rows(VertexId n, const std::vector<Row>& rows) {
  std::vector<WeightedEdge> edges;
  edges.reserve(rows.size());
  for (const auto& [u, v, w] : rows) edges.push_back({u, v, w});
  return Graph::from_edges(n, edges);
}

py::array_t<double> iterate_array(const IterateSet& it) {
  py::array_t<double> out({static_cast<py::ssize_t>(it.num_runs()),
                           static_cast<py::ssize_t>(it.num_vertices())});
  std::copy(it.data().begin(), it.data().end(), out.mutable_data());
  return out;
}

IterateSet iterate_set(py::array_t<double, py::array::c_style | py::array::forcecast> x) {
  if (x.ndim() == 1) return IterateSet::from_vector({x.data(), static_cast<std::size_t>(x.size())});
  if (x.ndim() != 2) throw std::invalid_argument("expected a 1-d or 2-d array");
  IterateSet it(static_cast<VertexId>(x.shape(1)), static_cast<int>(x.shape(0)));
  std::copy(x.data(), x.data() + x.size(), it.data().begin());
  return it;
}

py::dict distance_dict(const DistanceField& d) {
  py::dict out;
  out["pairs"] = d.pairs;
  out["values"] = py::array_t<double>(static_cast<py::ssize_t>(d.values.size()), d.values.data());
  return out;
}

py::dict matching_dict(const Matching& m) {
  py::dict out;
  out["edges"] = m.edges;
  out["weight_original"] = m.weight_original;
  out["weight_surrogate"] = m.weight_surrogate;
  return out;
}

}  // namespace

PYBIND11_MODULE(_algdist, m) {
  m.doc() = "Algebraic distances on graphs and hypergraphs";

  py::class_<Graph>(m, "Graph")
      .def(py::init(&graph_from_rows), py::arg("num_vertices"), py::arg("edges"),
           "Build from (u, v, weight) rows with 0-based ids.")
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("edges", [](const Graph& g) {
        std::vector<Row> rows;
        for (const auto& e : g.edges()) rows.emplace_back(e.u, e.v, e.weight);
        return rows;
      })
      .def("weighted_degrees", [](const Graph& g) {
        const auto d = g.weighted_degrees();
        return std::vector<double>(d.begin(), d.end());
      })
      .def("is_connected", [](const Graph& g) { return is_connected(g); })
      .def("is_bipartite", [](const Graph& g) { return is_bipartite(g); });

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init<VertexId, std::vector<std::vector<VertexId>>, std::vector<double>>(),
           py::arg("num_vertices"), py::arg("hyperedges"), py::arg("weights"))
      .def_property_readonly("num_vertices", &Hypergraph::num_vertices)
      .def_property_readonly("num_hyperedges", &Hypergraph::num_hyperedges)
      .def("pins", [](const Hypergraph& h, std::size_t e) {
        const auto p = h.pins(e);
        return std::vector<VertexId>(p.begin(), p.end());
      })
      .def("weights", [](const Hypergraph& h) {
        return std::vector<double>(h.weights().begin(), h.weights().end());
      });

  py::class_<RelaxationConfig>(m, "RelaxationConfig")
      .def(py::init([](double omega, int sweeps, int runs, std::uint64_t seed, bool center,
                       int workers) {
             return RelaxationConfig{omega, sweeps, runs, seed, center, workers};
           }),
           py::arg("omega") = 0.5, py::arg("sweeps") = 20, py::arg("runs") = 10,
           py::arg("seed") = 0, py::arg("center_each_sweep") = false, py::arg("workers") = 1)
      .def_readwrite("omega", &RelaxationConfig::omega)
      .def_readwrite("sweeps", &RelaxationConfig::sweeps)
      .def_readwrite("runs", &RelaxationConfig::runs)
      .def_readwrite("seed", &RelaxationConfig::seed)
      .def_readwrite("center_each_sweep", &RelaxationConfig::center_each_sweep)
      .def_readwrite("workers", &RelaxationConfig::workers);

  m.def("read_matrix_market", [](const std::filesystem::path& p) {
    return read_matrix_market(p).graph;
  });
  m.def("read_hgr", [](const std::filesystem::path& p) { return read_hgr(p).hypergraph; });
  m.def("bipartite_expand", [](const Hypergraph& h) { return bipartite_expand(h).graph; });

  m.def("initial_vectors",
        [](VertexId n, int runs, std::uint64_t seed) {
          return iterate_array(initial_vectors(n, runs, seed));
        },
        py::arg("num_vertices"), py::arg("runs"), py::arg("seed"));
  m.def("jor_sweep",
        [](const Graph& g, std::vector<double> x, double omega) { return jor_sweep(g, x, omega); },
        py::arg("graph"), py::arg("x"), py::arg("omega") = 0.5);
  m.def("relax", [](const Graph& g, const RelaxationConfig& cfg) { return iterate_array(relax(g, cfg)); },
        py::arg("graph"), py::arg("config") = RelaxationConfig{},
        "Iterates after cfg.sweeps sweeps, shape (runs, num_vertices).");
  m.def("relax_from",
        [](const Graph& g, py::array_t<double, py::array::c_style | py::array::forcecast> x,
           const RelaxationConfig& cfg) { return iterate_array(relax_from(g, iterate_set(x), cfg)); },
        py::arg("graph"), py::arg("start"), py::arg("config") = RelaxationConfig{});

  m.def("edge_distances",
        [](const Graph& g, py::array_t<double, py::array::c_style | py::array::forcecast> x,
           double p) { return distance_dict(edge_distances(g, iterate_set(x), p)); },
        py::arg("graph"), py::arg("iterates"), py::arg("p") = kInfinityNorm);
  m.def("compute_edge_distances",
        [](const Graph& g, const RelaxationConfig& cfg, double p) {
          return distance_dict(compute_edge_distances(g, cfg, p));
        },
        py::arg("graph"), py::arg("config") = RelaxationConfig{}, py::arg("p") = kInfinityNorm);
  m.def("normalized_distance", &normalized_distance, py::arg("s"), py::arg("sigma2"), py::arg("k"));

  m.def("pencil_eigen", [](const Graph& g) {
    const auto e = pencil_eigen(g);
    return py::make_tuple(Eigen::VectorXd(e.mu), Eigen::MatrixXd(e.vectors));
  }, "Eigenvalues (ascending) and D-orthonormal eigenvectors of the pencil (L, D).");
  m.def("iteration_matrix",
        [](const Graph& g, const std::string& method, double omega) {
          static const std::map<std::string, IterationMethod> names{
              {"gs", IterationMethod::GaussSeidel}, {"jacobi", IterationMethod::Jacobi},
              {"sor", IterationMethod::SOR}, {"jor", IterationMethod::JOR}};
          const auto it = names.find(method);
          if (it == names.end()) throw std::invalid_argument("method must be gs, jacobi, sor or jor");
          return iteration_matrix(g, it->second, omega);
        },
        py::arg("graph"), py::arg("method") = "jor", py::arg("omega") = 0.5);
  m.def("stability_root", &stability_root, py::arg("alpha"), py::arg("k"));

  m.def("matching_preprocess",
        [](const Graph& g, std::vector<double> rho, double eps) {
          DistanceField d;
          for (const auto& e : g.edges()) d.pairs.emplace_back(e.u, e.v);
          d.values = std::move(rho);
          const auto s = matching_preprocess(g, d, eps);
          return py::make_tuple(s.vertex_score, s.edge_weight);
        },
        py::arg("graph"), py::arg("rho"), py::arg("eps") = kDistanceFloor);
  m.def("greedy_matching",
        [](const Graph& g, std::vector<double> w) { return matching_dict(greedy_matching(g, w)); });
  m.def("path_growing_matching", [](const Graph& g, std::vector<double> w) {
    return matching_dict(path_growing_matching(g, w));
  });
  m.def("brute_force_matching", [](const Graph& g, std::vector<double> w) {
    return matching_dict(brute_force_matching(g, w));
  });
  m.def("matching_experiment",
        [](const Graph& g, const RelaxationConfig& relax_cfg, double p, int repetitions,
           const std::string& algorithm, bool invert, int workers) {
          MatchingExperimentConfig cfg;
          cfg.relax = relax_cfg;
          cfg.p = p;
          cfg.repetitions = repetitions;
          cfg.algorithm = parse_matching_algorithm(algorithm);
          cfg.invert_surrogate = invert;
          cfg.workers = workers;
          const auto r = matching_experiment(g, cfg);
          py::dict out;
          out["mean_weight_ratio"] = r.mean_weight_ratio;
          out["mean_cardinality_ratio"] = r.mean_cardinality_ratio;
          std::vector<double> ratios;
          for (const auto& t : r.trials) ratios.push_back(t.weight_ratio);
          out["weight_ratios"] = ratios;
          return out;
        },
        py::arg("graph"), py::arg("config") = RelaxationConfig{}, py::arg("p") = kInfinityNorm,
        py::arg("repetitions") = 20, py::arg("algorithm") = "greedy",
        py::arg("invert_surrogate") = false, py::arg("workers") = 1);

  m.def("hyperedge_distances",
        [](const Hypergraph& h, const RelaxationConfig& cfg, bool literal) {
          return hyperedge_distances(h, cfg, literal).spread;
        },
        py::arg("hypergraph"), py::arg("config") = RelaxationConfig{},
        py::arg("literal_unrelaxed") = false);
  m.def("evaluate_cut", [](const Hypergraph& h, std::vector<int> part) {
    return evaluate_cut(h, Partition{std::move(part)});
  });
  m.def("fallback_bisect",
        [](const Hypergraph& h, std::optional<std::vector<double>> weights, double imbalance,
           std::uint64_t seed) {
          FallbackOptions opts;
          opts.imbalance = imbalance;
          const std::vector<double> w =
              weights ? *weights : std::vector<double>(h.weights().begin(), h.weights().end());
          return fallback_bisect(h, w, opts, seed).part;
        },
        py::arg("hypergraph"), py::arg("weights") = py::none(), py::arg("imbalance") = 0.03,
        py::arg("seed") = 0);
  m.def("hpart_experiment",
        [](const Hypergraph& h, const RelaxationConfig& relax_cfg, int repetitions,
           double imbalance, bool literal, int workers) {
          HpartExperimentConfig cfg;
          cfg.relax = relax_cfg;
          cfg.repetitions = repetitions;
          cfg.literal_unrelaxed = literal;
          cfg.workers = workers;
          FallbackOptions fo;
          fo.imbalance = imbalance;
          const auto r = hpart_experiment(h, cfg, make_fallback_partitioner(fo));
          py::dict out;
          out["mean_ratio"] = r.mean_ratio;
          out["balance_violations"] = r.balance_violations;
          return out;
        },
        py::arg("hypergraph"), py::arg("config") = RelaxationConfig{},
        py::arg("repetitions") = 20, py::arg("imbalance") = 0.03,
        py::arg("literal_unrelaxed") = false, py::arg("workers") = 1);

  m.def("run_cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "algdist");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "Run the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
