#include "algdist/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "algdist/distance.hpp"
#include "algdist/graph.hpp"
#include "algdist/hpart.hpp"
#include "algdist/io.hpp"
#include "algdist/matching.hpp"
#include "algdist/parallel.hpp"
#include "algdist/relax.hpp"
#include "algdist/spectral.hpp"

namespace algdist {

namespace {

namespace fs = std::filesystem;

struct CommonOptions {
  double omega = 0.5;
  int k = 20;
  int runs = 10;
  std::string p = "inf";
  std::uint64_t seed = 1;
  int repetitions = 20;
  double eps = kDistanceFloor;
  int workers = 1;
  std::string out;
  bool largest_component = false;
  bool timings = false;

  RelaxationConfig relax() const { return {omega, k, runs, seed, false, workers}; }
};

void add_common(CLI::App* app, CommonOptions& o) {
  app->add_option("--omega", o.omega, "JOR relaxation parameter")->capture_default_str();
  app->add_option("--k", o.k, "number of relaxation sweeps")->capture_default_str();
  app->add_option("--R", o.runs, "number of random initial vectors")->capture_default_str();
  app->add_option("--p", o.p, "norm over runs: 1, 2 or inf")->capture_default_str();
  app->add_option("--seed", o.seed, "base PRNG seed")->capture_default_str();
  app->add_option("--seeds", o.repetitions, "seeded repetitions per experiment")
      ->capture_default_str();
  app->add_option("--eps", o.eps, "floor under distances before inversion")->capture_default_str();
  app->add_option("--workers", o.workers, "worker threads (0 = all cores)")->capture_default_str();
  app->add_option("--out", o.out, "write CSV here instead of stdout");
  app->add_flag("--largest-component", o.largest_component,
                "restrict disconnected inputs to their largest connected component");
}

/// Restricts p to the values the tool supports.
double checked_norm(const std::string& text) {
  const double p = parse_norm(text);
  if (!(p == 1.0 || p == 2.0 || std::isinf(p))) {
    throw std::invalid_argument("--p must be 1, 2 or inf");
  }
  return p;
}

std::string config_header(const std::string& command, const std::string& input,
                          const CommonOptions& o, const std::string& extra = {}) {
  std::ostringstream h;
  h << "# algdist " << command << " input=" << input << " omega=" << format_double(o.omega)
    << " k=" << o.k << " R=" << o.runs << " p=" << format_norm(checked_norm(o.p))
    << " seed=" << o.seed << " repetitions=" << o.repetitions << " eps=" << format_double(o.eps)
    << " rng=\"" << kInitialVectorGenerator << '"';
  if (!extra.empty()) h << ' ' << extra;
  return h.str();
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot write " + path);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

Graph load_graph(const std::string& path, bool largest_component, std::ostream& err) {
  auto mm = read_matrix_market(path);
  for (const auto& w : mm.warnings) err << "warning: " << path << ": " << w << '\n';
  if (is_connected(mm.graph)) return std::move(mm.graph);
  if (!largest_component) {
    throw std::invalid_argument(path + ": graph is disconnected; pass --largest-component to "
                                       "restrict it to its largest component");
  }
  auto lcc = largest_connected_component(mm.graph);
  err << "warning: " << path << ": using largest component (" << lcc.graph.num_vertices()
      << " of " << mm.graph.num_vertices() << " vertices)\n";
  return std::move(lcc.graph);
}

Hypergraph load_hypergraph(const std::string& path, bool largest_component, std::ostream& err) {
  auto file = read_hgr(path);
  const auto model = bipartite_expand(file.hypergraph);
  if (is_connected(model.graph)) return std::move(file.hypergraph);
  if (!largest_component) {
    throw std::invalid_argument(path + ": hypergraph is disconnected; pass --largest-component");
  }
  auto lcc = largest_connected_component(file.hypergraph);
  err << "warning: " << path << ": using largest component ("
      << lcc.hypergraph.num_vertices() << " of " << file.hypergraph.num_vertices()
      << " vertices)\n";
  return std::move(lcc.hypergraph);
}

std::string base_name(const std::string& path) { return fs::path(path).filename().string(); }

struct HpartOptions {
  std::string partitioner;
  std::vector<std::string> partitioner_args;
  double timeout_seconds = 300.0;
  double imbalance = 0.03;
  bool literal_alg4 = false;
};

void add_hpart_options(CLI::App* app, HpartOptions& o) {
  app->add_option("--partitioner", o.partitioner,
                  "external hMetis-compatible executable (default: built-in bisector)");
  app->add_option("--partitioner-arg", o.partitioner_args,
                  "extra argument for the partitioner; {seed} is substituted");
  app->add_option("--timeout", o.timeout_seconds, "partitioner timeout in seconds")
      ->capture_default_str();
  app->add_option("--imbalance", o.imbalance, "imbalance factor alpha")->capture_default_str();
  app->add_flag("--literal-alg4", o.literal_alg4,
                "relax the bipartite model with plain Jacobi averaging (omega = 1)");
}

Partitioner make_partitioner(const HpartOptions& o) {
  if (o.partitioner.empty()) {
    FallbackOptions fb;
    fb.imbalance = o.imbalance;
    return make_fallback_partitioner(fb);
  }
  ExternalPartitionerOptions ext;
  ext.executable = o.partitioner;
  ext.extra_args = o.partitioner_args;
  ext.timeout = std::chrono::milliseconds(static_cast<long long>(o.timeout_seconds * 1000.0));
  ext.imbalance = o.imbalance;
  // Fail early on a bad path.
  if (!fs::exists(ext.executable)) {
    throw PartitionerError(PartitionerError::Kind::Configuration,
                           "partitioner executable '" + o.partitioner +
                               "' not found; omit --partitioner to use the built-in fallback bisector");
  }
  return make_external_partitioner(ext);
}

HpartExperimentConfig hpart_config(const CommonOptions& o, const HpartOptions& h) {
  HpartExperimentConfig cfg;
  cfg.relax = o.relax();
  cfg.eps = o.eps;
  cfg.repetitions = o.repetitions;
  cfg.literal_unrelaxed = h.literal_alg4;
  cfg.workers = o.workers;
  return cfg;
}

MatchingExperimentConfig matching_config(const CommonOptions& o, const std::string& algo,
                                         bool invert) {
  MatchingExperimentConfig cfg;
  cfg.relax = o.relax();
  cfg.p = checked_norm(o.p);
  cfg.eps = o.eps;
  cfg.repetitions = o.repetitions;
  cfg.algorithm = parse_matching_algorithm(algo);
  cfg.invert_surrogate = invert;
  cfg.workers = o.workers;
  return cfg;
}

int cmd_distance(const std::string& input, const CommonOptions& o, std::ostream& out,
                 std::ostream& err) {
  const Graph g = load_graph(input, o.largest_component, err);
  const auto field = compute_edge_distances(g, o.relax(), checked_norm(o.p));
  Output sink(o.out, out);
  auto& os = sink.get();
  os << config_header("distance", base_name(input), o,
                      "n=" + std::to_string(g.num_vertices()) +
                          " m=" + std::to_string(g.num_edges()))
     << '\n';
  os << "i,j,rho\n";
  for (std::size_t e = 0; e < field.pairs.size(); ++e) {
    os << field.pairs[e].first + 1 << ',' << field.pairs[e].second + 1 << ','
       << format_double(field.values[e]) << '\n';
  }
  return 0;
}

int cmd_match(const std::string& input, const CommonOptions& o, const std::string& algo,
              bool invert, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(input, o.largest_component, err);
  const auto cfg = matching_config(o, algo, invert);
  const auto report = matching_experiment(g, cfg);
  Output sink(o.out, out);
  auto& os = sink.get();
  os << config_header("match", base_name(input), o,
                      "algorithm=" + to_string(cfg.algorithm) +
                          " invert_surrogate=" + (invert ? "1" : "0"))
     << '\n';
  os << "seed,weight_without,weight_with,size_without,size_with,weight_ratio,cardinality_ratio\n";
  for (const auto& t : report.trials) {
    os << t.seed << ',' << format_double(t.weight_without) << ',' << format_double(t.weight_with)
       << ',' << t.size_without << ',' << t.size_with << ',' << format_double(t.weight_ratio)
       << ',' << format_double(t.cardinality_ratio) << '\n';
  }
  os << "# mean_weight_ratio=" << format_double(report.mean_weight_ratio)
     << " mean_cardinality_ratio=" << format_double(report.mean_cardinality_ratio) << '\n';
  return 0;
}

int cmd_hpart(const std::string& input, const CommonOptions& o, const HpartOptions& ho,
              std::ostream& out, std::ostream& err) {
  const Hypergraph h = load_hypergraph(input, o.largest_component, err);
  const auto report = hpart_experiment(h, hpart_config(o, ho), make_partitioner(ho));
  Output sink(o.out, out);
  auto& os = sink.get();
  os << config_header("hpart", base_name(input), o,
                      "partitioner=" + (ho.partitioner.empty() ? std::string("fallback")
                                                               : base_name(ho.partitioner)) +
                          " imbalance=" + format_double(ho.imbalance) +
                          " literal_alg4=" + (ho.literal_alg4 ? "1" : "0"))
     << '\n';
  os << "seed,cut_original,cut_surrogate,ratio,balanced_original,balanced_surrogate\n";
  for (const auto& t : report.trials) {
    os << t.seed << ',' << format_double(t.cut_original) << ',' << format_double(t.cut_surrogate)
       << ',' << format_double(t.ratio) << ',' << t.balanced_original << ','
       << t.balanced_surrogate << '\n';
  }
  os << "# mean_ratio=" << format_double(report.mean_ratio)
     << " balance_violations=" << report.balance_violations << '\n';
  if (report.balance_violations > 0) {
    err << "warning: " << report.balance_violations
        << " partitions violate the balance constraint\n";
  }
  return 0;
}

int cmd_diag(const std::string& input, const CommonOptions& o, int theta_points,
             std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(input, o.largest_component, err);
  const auto eig = pencil_eigen(g);
  RelaxationConfig cfg = o.relax();
  cfg.runs = 1;
  const auto x0 = initial_vectors(g.num_vertices(), 1, o.seed);
  const auto xk = relax_from(g, x0, cfg);
  const auto xk1 = relax_from(g, xk, {o.omega, 1, 1, 0, false, 1});
  const Eigen::VectorXd a = expansion_coefficients(eig, x0.run(0));
  const auto rep = stability_report(g, xk.run(0), xk1.run(0), {a.data(), static_cast<std::size_t>(a.size())},
                                    o.k, o.omega, eig.mu_max());
  const double mu2 = eig.size() > 1 ? eig.mu(1) : 0.0;

  Output sink(o.out, out);
  auto& os = sink.get();
  os << config_header("diag", base_name(input), o) << '\n';
  os << "quantity,value\n";
  auto row = [&](const std::string& name, double v) {
    os << name << ',' << format_double(v) << '\n';
  };
  row("n", g.num_vertices());
  row("m", static_cast<double>(g.num_edges()));
  row("mu_2", mu2);
  row("mu_n", eig.mu_max());
  row("cutting_point", eig.size() > 1 ? cutting_point(eig) : 0.0);
  row("degenerate_spectrum", has_degenerate_spectrum(eig) ? 1 : 0);
  row("angle_defect", rep.angle_defect);
  row("bound_rhs", rep.bound_rhs);
  row("alpha", rep.alpha);
  row("r_k", rep.root);
  row("f_k", rep.f);
  row("kappa", rep.kappa);
  row("bound_applies", rep.bound_applies ? 1 : 0);
  row("model_residual_mu2", model_residual(g, xk.run(0), mu2));

  if (eig.size() > 1 && theta_points > 0) {
    const double top = 2.0 / eig.mu_max();
    std::vector<double> omegas;
    for (int i = 1; i <= theta_points; ++i) omegas.push_back(top * i / (theta_points + 1));
    os << "omega,theta,sigma2,limit\n";
    for (const auto& pt : theta_curve(eig, omegas)) {
      const char* limit = pt.limit == LimitVector::Second ? "v2"
                          : pt.limit == LimitVector::Last ? "vn"
                                                          : "undefined";
      os << format_double(pt.omega) << ',' << format_double(pt.theta) << ','
         << format_double(pt.sigma2) << ',' << limit << '\n';
    }
  }
  return 0;
}

int cmd_bench(const std::string& dir, const CommonOptions& o, const std::string& algo,
              bool invert, const HpartOptions& ho, std::ostream& out, std::ostream& err) {
  std::vector<fs::path> inputs;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto ext = entry.path().extension().string();
    if (entry.is_regular_file() && (ext == ".mtx" || ext == ".hgr")) inputs.push_back(entry.path());
  }
  std::sort(inputs.begin(), inputs.end());
  if (inputs.empty()) throw std::invalid_argument("no .mtx or .hgr files in " + dir);

  CommonOptions inner = o;
  inner.workers = 1;
  std::vector<std::string> rows(inputs.size());
  std::vector<std::string> warnings(inputs.size());
  parallel_for(static_cast<std::int64_t>(inputs.size()), o.workers, [&](std::int64_t idx) {
    const auto& path = inputs[static_cast<std::size_t>(idx)];
    std::ostringstream warn;
    std::ostringstream row;
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    row << path.filename().string() << ',';
    double load_s = 0.0;
    double run_s = 0.0;
    if (path.extension() == ".mtx") {
      const Graph g = load_graph(path.string(), o.largest_component, warn);
      load_s = std::chrono::duration<double>(clock::now() - t0).count();
      const auto cfg = matching_config(inner, algo, invert);
      const auto t1 = clock::now();
      const auto rep = matching_experiment(g, cfg);
      run_s = std::chrono::duration<double>(clock::now() - t1).count();
      row << "graph," << g.num_vertices() << ',' << g.num_edges() << ','
          << to_string(cfg.algorithm) << ',' << format_double(rep.mean_weight_ratio) << ','
          << format_double(rep.mean_cardinality_ratio) << ",,";
    } else {
      const Hypergraph h = load_hypergraph(path.string(), o.largest_component, warn);
      load_s = std::chrono::duration<double>(clock::now() - t0).count();
      const auto t1 = clock::now();
      const auto rep = hpart_experiment(h, hpart_config(inner, ho), make_partitioner(ho));
      run_s = std::chrono::duration<double>(clock::now() - t1).count();
      row << "hypergraph," << h.num_vertices() << ',' << h.num_hyperedges() << ','
          << (ho.partitioner.empty() ? "fallback" : base_name(ho.partitioner)) << ",,,"
          << format_double(rep.mean_ratio) << ',' << rep.balance_violations;
    }
    row << ',' << format_double(o.omega) << ',' << o.k << ',' << o.runs << ','
        << format_norm(checked_norm(o.p)) << ',' << o.seed << ',' << o.repetitions;
    if (o.timings) row << ',' << format_double(load_s) << ',' << format_double(run_s);
    rows[static_cast<std::size_t>(idx)] = row.str();
    warnings[static_cast<std::size_t>(idx)] = warn.str();
  });
  for (const auto& w : warnings) err << w;

  Output sink(o.out, out);
  auto& os = sink.get();
  os << config_header("bench", base_name(dir), o) << '\n';
  os << "input,kind,vertices,edges,method,mean_weight_ratio,mean_cardinality_ratio,"
        "mean_cut_ratio,balance_violations,omega,k,R,p,seed,repetitions";
  if (o.timings) os << ",load_seconds,experiment_seconds";
  os << '\n';
  for (const auto& r : rows) os << r << '\n';
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Algebraic distances on graphs and hypergraphs"};
  app.require_subcommand(1);

  CommonOptions common;
  std::string input;
  std::string algo = "greedy";
  bool invert = false;
  HpartOptions hopts;
  int theta_points = 20;

  auto* distance = app.add_subcommand("distance", "per-edge algebraic distances as CSV");
  distance->add_option("graph", input, "Matrix Market file")->required();
  add_common(distance, common);

  auto* match = app.add_subcommand("match", "matching with and without preprocessing");
  match->add_option("graph", input, "Matrix Market file")->required();
  add_common(match, common);
  match->add_option("--algo", algo, "greedy or path")->capture_default_str();
  match->add_flag("--invert-surrogate", invert, "greedy picks the smallest surrogate first");

  auto* hpart = app.add_subcommand("hpart", "hypergraph 2-partitioning with and without preprocessing");
  hpart->add_option("hypergraph", input, "hMetis .hgr file")->required();
  add_common(hpart, common);
  add_hpart_options(hpart, hopts);

  auto* diag = app.add_subcommand("diag", "stability, theta curve and model residual (dense)");
  diag->add_option("graph", input, "Matrix Market file")->required();
  add_common(diag, common);
  diag->add_option("--theta-points", theta_points, "omega samples for the theta curve")
      ->capture_default_str();

  auto* bench = app.add_subcommand("bench", "batch experiments over a directory");
  bench->add_option("dir", input, "directory with .mtx and .hgr files")->required();
  add_common(bench, common);
  bench->add_option("--algo", algo, "matching algorithm: greedy or path")->capture_default_str();
  bench->add_flag("--invert-surrogate", invert, "greedy picks the smallest surrogate first");
  bench->add_flag("--timings", common.timings, "append wall-clock columns");
  add_hpart_options(bench, hopts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*distance) return cmd_distance(input, common, out, err);
    if (*match) return cmd_match(input, common, algo, invert, out, err);
    if (*hpart) return cmd_hpart(input, common, hopts, out, err);
    if (*diag) return cmd_diag(input, common, theta_points, out, err);
    if (*bench) return cmd_bench(input, common, algo, invert, hopts, out, err);
  } catch (const PartitionerError& e) {
    err << "error: " << e.what() << '\n';
    if (!e.captured_output().empty()) err << e.captured_output() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace algdist
