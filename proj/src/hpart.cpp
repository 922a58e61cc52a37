#include "algdist/hpart.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <system_error>

#include "algdist/io.hpp"
#include "algdist/parallel.hpp"
#include "algdist/spectral.hpp"
#include "algdist/subprocess.hpp"

namespace algdist {

std::size_t part_capacity(std::size_t num_vertices, int num_parts, double imbalance) {
  if (num_parts < 1) throw std::invalid_argument("need at least one part");
  const double cap = (1.0 + imbalance) * static_cast<double>(num_vertices) / num_parts;
  // Tolerate rounding noise in products such as 1.1 * 10 / 2.
  return static_cast<std::size_t>(std::floor(cap + 1e-9));
}

bool is_balanced(const Partition& p) {
  std::vector<std::size_t> size(static_cast<std::size_t>(p.num_parts), 0);
  for (int id : p.part) {
    if (id < 0 || id >= p.num_parts) return false;
    ++size[static_cast<std::size_t>(id)];
  }
  const auto cap = part_capacity(p.part.size(), p.num_parts, p.imbalance);
  return std::all_of(size.begin(), size.end(), [&](std::size_t s) { return s > 0 && s <= cap; });
}

double evaluate_cut(const Hypergraph& h, const Partition& p, std::span<const double> weights) {
  if (p.part.size() != static_cast<std::size_t>(h.num_vertices())) {
    throw std::invalid_argument("partition does not assign every vertex");
  }
  if (weights.size() != h.num_hyperedges()) throw std::invalid_argument("weight count mismatch");
  for (int id : p.part) {
    if (id < 0 || id >= p.num_parts) throw std::invalid_argument("vertex has no valid part");
  }
  double cut = 0.0;
  for (std::size_t e = 0; e < h.num_hyperedges(); ++e) {
    const auto pins = h.pins(e);
    const int first = p.part[pins.front()];
    const bool spans = std::any_of(pins.begin(), pins.end(),
                                   [&](VertexId v) { return p.part[v] != first; });
    if (spans) cut += weights[e];
  }
  return cut;
}

double evaluate_cut(const Hypergraph& h, const Partition& p) {
  return evaluate_cut(h, p, h.weights());
}

HyperedgeDistances hyperedge_spreads(const Hypergraph& h, const IterateSet& iterates) {
  if (iterates.num_vertices() < h.num_vertices()) {
    throw std::invalid_argument("iterates do not cover every vertex");
  }
  HyperedgeDistances out;
  out.spread.assign(h.num_hyperedges(), 0.0);
  for (std::size_t e = 0; e < h.num_hyperedges(); ++e) {
    const auto pins = h.pins(e);
    double total = 0.0;
    for (int r = 0; r < iterates.num_runs(); ++r) {
      double lo = std::numeric_limits<double>::infinity();
      double hi = -lo;
      for (VertexId v : pins) {
        const double x = iterates.at(r, v);
        lo = std::min(lo, x);
        hi = std::max(hi, x);
      }
      total += hi - lo;
    }
    out.spread[e] = total;
  }
  return out;
}

HyperedgeDistances hyperedge_distances(const Hypergraph& h, const RelaxationConfig& cfg,
                                       bool literal_unrelaxed) {
  const auto model = bipartite_expand(h);
  RelaxationConfig run_cfg = cfg;
  if (literal_unrelaxed) run_cfg.omega = 1.0;
  return hyperedge_spreads(h, relax(model.graph, run_cfg));
}

std::vector<double> invert_weights(const HyperedgeDistances& d, double eps) {
  std::vector<double> out(d.spread.size());
  std::transform(d.spread.begin(), d.spread.end(), out.begin(),
                 [eps](double s) { return 1.0 / std::max(s, eps); });
  return out;
}

int ubfactor_for(double imbalance) {
  return std::max(1, static_cast<int>(std::floor(50.0 * imbalance + 1e-9)));
}

namespace {

std::filesystem::path make_private_dir(const std::filesystem::path& root) {
  static std::atomic<unsigned> counter{0};
  const auto base = root.empty() ? std::filesystem::temp_directory_path() : root;
  std::random_device rd;
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::ostringstream name;
    name << "algdist-hpart-" << ::getpid() << '-' << counter++ << '-' << std::hex << rd();
    const auto dir = base / name.str();
    if (std::filesystem::create_directories(dir)) return dir;
  }
  throw std::runtime_error("cannot create a temporary directory under " + base.string());
}

std::string substitute_seed(std::string arg, std::uint64_t seed) {
  const std::string token = "{seed}";
  for (auto pos = arg.find(token); pos != std::string::npos; pos = arg.find(token)) {
    arg.replace(pos, token.size(), std::to_string(seed));
  }
  return arg;
}

}  // namespace

ExternalPartitionResult external_partition(const Hypergraph& h, std::span<const double> weights,
                                           const ExternalPartitionerOptions& opts,
                                           std::uint64_t seed) {
  namespace fs = std::filesystem;
  std::error_code ec;
  const fs::path exe = fs::absolute(opts.executable, ec);
  if (opts.executable.empty() || ec || !fs::is_regular_file(exe) ||
      ::access(exe.c_str(), X_OK) != 0) {
    throw PartitionerError(PartitionerError::Kind::Configuration,
                           "partitioner executable '" + opts.executable.string() +
                               "' not found or not executable; omit --partitioner to use the "
                               "built-in fallback bisector");
  }
  if (weights.size() != h.num_hyperedges()) throw std::invalid_argument("weight count mismatch");

  const fs::path dir = make_private_dir(opts.temp_root);
  const std::string input = "input.hgr";
  {
    std::ofstream out(dir / input);
    write_hgr(out, h, integer_weights(weights));
    if (!out) throw std::runtime_error("cannot write " + (dir / input).string());
  }

  std::vector<std::string> argv{exe.string(), input, std::to_string(opts.num_parts),
                                std::to_string(ubfactor_for(opts.imbalance))};
  for (const auto& a : opts.extra_args) argv.push_back(substitute_seed(a, seed));

  ExternalPartitionResult result;
  result.command = format_command(argv);
  const auto proc = run_process(argv, dir, opts.timeout);
  const std::string captured = proc.out + proc.err;
  const std::string kept = " (files kept in " + dir.string() + ")";
  if (proc.timed_out) {
    throw PartitionerError(PartitionerError::Kind::TimedOut,
                           "partitioner timed out: " + result.command + kept, captured);
  }
  if (proc.signaled || proc.exit_code != 0) {
    throw PartitionerError(PartitionerError::Kind::Failed,
                           "partitioner failed (exit " + std::to_string(proc.exit_code) +
                               "): " + result.command + kept,
                           captured);
  }

  const fs::path part_file = dir / (input + ".part." + std::to_string(opts.num_parts));
  try {
    result.partition.part =
        read_partition_file(part_file, static_cast<std::size_t>(h.num_vertices()));
  } catch (const std::exception& e) {
    throw PartitionerError(PartitionerError::Kind::BadOutput,
                           std::string("unreadable partitioner output: ") + e.what() + kept,
                           captured);
  }
  for (int id : result.partition.part) {
    if (id < 0 || id >= opts.num_parts) {
      throw PartitionerError(PartitionerError::Kind::BadOutput,
                             "partitioner returned part id " + std::to_string(id) + kept,
                             captured);
    }
  }
  result.partition.num_parts = opts.num_parts;
  result.partition.imbalance = opts.imbalance;
  result.balanced = is_balanced(result.partition);
  fs::remove_all(dir, ec);
  return result;
}

Partition fallback_bisect(const Hypergraph& h, std::span<const double> weights,
                          const FallbackOptions& opts, std::uint64_t seed) {
  if (weights.size() != h.num_hyperedges()) throw std::invalid_argument("weight count mismatch");
  const auto n = static_cast<std::size_t>(h.num_vertices());
  const auto cap = part_capacity(n, 2, opts.imbalance);
  const std::size_t lo = n > cap ? n - cap : 1;
  const std::size_t hi = std::min(cap, n == 0 ? 0 : n - 1);
  if (n < 2 || std::max<std::size_t>(lo, 1) > hi) {
    throw std::invalid_argument("no 2-way split of " + std::to_string(n) +
                                " vertices satisfies imbalance " + std::to_string(opts.imbalance));
  }

  std::vector<std::vector<VertexId>> pins;
  for (std::size_t e = 0; e < h.num_hyperedges(); ++e) {
    pins.emplace_back(h.pins(e).begin(), h.pins(e).end());
  }
  const Hypergraph reweighted(h.num_vertices(), std::move(pins),
                              std::vector<double>(weights.begin(), weights.end()));
  const auto model = bipartite_expand(reweighted);
  if (!is_connected(model.graph)) {
    throw std::invalid_argument("bipartite model is disconnected");
  }

  std::vector<double> key(n);
  if (model.graph.num_vertices() <= opts.dense_limit) {
    const auto eig = pencil_eigen(model.graph);
    for (std::size_t v = 0; v < n; ++v) key[v] = eig.vectors(static_cast<Eigen::Index>(v), 1);
  } else {
    RelaxationConfig cfg = opts.relax;
    cfg.runs = 1;
    cfg.seed = seed;
    const auto it = relax(model.graph, cfg);
    for (std::size_t v = 0; v < n; ++v) key[v] = it.at(0, static_cast<VertexId>(v));
  }

  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return key[a] < key[b]; });

  // Move vertices into part 0 in order and track the cut incrementally.
  const auto incidence = h.incidence();
  std::vector<std::size_t> in_left(h.num_hyperedges(), 0);
  double cut = 0.0;
  double best_cut = std::numeric_limits<double>::infinity();
  std::size_t best_split = 0;
  const double middle = 0.5 * static_cast<double>(n);
  for (std::size_t s = 1; s <= hi; ++s) {
    for (std::size_t e : incidence[order[s - 1]]) {
      const std::size_t size = h.pins(e).size();
      const bool was_cut = in_left[e] > 0 && in_left[e] < size;
      ++in_left[e];
      const bool is_cut = in_left[e] > 0 && in_left[e] < size;
      if (is_cut != was_cut) cut += is_cut ? weights[e] : -weights[e];
    }
    if (s < lo) continue;
    const bool better = cut < best_cut ||
                        (cut == best_cut && std::abs(static_cast<double>(s) - middle) <
                                                std::abs(static_cast<double>(best_split) - middle));
    if (better) {
      best_cut = cut;
      best_split = s;
    }
  }

  Partition p;
  p.num_parts = 2;
  p.imbalance = opts.imbalance;
  p.part.assign(n, 1);
  for (std::size_t i = 0; i < best_split; ++i) p.part[order[i]] = 0;
  return p;
}

Partitioner make_fallback_partitioner(FallbackOptions opts) {
  return [opts](const Hypergraph& h, std::span<const double> w, std::uint64_t seed) {
    return fallback_bisect(h, w, opts, seed);
  };
}

Partitioner make_external_partitioner(ExternalPartitionerOptions opts) {
  return [opts](const Hypergraph& h, std::span<const double> w, std::uint64_t seed) {
    return external_partition(h, w, opts, seed).partition;
  };
}

double cut_ratio(double numerator, double denominator) {
  if (denominator == 0.0) {
    return numerator == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  }
  return numerator / denominator;
}

HpartReport hpart_experiment(const Hypergraph& h, const HpartExperimentConfig& cfg,
                             const Partitioner& partitioner) {
  if (cfg.repetitions < 1) throw std::invalid_argument("need at least one repetition");
  HpartReport report;
  report.trials.resize(static_cast<std::size_t>(cfg.repetitions));
  parallel_for(cfg.repetitions, cfg.workers, [&](std::int64_t r) {
    RelaxationConfig relax_cfg = cfg.relax;
    relax_cfg.seed = cfg.relax.seed + static_cast<std::uint64_t>(r);
    relax_cfg.workers = 1;
    const auto dist = hyperedge_distances(h, relax_cfg, cfg.literal_unrelaxed);
    const auto surrogate = invert_weights(dist, cfg.eps);

    const Partition plain = partitioner(h, h.weights(), relax_cfg.seed);
    const Partition boosted = partitioner(h, surrogate, relax_cfg.seed);
    HpartTrial t;
    t.seed = relax_cfg.seed;
    t.cut_original = evaluate_cut(h, plain);
    t.cut_surrogate = evaluate_cut(h, boosted);
    t.ratio = cut_ratio(t.cut_original, t.cut_surrogate);
    t.balanced_original = is_balanced(plain);
    t.balanced_surrogate = is_balanced(boosted);
    report.trials[static_cast<std::size_t>(r)] = t;
  });
  for (const auto& t : report.trials) {
    report.mean_ratio += t.ratio;
    report.balance_violations += (t.balanced_original ? 0 : 1) + (t.balanced_surrogate ? 0 : 1);
  }
  report.mean_ratio /= static_cast<double>(cfg.repetitions);
  return report;
}

}  // namespace algdist
