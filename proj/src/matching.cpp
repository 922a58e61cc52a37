#include "algdist/matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "algdist/parallel.hpp"

namespace algdist {

namespace {

void require_edge_weights(const Graph& g, std::span<const double> weights) {
  if (weights.size() != static_cast<std::size_t>(g.num_edges())) {
    throw std::invalid_argument("need one weight per edge");
  }
  for (double w : weights) {
    if (!std::isfinite(w)) throw std::invalid_argument("edge weights must be finite");
  }
}

Matching finish(const Graph& g, std::vector<EdgeId> edges, std::span<const double> weights) {
  std::sort(edges.begin(), edges.end());
  Matching m;
  for (EdgeId e : edges) {
    m.weight_original += g.edge(e).weight;
    m.weight_surrogate += weights[static_cast<std::size_t>(e)];
  }
  m.edges = std::move(edges);
  return m;
}

double ratio(double with, double without) {
  if (without == 0.0) return with == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  return with / without;
}

}  // namespace

SurrogateWeights matching_preprocess(const Graph& g, const DistanceField& dist, double eps) {
  if (dist.values.size() != static_cast<std::size_t>(g.num_edges())) {
    throw std::invalid_argument("distance field must cover every edge");
  }
  SurrogateWeights out;
  out.vertex_score.assign(static_cast<std::size_t>(g.num_vertices()), 0.0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    double a = 0.0;
    for (EdgeId e : g.incident_edges(v)) {
      a += 1.0 / std::max(dist.values[static_cast<std::size_t>(e)], eps);
    }
    out.vertex_score[v] = a;
  }
  out.edge_weight.resize(static_cast<std::size_t>(g.num_edges()));
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const auto& e = g.edge(id);
    out.edge_weight[static_cast<std::size_t>(id)] = out.vertex_score[e.u] / g.degree(e.u) +
                                                    out.vertex_score[e.v] / g.degree(e.v);
  }
  return out;
}

Matching greedy_matching(const Graph& g, std::span<const double> weights) {
  require_edge_weights(g, weights);
  std::vector<EdgeId> order(static_cast<std::size_t>(g.num_edges()));
  std::iota(order.begin(), order.end(), EdgeId{0});
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    return weights[static_cast<std::size_t>(a)] > weights[static_cast<std::size_t>(b)];
  });
  std::vector<char> used(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<EdgeId> chosen;
  for (EdgeId id : order) {
    const auto& e = g.edge(id);
    if (used[e.u] || used[e.v]) continue;
    used[e.u] = used[e.v] = 1;
    chosen.push_back(id);
  }
  return finish(g, std::move(chosen), weights);
}

Matching path_growing_matching(const Graph& g, std::span<const double> weights) {
  require_edge_weights(g, weights);
  std::vector<char> removed(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<EdgeId> side[2];
  double side_weight[2] = {0.0, 0.0};
  int current = 0;
  for (VertexId start = 0; start < g.num_vertices(); ++start) {
    VertexId x = start;
    while (!removed[x]) {
      EdgeId best = -1;
      VertexId next = -1;
      const auto nbrs = g.neighbors(x);
      const auto ids = g.incident_edges(x);
      for (std::size_t t = 0; t < nbrs.size(); ++t) {
        if (removed[nbrs[t]]) continue;
        const EdgeId id = ids[t];
        const double w = weights[static_cast<std::size_t>(id)];
        if (best < 0 || w > weights[static_cast<std::size_t>(best)] ||
            (w == weights[static_cast<std::size_t>(best)] && id < best)) {
          best = id;
          next = nbrs[t];
        }
      }
      removed[x] = 1;
      if (best < 0) break;
      side[current].push_back(best);
      side_weight[current] += weights[static_cast<std::size_t>(best)];
      current = 1 - current;
      x = next;
    }
  }
  const int pick = side_weight[1] > side_weight[0] ? 1 : 0;
  return finish(g, std::move(side[pick]), weights);
}

Matching brute_force_matching(const Graph& g, std::span<const double> weights) {
  require_edge_weights(g, weights);
  if (g.num_edges() > kBruteForceEdgeLimit) {
    throw std::invalid_argument("brute-force matching limited to " +
                                std::to_string(kBruteForceEdgeLimit) + " edges");
  }
  std::vector<char> used(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<EdgeId> current;
  std::vector<EdgeId> best;
  double best_weight = 0.0;

  auto search = [&](auto&& self, EdgeId next, double weight) -> void {
    if (next == g.num_edges()) {
      if (weight > best_weight) {
        best_weight = weight;
        best = current;
      }
      return;
    }
    const auto& e = g.edge(next);
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = 1;
      current.push_back(next);
      self(self, next + 1, weight + weights[static_cast<std::size_t>(next)]);
      current.pop_back();
      used[e.u] = used[e.v] = 0;
    }
    self(self, next + 1, weight);
  };
  search(search, 0, 0.0);
  return finish(g, std::move(best), weights);
}

bool is_valid_matching(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<char> used(static_cast<std::size_t>(g.num_vertices()), 0);
  for (EdgeId id : edges) {
    if (id < 0 || id >= g.num_edges()) return false;
    const auto& e = g.edge(id);
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

bool is_maximal_matching(const Graph& g, std::span<const EdgeId> edges) {
  if (!is_valid_matching(g, edges)) return false;
  std::vector<char> used(static_cast<std::size_t>(g.num_vertices()), 0);
  for (EdgeId id : edges) used[g.edge(id).u] = used[g.edge(id).v] = 1;
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const WeightedEdge& e) { return !used[e.u] && !used[e.v]; });
}

MatchingAlgorithm parse_matching_algorithm(const std::string& name) {
  if (name == "greedy") return MatchingAlgorithm::Greedy;
  if (name == "path" || name == "path-growing") return MatchingAlgorithm::PathGrowing;
  throw std::invalid_argument("unknown matching algorithm '" + name + "'");
}

std::string to_string(MatchingAlgorithm algo) {
  return algo == MatchingAlgorithm::Greedy ? "greedy" : "path-growing";
}

Matching run_matching(const Graph& g, MatchingAlgorithm algo, std::span<const double> weights) {
  return algo == MatchingAlgorithm::Greedy ? greedy_matching(g, weights)
                                           : path_growing_matching(g, weights);
}

MatchingTrial compare_matchings(const Graph& g, MatchingAlgorithm algo,
                                std::span<const double> surrogate) {
  const auto original = g.edge_weights();
  const Matching without = run_matching(g, algo, original);
  const Matching with = run_matching(g, algo, surrogate);
  MatchingTrial t;
  t.weight_without = without.weight_original;
  t.weight_with = with.weight_original;
  t.size_without = without.size();
  t.size_with = with.size();
  t.weight_ratio = ratio(t.weight_with, t.weight_without);
  t.cardinality_ratio =
      ratio(static_cast<double>(t.size_with), static_cast<double>(t.size_without));
  return t;
}

MatchingReport matching_experiment(const Graph& g, const MatchingExperimentConfig& cfg) {
  if (cfg.repetitions < 1) throw std::invalid_argument("need at least one repetition");
  if (!is_connected(g)) throw std::invalid_argument("graph is not connected");

  MatchingReport report;
  report.trials.resize(static_cast<std::size_t>(cfg.repetitions));
  parallel_for(cfg.repetitions, cfg.workers, [&](std::int64_t r) {
    RelaxationConfig relax_cfg = cfg.relax;
    relax_cfg.seed = cfg.relax.seed + static_cast<std::uint64_t>(r);
    relax_cfg.workers = 1;
    const auto dist = compute_edge_distances(g, relax_cfg, cfg.p);
    auto surrogate = matching_preprocess(g, dist, cfg.eps).edge_weight;
    if (cfg.invert_surrogate) {
      for (double& w : surrogate) w = 1.0 / w;
    }
    auto trial = compare_matchings(g, cfg.algorithm, surrogate);
    trial.seed = relax_cfg.seed;
    report.trials[static_cast<std::size_t>(r)] = trial;
  });
  for (const auto& t : report.trials) {
    report.mean_weight_ratio += t.weight_ratio;
    report.mean_cardinality_ratio += t.cardinality_ratio;
  }
  report.mean_weight_ratio /= static_cast<double>(cfg.repetitions);
  report.mean_cardinality_ratio /= static_cast<double>(cfg.repetitions);
  return report;
}

}  // namespace algdist
