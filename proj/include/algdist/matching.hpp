#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "algdist/distance.hpp"
#include "algdist/graph.hpp"
#include "algdist/relax.hpp"

namespace algdist {

/// A set of vertex-disjoint edges, stored as ascending EdgeIds.
struct Matching {
  std::vector<EdgeId> edges;
  double weight_original = 0.0;
  double weight_surrogate = 0.0;

  std::size_t size() const { return edges.size(); }
};

/// Per-vertex scores a_i and per-edge surrogate weights s'_ij.
struct SurrogateWeights {
  std::vector<double> vertex_score;
  std::vector<double> edge_weight;
};

inline constexpr double kDistanceFloor = 1e-12;

/// a_i = sum over incident edges of 1 / max(rho_ij, eps);
/// s'_ij = a_i / deg_i + a_j / deg_j with deg the unweighted degree.
SurrogateWeights matching_preprocess(const Graph& g, const DistanceField& dist,
                                     double eps = kDistanceFloor);

/// Heaviest-edge-first greedy; ties broken by EdgeId. `weights` is indexed by
/// EdgeId and drives the choices; the result carries both totals.
Matching greedy_matching(const Graph& g, std::span<const double> weights);

/// Path-growing 2-approximation. Paths start at the lowest-id vertex that
/// still has an edge; the heavier (under `weights`) of the two alternating
/// matchings is returned, the first one on ties.
Matching path_growing_matching(const Graph& g, std::span<const double> weights);

inline constexpr EdgeId kBruteForceEdgeLimit = 24;

/// Exact maximum-weight matching by exhaustive search. Throws when the graph
/// has more than kBruteForceEdgeLimit edges.
Matching brute_force_matching(const Graph& g, std::span<const double> weights);

/// True iff the edges are pairwise vertex-disjoint.
bool is_valid_matching(const Graph& g, std::span<const EdgeId> edges);

/// True iff no edge of g can be added without conflict.
bool is_maximal_matching(const Graph& g, std::span<const EdgeId> edges);

enum class MatchingAlgorithm { Greedy, PathGrowing };

MatchingAlgorithm parse_matching_algorithm(const std::string& name);
std::string to_string(MatchingAlgorithm algo);

Matching run_matching(const Graph& g, MatchingAlgorithm algo, std::span<const double> weights);

/// One repetition: the algorithm on original weights and on surrogate weights,
/// both evaluated with the original weights.
struct MatchingTrial {
  std::uint64_t seed = 0;
  double weight_without = 0.0;
  double weight_with = 0.0;
  std::size_t size_without = 0;
  std::size_t size_with = 0;
  double weight_ratio = 1.0;       // with / without
  double cardinality_ratio = 1.0;  // with / without
};

MatchingTrial compare_matchings(const Graph& g, MatchingAlgorithm algo,
                                std::span<const double> surrogate);

struct MatchingExperimentConfig {
  RelaxationConfig relax{};       // relax.seed is the base seed
  double p = kInfinityNorm;
  double eps = kDistanceFloor;
  int repetitions = 20;
  MatchingAlgorithm algorithm = MatchingAlgorithm::Greedy;
  bool invert_surrogate = false;  // greedy on 1 / s' instead of s'
  int workers = 1;                // parallel repetitions
};

struct MatchingReport {
  std::vector<MatchingTrial> trials;
  double mean_weight_ratio = 0.0;
  double mean_cardinality_ratio = 0.0;
};

/// Repetition r uses seed relax.seed + r.
MatchingReport matching_experiment(const Graph& g, const MatchingExperimentConfig& cfg);

}  // namespace algdist
