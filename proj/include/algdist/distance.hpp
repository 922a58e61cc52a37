#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "algdist/graph.hpp"
#include "algdist/relax.hpp"

namespace algdist {

inline constexpr double kInfinityNorm = std::numeric_limits<double>::infinity();

/// Configuration a DistanceField was computed with.
struct DistanceMeta {
  int sweeps = 0;
  int runs = 0;
  double p = kInfinityNorm;
  double omega = 0.5;
  std::uint64_t seed = 0;
};

/// Algebraic distances for a set of vertex pairs.
struct DistanceField {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::vector<double> values;
  DistanceMeta meta;
};

/// Extended p-normed algebraic distance between i and j over all runs.
/// p = kInfinityNorm takes the maximum. Throws for p < 1.
double pair_distance(const IterateSet& iterates, VertexId i, VertexId j, double p);

/// One distance per edge of g, in EdgeId order.
DistanceField edge_distances(const Graph& g, const IterateSet& iterates, double p,
                             int workers = 1);

/// Relaxes g with cfg and returns the edge distances.
DistanceField compute_edge_distances(const Graph& g, const RelaxationConfig& cfg, double p);

/// s / sigma2^k. Throws when |sigma2| is below 1e-12.
double normalized_distance(double s, double sigma2, int k);

/// Parses "1", "2", "inf", ... into a norm exponent.
double parse_norm(const std::string& text);
std::string format_norm(double p);

}  // namespace algdist
