#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "algdist/graph.hpp"
#include "algdist/relax.hpp"

namespace algdist {

/// Assignment of every vertex to a part id in [0, num_parts).
struct Partition {
  std::vector<int> part;
  int num_parts = 2;
  double imbalance = 0.03;  // alpha: |part| <= (1 + alpha) * n / num_parts
};

/// Largest part size allowed by the imbalance factor.
std::size_t part_capacity(std::size_t num_vertices, int num_parts, double imbalance);

/// Every part nonempty and within capacity.
bool is_balanced(const Partition& p);

/// Sum of weights of hyperedges whose pins span at least two parts. Uses the
/// hypergraph's own (original) weights. Throws if the assignment does not
/// cover every vertex with a valid part id.
double evaluate_cut(const Hypergraph& h, const Partition& p);

/// Same, with explicit per-hyperedge weights.
double evaluate_cut(const Hypergraph& h, const Partition& p, std::span<const double> weights);

struct HyperedgeDistances {
  std::vector<double> spread;  // s_h
};

/// Per hyperedge, the sum over runs of max - min of its pins' values. Entry v
/// of each run is read as vertex v, so bipartite-model iterates work directly.
HyperedgeDistances hyperedge_spreads(const Hypergraph& h, const IterateSet& iterates);

/// Relaxes the bipartite model and returns, per hyperedge, the sum over runs
/// of the largest difference between its pins' values. `literal_unrelaxed`
/// replaces cfg.omega by 1 (plain Jacobi averaging). Throws if the bipartite
/// model is disconnected.
HyperedgeDistances hyperedge_distances(const Hypergraph& h, const RelaxationConfig& cfg,
                                       bool literal_unrelaxed = false);

/// 1 / max(s_h, eps).
std::vector<double> invert_weights(const HyperedgeDistances& d, double eps = 1e-12);

/// Failure of the external partitioner, with whatever it printed.
class PartitionerError : public std::runtime_error {
 public:
  enum class Kind { Configuration, Failed, TimedOut, BadOutput };

  PartitionerError(Kind kind, const std::string& what, std::string captured = {})
      : std::runtime_error(what), kind_(kind), captured_(std::move(captured)) {}
  Kind kind() const { return kind_; }
  const std::string& captured_output() const { return captured_; }

 private:
  Kind kind_;
  std::string captured_;
};

struct ExternalPartitionerOptions {
  std::filesystem::path executable;
  /// Appended after "<file> <nparts> <ubfactor>"; "{seed}" is substituted.
  std::vector<std::string> extra_args;
  std::chrono::milliseconds timeout = std::chrono::seconds(300);
  int num_parts = 2;
  double imbalance = 0.03;
  std::filesystem::path temp_root;  // empty = system temp directory
};

struct ExternalPartitionResult {
  Partition partition;
  std::string command;
  bool balanced = false;
};

/// hMetis-style balance factor for a 2-way split: the largest integer
/// percentage not looser than alpha, and at least 1.
int ubfactor_for(double imbalance);

/// Writes h (integer-scaled `weights`) as .hgr into a private temp directory,
/// runs the executable there and reads "<file>.part.<nparts>". The directory
/// is removed on success and kept on failure.
ExternalPartitionResult external_partition(const Hypergraph& h, std::span<const double> weights,
                                           const ExternalPartitionerOptions& opts,
                                           std::uint64_t seed = 0);

struct FallbackOptions {
  double imbalance = 0.03;
  /// Bipartite models up to this many nodes use the dense pencil eigenvector;
  /// larger ones use a centered JOR iterate.
  VertexId dense_limit = 500;
  RelaxationConfig relax{0.5, 200, 1, 0, true, 1};
};

/// Spectral bisection: orders vertices by the second pencil eigenvector of the
/// weighted bipartite model and takes the balance-feasible prefix split with
/// the smallest cut under `weights`. Throws std::invalid_argument when no
/// split satisfies the balance constraint or the model is disconnected.
Partition fallback_bisect(const Hypergraph& h, std::span<const double> weights,
                          const FallbackOptions& opts = {}, std::uint64_t seed = 0);

/// Black-box partitioner: (hypergraph, hyperedge weights, seed) -> partition.
using Partitioner =
    std::function<Partition(const Hypergraph&, std::span<const double>, std::uint64_t)>;

Partitioner make_fallback_partitioner(FallbackOptions opts);
Partitioner make_external_partitioner(ExternalPartitionerOptions opts);

struct HpartTrial {
  std::uint64_t seed = 0;
  double cut_original = 0.0;   // partitioner on original weights
  double cut_surrogate = 0.0;  // partitioner on inverted distances, original weights
  double ratio = 1.0;          // cut_original / cut_surrogate
  bool balanced_original = true;
  bool balanced_surrogate = true;
};

struct HpartExperimentConfig {
  RelaxationConfig relax{};  // relax.seed is the base seed
  double eps = 1e-12;
  int repetitions = 20;
  bool literal_unrelaxed = false;
  int workers = 1;
};

struct HpartReport {
  std::vector<HpartTrial> trials;
  double mean_ratio = 0.0;
  std::size_t balance_violations = 0;
};

/// Repetition r uses seed relax.seed + r for both the relaxation and the
/// partitioner.
HpartReport hpart_experiment(const Hypergraph& h, const HpartExperimentConfig& cfg,
                             const Partitioner& partitioner);

/// Ratio of two cuts with 0/0 = 1.
double cut_ratio(double numerator, double denominator);

}  // namespace algdist
