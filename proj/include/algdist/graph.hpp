#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace algdist {

using VertexId = std::int32_t;
using EdgeId = std::int64_t;

/// An undirected weighted edge. Vertex ids are 0-based.
struct WeightedEdge {
  VertexId u;
  VertexId v;
  double weight;
};

/// Weighted simple undirected graph in compressed sparse adjacency form.
///
/// Every undirected edge {u, v} with u < v gets an edge id; edges are numbered
/// in lexicographic (u, v) order, so per-edge arrays (distances, surrogate
/// weights) can be indexed by EdgeId. Each adjacency slot also records the id
/// of the edge it belongs to.
///
/// Instances are immutable after construction and safe to share across threads.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on `num_vertices` vertices. Duplicate (u, v) entries are
  /// summed, zero-weight edges are dropped. Throws std::invalid_argument on
  /// self-loops, out-of-range ids, negative or non-finite weights.
  static Graph from_edges(VertexId num_vertices, std::span<const WeightedEdge> edges);

  VertexId num_vertices() const { return static_cast<VertexId>(offsets_.size()) - 1; }
  EdgeId num_edges() const { return static_cast<EdgeId>(edges_.size()); }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::span<const double> neighbor_weights(VertexId v) const {
    return {weights_.data() + offsets_[v], weights_.data() + offsets_[v + 1]};
  }
  std::span<const EdgeId> incident_edges(VertexId v) const {
    return {edge_ids_.data() + offsets_[v], edge_ids_.data() + offsets_[v + 1]};
  }

  /// Unweighted degree (number of incident edges).
  VertexId degree(VertexId v) const { return static_cast<VertexId>(offsets_[v + 1] - offsets_[v]); }
  /// Weighted degree d_vv = sum of incident edge weights.
  double weighted_degree(VertexId v) const { return weighted_degree_[v]; }
  std::span<const double> weighted_degrees() const { return weighted_degree_; }

  /// Canonical edge list (u < v), indexed by EdgeId.
  std::span<const WeightedEdge> edges() const { return edges_; }
  const WeightedEdge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

  /// Edge weights indexed by EdgeId.
  std::vector<double> edge_weights() const;

 private:
  std::vector<std::int64_t> offsets_{0};
  std::vector<VertexId> targets_;
  std::vector<double> weights_;
  std::vector<EdgeId> edge_ids_;
  std::vector<double> weighted_degree_;
  std::vector<WeightedEdge> edges_;
};

bool is_connected(const Graph& g);

/// True iff every connected component admits a 2-coloring.
bool is_bipartite(const Graph& g);

/// Component label per vertex, labels numbered 0.. in order of first vertex.
std::vector<VertexId> connected_components(const Graph& g);

/// Induced subgraph on the largest connected component (ties: lowest label).
struct ComponentExtraction {
  Graph graph;
  std::vector<VertexId> original_id;  // new id -> old id
};
ComponentExtraction largest_connected_component(const Graph& g);

/// Hypergraph with weighted hyperedges. Vertex ids are 0-based.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Throws std::invalid_argument on empty hyperedges, ids outside
  /// [0, num_vertices), repeated ids inside one hyperedge, or negative weights.
  Hypergraph(VertexId num_vertices, std::vector<std::vector<VertexId>> hyperedges,
             std::vector<double> weights);

  VertexId num_vertices() const { return num_vertices_; }
  std::size_t num_hyperedges() const { return hyperedges_.size(); }
  std::span<const VertexId> pins(std::size_t h) const { return hyperedges_[h]; }
  double weight(std::size_t h) const { return weights_[h]; }
  std::span<const double> weights() const { return weights_; }
  std::size_t num_pins() const;

  /// Per-vertex list of incident hyperedges.
  std::vector<std::vector<std::size_t>> incidence() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  VertexId num_vertices_ = 0;
  std::vector<std::vector<VertexId>> hyperedges_;
  std::vector<double> weights_;
};

/// Bipartite model of a hypergraph: one node per vertex (ids 0..nv-1) followed
/// by one node per hyperedge (ids nv..nv+|E|-1); each pin becomes an edge of
/// the hyperedge's weight.
struct BipartiteModel {
  Graph graph;
  VertexId num_vertices = 0;
  std::size_t num_hyperedges = 0;

  VertexId vertex_node(VertexId v) const { return v; }
  VertexId hyperedge_node(std::size_t h) const {
    return num_vertices + static_cast<VertexId>(h);
  }
  bool is_vertex_node(VertexId node) const { return node < num_vertices; }
};

BipartiteModel bipartite_expand(const Hypergraph& h);

/// Restriction of a hypergraph to the largest connected component of its
/// bipartite model.
struct HypergraphExtraction {
  Hypergraph hypergraph;
  std::vector<VertexId> original_vertex;
  std::vector<std::size_t> original_hyperedge;
};
HypergraphExtraction largest_connected_component(const Hypergraph& h);

}  // namespace algdist
