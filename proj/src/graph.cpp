#include "algdist/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace algdist {

Graph Graph::from_edges(VertexId num_vertices, std::span<const WeightedEdge> edges) {
  if (num_vertices < 0) throw std::invalid_argument("negative vertex count");

  std::vector<WeightedEdge> canon;
  canon.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= num_vertices || e.v < 0 || e.v >= num_vertices) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                  ") out of range for " + std::to_string(num_vertices) +
                                  " vertices");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    }
    if (!std::isfinite(e.weight) || e.weight < 0.0) {
      throw std::invalid_argument("edge weight must be finite and nonnegative");
    }
    canon.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.weight});
  }
  std::stable_sort(canon.begin(), canon.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });

  Graph g;
  for (std::size_t i = 0; i < canon.size();) {
    WeightedEdge merged = canon[i];
    std::size_t j = i + 1;
    for (; j < canon.size() && canon[j].u == merged.u && canon[j].v == merged.v; ++j) {
      merged.weight += canon[j].weight;
    }
    if (merged.weight > 0.0) g.edges_.push_back(merged);
    i = j;
  }

  g.offsets_.assign(static_cast<std::size_t>(num_vertices) + 1, 0);
  for (const auto& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());

  const auto slots = static_cast<std::size_t>(g.offsets_.back());
  g.targets_.resize(slots);
  g.weights_.resize(slots);
  g.edge_ids_.resize(slots);
  std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const auto& e = g.edges_[static_cast<std::size_t>(id)];
    for (auto [from, to] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      const auto slot = static_cast<std::size_t>(cursor[from]++);
      g.targets_[slot] = to;
      g.weights_[slot] = e.weight;
      g.edge_ids_[slot] = id;
    }
  }
  // Sort each adjacency list by neighbor id.
  for (VertexId v = 0; v < num_vertices; ++v) {
    auto first = g.offsets_[v];
    auto last = g.offsets_[v + 1];
    std::vector<std::size_t> order(static_cast<std::size_t>(last - first));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return g.targets_[first + a] < g.targets_[first + b];
    });
    std::vector<VertexId> t(order.size());
    std::vector<double> w(order.size());
    std::vector<EdgeId> ids(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      t[k] = g.targets_[first + order[k]];
      w[k] = g.weights_[first + order[k]];
      ids[k] = g.edge_ids_[first + order[k]];
    }
    std::copy(t.begin(), t.end(), g.targets_.begin() + first);
    std::copy(w.begin(), w.end(), g.weights_.begin() + first);
    std::copy(ids.begin(), ids.end(), g.edge_ids_.begin() + first);
  }

  g.weighted_degree_.assign(static_cast<std::size_t>(num_vertices), 0.0);
  for (VertexId v = 0; v < num_vertices; ++v) {
    double sum = 0.0;
    for (double w : g.neighbor_weights(v)) sum += w;
    g.weighted_degree_[v] = sum;
  }
  return g;
}

std::vector<double> Graph::edge_weights() const {
  std::vector<double> w(edges_.size());
  std::transform(edges_.begin(), edges_.end(), w.begin(),
                 [](const WeightedEdge& e) { return e.weight; });
  return w;
}

std::vector<VertexId> connected_components(const Graph& g) {
  const VertexId n = g.num_vertices();
  std::vector<VertexId> label(static_cast<std::size_t>(n), -1);
  std::vector<VertexId> stack;
  VertexId next = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId u : g.neighbors(v)) {
        if (label[u] < 0) {
          label[u] = next;
          stack.push_back(u);
        }
      }
    }
    ++next;
  }
  return label;
}

bool is_connected(const Graph& g) {
  const auto label = connected_components(g);
  return std::all_of(label.begin(), label.end(), [](VertexId l) { return l == 0; });
}

bool is_bipartite(const Graph& g) {
  const VertexId n = g.num_vertices();
  std::vector<signed char> color(static_cast<std::size_t>(n), -1);
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId u : g.neighbors(v)) {
        if (color[u] < 0) {
          color[u] = static_cast<signed char>(1 - color[v]);
          stack.push_back(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

VertexId largest_label(const std::vector<VertexId>& label) {
  if (label.empty()) return -1;
  const VertexId count = *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::int64_t> size(static_cast<std::size_t>(count), 0);
  for (VertexId l : label) ++size[l];
  return static_cast<VertexId>(std::max_element(size.begin(), size.end()) - size.begin());
}

}  // namespace

ComponentExtraction largest_connected_component(const Graph& g) {
  const auto label = connected_components(g);
  const VertexId keep = largest_label(label);
  ComponentExtraction out;
  std::vector<VertexId> new_id(label.size(), -1);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (label[v] == keep) {
      new_id[v] = static_cast<VertexId>(out.original_id.size());
      out.original_id.push_back(v);
    }
  }
  std::vector<WeightedEdge> kept;
  for (const auto& e : g.edges()) {
    if (label[e.u] == keep) kept.push_back({new_id[e.u], new_id[e.v], e.weight});
  }
  out.graph = Graph::from_edges(static_cast<VertexId>(out.original_id.size()), kept);
  return out;
}

Hypergraph::Hypergraph(VertexId num_vertices, std::vector<std::vector<VertexId>> hyperedges,
                       std::vector<double> weights)
    : num_vertices_(num_vertices), hyperedges_(std::move(hyperedges)), weights_(std::move(weights)) {
  if (num_vertices_ < 0) throw std::invalid_argument("negative vertex count");
  if (weights_.size() != hyperedges_.size()) {
    throw std::invalid_argument("hyperedge weight count does not match hyperedge count");
  }
  std::vector<std::size_t> seen(static_cast<std::size_t>(num_vertices_), 0);
  for (std::size_t h = 0; h < hyperedges_.size(); ++h) {
    if (hyperedges_[h].empty()) {
      throw std::invalid_argument("hyperedge " + std::to_string(h) + " is empty");
    }
    if (!std::isfinite(weights_[h]) || weights_[h] < 0.0) {
      throw std::invalid_argument("hyperedge weight must be finite and nonnegative");
    }
    for (VertexId v : hyperedges_[h]) {
      if (v < 0 || v >= num_vertices_) {
        throw std::invalid_argument("hyperedge " + std::to_string(h) + " has vertex " +
                                    std::to_string(v) + " out of range");
      }
      if (seen[v] == h + 1) {
        throw std::invalid_argument("hyperedge " + std::to_string(h) + " repeats vertex " +
                                    std::to_string(v));
      }
      seen[v] = h + 1;
    }
  }
}

std::size_t Hypergraph::num_pins() const {
  std::size_t total = 0;
  for (const auto& h : hyperedges_) total += h.size();
  return total;
}

std::vector<std::vector<std::size_t>> Hypergraph::incidence() const {
  std::vector<std::vector<std::size_t>> inc(static_cast<std::size_t>(num_vertices_));
  for (std::size_t h = 0; h < hyperedges_.size(); ++h) {
    for (VertexId v : hyperedges_[h]) inc[v].push_back(h);
  }
  return inc;
}

BipartiteModel bipartite_expand(const Hypergraph& h) {
  BipartiteModel model;
  model.num_vertices = h.num_vertices();
  model.num_hyperedges = h.num_hyperedges();
  std::vector<WeightedEdge> edges;
  edges.reserve(h.num_pins());
  for (std::size_t e = 0; e < h.num_hyperedges(); ++e) {
    for (VertexId v : h.pins(e)) {
      edges.push_back({model.vertex_node(v), model.hyperedge_node(e), h.weight(e)});
    }
  }
  model.graph = Graph::from_edges(
      h.num_vertices() + static_cast<VertexId>(h.num_hyperedges()), edges);
  return model;
}

HypergraphExtraction largest_connected_component(const Hypergraph& h) {
  const auto model = bipartite_expand(h);
  const auto label = connected_components(model.graph);
  const VertexId keep = largest_label(label);

  HypergraphExtraction out;
  std::vector<VertexId> new_id(static_cast<std::size_t>(h.num_vertices()), -1);
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (label[model.vertex_node(v)] == keep) {
      new_id[v] = static_cast<VertexId>(out.original_vertex.size());
      out.original_vertex.push_back(v);
    }
  }
  std::vector<std::vector<VertexId>> pins;
  std::vector<double> weights;
  for (std::size_t e = 0; e < h.num_hyperedges(); ++e) {
    if (label[model.hyperedge_node(e)] != keep) continue;
    std::vector<VertexId> p;
    for (VertexId v : h.pins(e)) p.push_back(new_id[v]);
    pins.push_back(std::move(p));
    weights.push_back(h.weight(e));
    out.original_hyperedge.push_back(e);
  }
  out.hypergraph = Hypergraph(static_cast<VertexId>(out.original_vertex.size()), std::move(pins),
                              std::move(weights));
  return out;
}

}  // namespace algdist
