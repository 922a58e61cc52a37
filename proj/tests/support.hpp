#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "algdist/graph.hpp"

namespace testing {

using algdist::Graph;
using algdist::Hypergraph;
using algdist::VertexId;
using algdist::WeightedEdge;

inline Graph make_graph(VertexId n, std::vector<WeightedEdge> edges) {
  return Graph::from_edges(n, edges);
}

inline Graph path(VertexId n, double w = 1.0) {
  std::vector<WeightedEdge> e;
  for (VertexId i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, w});
  return make_graph(n, e);
}

inline Graph cycle(VertexId n) {
  std::vector<WeightedEdge> e;
  for (VertexId i = 0; i < n; ++i) e.push_back({i, (i + 1) % n, 1.0});
  return make_graph(n, e);
}

inline Graph complete(VertexId n) {
  std::vector<WeightedEdge> e;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) e.push_back({i, j, 1.0});
  return make_graph(n, e);
}

inline Graph star(VertexId leaves) {
  std::vector<WeightedEdge> e;
  for (VertexId i = 1; i <= leaves; ++i) e.push_back({0, i, 1.0});
  return make_graph(leaves + 1, e);
}

/// Random connected graph: a random spanning tree plus `extra` random edges,
/// weights uniform in [w_lo, w_hi].
inline Graph random_connected(VertexId n, int extra, std::uint64_t seed, double w_lo = 0.5,
                              double w_hi = 2.0) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> weight(w_lo, w_hi);
  std::vector<WeightedEdge> e;
  for (VertexId v = 1; v < n; ++v) {
    std::uniform_int_distribution<VertexId> parent(0, v - 1);
    e.push_back({parent(gen), v, weight(gen)});
  }
  std::uniform_int_distribution<VertexId> any(0, n - 1);
  for (int i = 0; i < extra; ++i) {
    VertexId a = any(gen), b = any(gen);
    if (a != b) e.push_back({a, b, weight(gen)});
  }
  return make_graph(n, e);
}

/// Random hypergraph with a chain of 2-pin hyperedges (so the bipartite model
/// is connected) plus `extra` hyperedges of 2..max_size pins.
inline Hypergraph random_hypergraph(VertexId nv, int extra, int max_size, std::uint64_t seed,
                                    bool unit_weights = false) {
  std::mt19937_64 gen(seed);
  std::vector<std::vector<VertexId>> edges;
  for (VertexId v = 0; v + 1 < nv; ++v) edges.push_back({v, v + 1});
  std::vector<VertexId> ids(static_cast<std::size_t>(nv));
  std::iota(ids.begin(), ids.end(), 0);
  std::uniform_int_distribution<int> size(2, std::min<int>(max_size, nv));
  for (int i = 0; i < extra; ++i) {
    std::shuffle(ids.begin(), ids.end(), gen);
    edges.emplace_back(ids.begin(), ids.begin() + size(gen));
  }
  std::shuffle(edges.begin(), edges.end(), gen);
  std::uniform_int_distribution<int> w(1, 5);
  std::vector<double> weights;
  for (std::size_t i = 0; i < edges.size(); ++i) weights.push_back(unit_weights ? 1.0 : w(gen));
  return Hypergraph(nv, std::move(edges), std::move(weights));
}

/// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("algdist-test-" + tag + "-" + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

  std::filesystem::path write(const std::string& name, const std::string& content,
                              bool executable = false) const {
    const auto p = path_ / name;
    std::ofstream(p) << content;
    if (executable) {
      std::filesystem::permissions(p, std::filesystem::perms::owner_all,
                                   std::filesystem::perm_options::add);
    }
    return p;
  }

 private:
  std::filesystem::path path_;
};

}  // namespace testing
