#include "algdist/distance.hpp"

#include <cmath>
#include <stdexcept>

#include "algdist/parallel.hpp"

namespace algdist {

namespace {

void require_norm(double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("norm exponent p must be >= 1");
}

double pair_distance_unchecked(const IterateSet& it, VertexId i, VertexId j, double p) {
  const int runs = it.num_runs();
  if (std::isinf(p)) {
    double best = 0.0;
    for (int r = 0; r < runs; ++r) best = std::max(best, std::abs(it.at(r, i) - it.at(r, j)));
    return best;
  }
  if (p == 1.0) {
    double sum = 0.0;
    for (int r = 0; r < runs; ++r) sum += std::abs(it.at(r, i) - it.at(r, j));
    return sum;
  }
  if (p == 2.0) {
    double sum = 0.0;
    for (int r = 0; r < runs; ++r) {
      const double d = it.at(r, i) - it.at(r, j);
      sum += d * d;
    }
    return std::sqrt(sum);
  }
  double sum = 0.0;
  for (int r = 0; r < runs; ++r) sum += std::pow(std::abs(it.at(r, i) - it.at(r, j)), p);
  return std::pow(sum, 1.0 / p);
}

}  // namespace

double pair_distance(const IterateSet& iterates, VertexId i, VertexId j, double p) {
  require_norm(p);
  if (i < 0 || j < 0 || i >= iterates.num_vertices() || j >= iterates.num_vertices()) {
    throw std::invalid_argument("vertex id out of range");
  }
  return pair_distance_unchecked(iterates, i, j, p);
}

DistanceField edge_distances(const Graph& g, const IterateSet& iterates, double p, int workers) {
  require_norm(p);
  if (iterates.num_vertices() != g.num_vertices()) {
    throw std::invalid_argument("iterates do not match graph");
  }
  DistanceField field;
  field.meta.p = p;
  field.pairs.reserve(static_cast<std::size_t>(g.num_edges()));
  for (const auto& e : g.edges()) field.pairs.emplace_back(e.u, e.v);
  field.values.resize(field.pairs.size());
  parallel_for(g.num_edges(), workers, [&](std::int64_t e) {
    const auto [u, v] = field.pairs[static_cast<std::size_t>(e)];
    field.values[static_cast<std::size_t>(e)] = pair_distance_unchecked(iterates, u, v, p);
  });
  return field;
}

DistanceField compute_edge_distances(const Graph& g, const RelaxationConfig& cfg, double p) {
  const auto iterates = relax(g, cfg);
  auto field = edge_distances(g, iterates, p, cfg.workers);
  field.meta = {cfg.sweeps, cfg.runs, p, cfg.omega, cfg.seed};
  return field;
}

double normalized_distance(double s, double sigma2, int k) {
  if (std::abs(sigma2) <= 1e-12) {
    throw std::invalid_argument("sigma2 is too close to zero for normalization");
  }
  return s / std::pow(sigma2, k);
}

double parse_norm(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF" || text == "infinity") return kInfinityNorm;
  std::size_t used = 0;
  double p = 0.0;
  try {
    p = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse norm exponent '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument("cannot parse norm exponent '" + text + "'");
  require_norm(p);
  return p;
}

std::string format_norm(double p) {
  if (std::isinf(p)) return "inf";
  if (p == std::floor(p)) return std::to_string(static_cast<long long>(p));
  return std::to_string(p);
}

}  // namespace algdist
