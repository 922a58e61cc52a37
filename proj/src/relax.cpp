#include "algdist/relax.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "algdist/parallel.hpp"

namespace algdist {

namespace {

void require_omega(double omega) {
  if (!(omega > 0.0 && omega < 2.0)) {
    throw std::invalid_argument("omega must lie in (0, 2), got " + std::to_string(omega));
  }
}

void require_no_isolated(const Graph& g) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!(g.weighted_degree(v) > 0.0)) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " is isolated (zero weighted degree)");
    }
  }
}

void require_dense(const Graph& g) {
  if (g.num_vertices() > kDenseVertexLimit) {
    throw std::invalid_argument("graph too large for dense routines (" +
                                std::to_string(g.num_vertices()) + " vertices)");
  }
}

inline double sweep_entry(const Graph& g, std::span<const double> x, double omega, VertexId i) {
  const auto nbrs = g.neighbors(i);
  const auto w = g.neighbor_weights(i);
  double acc = 0.0;
  for (std::size_t t = 0; t < nbrs.size(); ++t) acc += w[t] * x[nbrs[t]];
  return (1.0 - omega) * x[i] + omega * (acc / g.weighted_degree(i));
}

double norm2(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

}  // namespace

IterateSet IterateSet::from_vector(std::span<const double> x) {
  IterateSet set(static_cast<VertexId>(x.size()), 1);
  std::copy(x.begin(), x.end(), set.run(0).begin());
  return set;
}

IterateSet initial_vectors(VertexId num_vertices, int runs, std::uint64_t seed) {
  if (runs < 1) throw std::invalid_argument("need at least one run");
  IterateSet set(num_vertices, runs);
  std::mt19937_64 gen(seed);
  for (double& v : set.data()) {
    v = static_cast<double>(gen() >> 11) * 0x1.0p-53 - 0.5;
  }
  return set;
}

std::vector<double> jor_sweep(const Graph& g, std::span<const double> x, double omega) {
  require_omega(omega);
  if (x.size() != static_cast<std::size_t>(g.num_vertices())) {
    throw std::invalid_argument("vector length does not match vertex count");
  }
  require_no_isolated(g);
  std::vector<double> out(x.size());
  for (VertexId i = 0; i < g.num_vertices(); ++i) out[i] = sweep_entry(g, x, omega, i);
  return out;
}

void center(IterateSet& iterates) {
  for (int r = 0; r < iterates.num_runs(); ++r) {
    auto x = iterates.run(r);
    if (x.empty()) continue;
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(x.size());
    for (double& v : x) v -= mean;
  }
}

IterateSet relax_from(const Graph& g, IterateSet start, const RelaxationConfig& cfg) {
  require_omega(cfg.omega);
  if (cfg.sweeps < 0) throw std::invalid_argument("sweep count must be nonnegative");
  if (start.num_vertices() != g.num_vertices()) {
    throw std::invalid_argument("initial vectors do not match vertex count");
  }
  if (!is_connected(g)) throw std::invalid_argument("graph is not connected");
  require_no_isolated(g);

  const auto n = static_cast<std::int64_t>(g.num_vertices());
  const int runs = start.num_runs();
  IterateSet next(g.num_vertices(), runs);
  for (int sweep = 0; sweep < cfg.sweeps; ++sweep) {
    const auto cur = start.data();
    auto out = next.data();
    parallel_for_blocks(n * runs, cfg.workers, [&](std::int64_t begin, std::int64_t end) {
      for (std::int64_t idx = begin; idx < end; ++idx) {
        const auto r = static_cast<std::size_t>(idx / n);
        const auto i = static_cast<VertexId>(idx % n);
        const auto x = cur.subspan(r * static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        out[static_cast<std::size_t>(idx)] = sweep_entry(g, x, cfg.omega, i);
      }
    });
    std::swap(start, next);
    if (cfg.center_each_sweep) center(start);
  }
  return start;
}

IterateSet relax(const Graph& g, const RelaxationConfig& cfg) {
  return relax_from(g, initial_vectors(g.num_vertices(), cfg.runs, cfg.seed), cfg);
}

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  require_dense(g);
  const auto n = g.num_vertices();
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    w(e.u, e.v) = e.weight;
    w(e.v, e.u) = e.weight;
  }
  return w;
}

Eigen::MatrixXd laplacian_matrix(const Graph& g) {
  Eigen::MatrixXd l = -adjacency_matrix(g);
  for (VertexId v = 0; v < g.num_vertices(); ++v) l(v, v) = g.weighted_degree(v);
  return l;
}

Eigen::MatrixXd iteration_matrix(const Graph& g, IterationMethod method, double omega) {
  require_no_isolated(g);
  const Eigen::MatrixXd w = adjacency_matrix(g);
  const Eigen::MatrixXd w_lower = w.triangularView<Eigen::StrictlyLower>();
  const Eigen::MatrixXd w_upper = w.triangularView<Eigen::StrictlyUpper>();
  Eigen::VectorXd d(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) d(v) = g.weighted_degree(v);
  const Eigen::MatrixXd dmat = d.asDiagonal();

  switch (method) {
    case IterationMethod::GaussSeidel: {
      const Eigen::MatrixXd lhs = dmat - w_lower;
      return lhs.triangularView<Eigen::Lower>().solve(w_upper);
    }
    case IterationMethod::Jacobi:
      return d.cwiseInverse().asDiagonal() * w;
    case IterationMethod::SOR: {
      require_omega(omega);
      const Eigen::MatrixXd lhs = dmat / omega - w_lower;
      const Eigen::MatrixXd rhs = (1.0 / omega - 1.0) * dmat + w_upper;
      return lhs.triangularView<Eigen::Lower>().solve(rhs);
    }
    case IterationMethod::JOR: {
      require_omega(omega);
      const Eigen::MatrixXd rhs = (1.0 / omega - 1.0) * dmat + w;
      return (omega * d.cwiseInverse()).asDiagonal() * rhs;
    }
  }
  throw std::invalid_argument("unknown iteration method");
}

double stability_root(double alpha, int k) {
  if (alpha < 0.0 || k < 0) throw std::invalid_argument("alpha and k must be nonnegative");
  auto residual = [&](double r) {
    return 2.0 * alpha * std::pow(r, 2 * k + 1) * (1.0 + r) - static_cast<double>(k) +
           static_cast<double>(k + 1) * r;
  };
  double lo = 0.0;
  double hi = 1.0;
  if (residual(lo) >= 0.0) return lo;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (residual(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

StabilityReport stability_report(const Graph& g, std::span<const double> x_k,
                                 std::span<const double> x_k1,
                                 std::span<const double> expansion, int k, double omega,
                                 double mu_max) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  if (x_k.size() != n || x_k1.size() != n) {
    throw std::invalid_argument("iterate length does not match vertex count");
  }
  const double nk = norm2(x_k);
  const double nk1 = norm2(x_k1);
  if (nk == 0.0 || nk1 == 0.0) throw std::invalid_argument("iterates must be nonzero");

  StabilityReport rep;
  double dot = 0.0;
  for (std::size_t i = 0; i < n; ++i) dot += x_k[i] * x_k1[i];
  const double cosine = dot / (nk * nk1);
  rep.angle_defect = std::clamp(1.0 - cosine * cosine, 0.0, 1.0);

  const auto degrees = g.weighted_degrees();
  const auto [dmin, dmax] = std::minmax_element(degrees.begin(), degrees.end());
  rep.kappa = *dmax / *dmin;
  rep.omega_condition = 1.0 - omega * mu_max >= 0.0;

  if (expansion.empty()) return rep;
  if (expansion.size() != n) throw std::invalid_argument("expansion length mismatch");
  const double a1 = expansion[0];
  double largest = 0.0;
  for (double a : expansion) largest = std::max(largest, std::abs(a));
  // Coefficients at rounding level relative to the rest count as zero.
  rep.leading_coefficient_nonzero = std::abs(a1) > 1e-12 * largest;
  if (!rep.leading_coefficient_nonzero) return rep;

  double tail = 0.0;
  for (std::size_t i = 1; i < n; ++i) tail += expansion[i] * expansion[i];
  rep.alpha = tail / (4.0 * a1 * a1);
  rep.root = stability_root(rep.alpha, k);
  const double r2k = std::pow(rep.root, 2 * k);
  rep.f = rep.alpha * r2k * (1.0 - rep.root) * (1.0 - rep.root) /
          (1.0 + rep.alpha * r2k * (1.0 + rep.root) * (1.0 + rep.root));
  const double kf = rep.kappa * rep.f;
  rep.bound_rhs = 4.0 * kf / ((1.0 + kf) * (1.0 + kf));
  rep.f_condition = rep.f <= 1.0 / rep.kappa;
  rep.bound_applies = rep.omega_condition && rep.f_condition;
  return rep;
}

double model_residual(const Graph& g, std::span<const double> x, double mu) {
  if (x.size() != static_cast<std::size_t>(g.num_vertices())) {
    throw std::invalid_argument("vector length does not match vertex count");
  }
  require_no_isolated(g);
  const double nx = norm2(x);
  if (nx == 0.0) throw std::invalid_argument("vector must be nonzero");
  double sum = 0.0;
  for (VertexId i = 0; i < g.num_vertices(); ++i) {
    const auto nbrs = g.neighbors(i);
    const auto w = g.neighbor_weights(i);
    double avg = 0.0;
    for (std::size_t t = 0; t < nbrs.size(); ++t) avg += w[t] * x[nbrs[t]];
    avg /= g.weighted_degree(i);
    const double r = (x[i] - mu * x[i] - avg) / nx;
    sum += r * r;
  }
  return std::sqrt(sum);
}

}  // namespace algdist
