#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "algdist/graph.hpp"

namespace algdist {

/// Parameters of the JOR relaxation behind every algebraic distance.
struct RelaxationConfig {
  double omega = 0.5;
  int sweeps = 20;          // k
  int runs = 10;            // R
  std::uint64_t seed = 0;
  bool center_each_sweep = false;
  int workers = 1;          // 0 = hardware concurrency; never changes results
};

/// Identity of the initial-vector generator, recorded in run metadata.
inline constexpr std::string_view kInitialVectorGenerator =
    "mt19937_64, 53-bit mantissa, uniform [-0.5, 0.5), run-major";

/// R iterate vectors of length n, stored run-major.
class IterateSet {
 public:
  IterateSet() = default;
  IterateSet(VertexId num_vertices, int runs)
      : n_(num_vertices), runs_(runs),
        data_(static_cast<std::size_t>(num_vertices) * static_cast<std::size_t>(runs), 0.0) {}

  /// Single-run set holding a copy of `x`.
  static IterateSet from_vector(std::span<const double> x);

  VertexId num_vertices() const { return n_; }
  int num_runs() const { return runs_; }

  std::span<double> run(int r) { return {data_.data() + offset(r), static_cast<std::size_t>(n_)}; }
  std::span<const double> run(int r) const {
    return {data_.data() + offset(r), static_cast<std::size_t>(n_)};
  }
  double at(int r, VertexId i) const { return data_[offset(r) + static_cast<std::size_t>(i)]; }
  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }

  friend bool operator==(const IterateSet&, const IterateSet&) = default;

 private:
  std::size_t offset(int r) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_);
  }

  VertexId n_ = 0;
  int runs_ = 0;
  std::vector<double> data_;
};

/// Seeded initial vectors with entries uniform on [-0.5, 0.5).
IterateSet initial_vectors(VertexId num_vertices, int runs, std::uint64_t seed);

/// One JOR sweep: returns (1 - omega) x + omega D^{-1} W x. Reads only `x`.
std::vector<double> jor_sweep(const Graph& g, std::span<const double> x, double omega);

/// Runs cfg.sweeps JOR sweeps on cfg.runs seeded random vectors.
/// Throws std::invalid_argument for disconnected graphs or isolated vertices.
IterateSet relax(const Graph& g, const RelaxationConfig& cfg);

/// Same as relax() but starting from the given vectors; cfg.runs and cfg.seed
/// are ignored.
IterateSet relax_from(const Graph& g, IterateSet start, const RelaxationConfig& cfg);

/// Subtracts the mean from every run (pairwise differences are unchanged).
void center(IterateSet& iterates);

enum class IterationMethod { GaussSeidel, Jacobi, SOR, JOR };

/// Largest graph accepted by the dense (test-scale) routines.
inline constexpr VertexId kDenseVertexLimit = 2000;

Eigen::MatrixXd laplacian_matrix(const Graph& g);
Eigen::MatrixXd adjacency_matrix(const Graph& g);

/// Dense iteration matrix H of the splitting method for L x = 0, with
/// L = D - W_L - W_U. omega is ignored for Gauss-Seidel and Jacobi.
Eigen::MatrixXd iteration_matrix(const Graph& g, IterationMethod method, double omega = 0.5);

/// Diagnostics on how close two successive iterates are to parallel.
struct StabilityReport {
  double angle_defect = 0.0;  // 1 - <x_k/|x_k|, x_k1/|x_k1|>^2
  double bound_rhs = 0.0;     // 4 kappa f_k / (1 + kappa f_k)^2
  double alpha = 0.0;
  double root = 0.0;          // r_k
  double f = 0.0;             // f_k
  double kappa = 1.0;         // max d_ii / min d_ii
  bool omega_condition = false;    // 1 - omega mu_n >= 0
  bool f_condition = false;        // f_k <= 1 / kappa
  bool leading_coefficient_nonzero = false;
  bool bound_applies = false;
};

/// Unique root on [0, 1] of 2 alpha r^{2k+1} (1 + r) = k - (k + 1) r, by
/// bisection to absolute tolerance 1e-12.
double stability_root(double alpha, int k);

/// `expansion` holds the coefficients of x^(0) in the pencil eigenbasis (the
/// first one belongs to the constant eigenvector). Pass an empty span to get
/// only the angle defect and kappa. `mu_max` is the largest pencil eigenvalue.
StabilityReport stability_report(const Graph& g, std::span<const double> x_k,
                                 std::span<const double> x_k1,
                                 std::span<const double> expansion, int k, double omega,
                                 double mu_max);

/// || x - mu x - D^{-1} W x ||_2 for x normalized to unit length.
double model_residual(const Graph& g, std::span<const double> x, double mu);

}  // namespace algdist
