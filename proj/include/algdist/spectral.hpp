#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "algdist/graph.hpp"

namespace algdist {

/// Eigen-pairs of the pencil (L, D), i.e. L v = mu D v.
///
/// Eigenvalues ascend; eigenvectors (columns of `vectors`) are D-orthonormal
/// and signed so their first nonzero entry is positive.
struct PencilEigen {
  Eigen::VectorXd mu;
  Eigen::MatrixXd vectors;
  Eigen::VectorXd degrees;
  bool disconnected = false;  // mu_2 numerically zero

  Eigen::Index size() const { return mu.size(); }
  double mu_max() const { return mu(mu.size() - 1); }
};

/// Dense oracle; throws for graphs above kDenseVertexLimit or with isolated
/// vertices.
PencilEigen pencil_eigen(const Graph& g);

/// Coefficients of x in the pencil eigenbasis: a = V^T D x.
Eigen::VectorXd expansion_coefficients(const PencilEigen& eig, std::span<const double> x);

/// Eigenvalue of H_JOR paired with the pencil eigenvector it belongs to.
struct JorMode {
  double sigma;
  Eigen::Index pencil_index;
};

/// sigma_i = 1 - omega mu_i, sorted by |sigma| descending (ties: pencil order).
std::vector<JorMode> jor_spectrum(const PencilEigen& eig, double omega);

/// Which pencil eigenvector the normalized distances converge to.
enum class LimitVector { Second, Last, Undefined };

struct ThetaPoint {
  double omega = 0.0;
  double theta = 0.0;
  double sigma2 = 0.0;   // second-largest-magnitude eigenvalue of H_JOR
  LimitVector limit = LimitVector::Undefined;
  bool at_cutting_point = false;  // omega == 2 / (mu_2 + mu_n)
  bool degenerate = false;        // mu_2 == mu_3 or mu_{n-1} == mu_n
  bool out_of_range = false;      // omega outside (0, 2 / mu_n)
};

/// 2 / (mu_2 + mu_n).
double cutting_point(const PencilEigen& eig);

/// True when mu_2 == mu_3 or mu_{n-1} == mu_n (relative tolerance 1e-8).
bool has_degenerate_spectrum(const PencilEigen& eig);

/// Convergence factor theta(omega) of the normalized distances.
std::vector<ThetaPoint> theta_curve(const PencilEigen& eig, std::span<const double> omegas);

/// Eigenvalues of a general dense matrix. Throws on non-finite entries.
std::vector<std::complex<double>> dense_eigenvalues(const Eigen::MatrixXd& m);

struct SymmetricEigen {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;
};
SymmetricEigen dense_symmetric_eigen(const Eigen::MatrixXd& m);

double spectral_radius(const Eigen::MatrixXd& m);

}  // namespace algdist
