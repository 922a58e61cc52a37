#include "algdist/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "algdist/relax.hpp"

namespace algdist {

namespace {

bool nearly_equal(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

void fix_signs(Eigen::MatrixXd& vectors) {
  for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
    const double scale = vectors.col(c).cwiseAbs().maxCoeff();
    for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
      if (std::abs(vectors(r, c)) > 1e-10 * scale) {
        if (vectors(r, c) < 0.0) vectors.col(c) *= -1.0;
        break;
      }
    }
  }
}

}  // namespace

SymmetricEigen dense_symmetric_eigen(const Eigen::MatrixXd& m) {
  if (!m.allFinite()) throw std::invalid_argument("matrix has non-finite entries");
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw std::runtime_error("symmetric eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

std::vector<std::complex<double>> dense_eigenvalues(const Eigen::MatrixXd& m) {
  if (!m.allFinite()) throw std::invalid_argument("matrix has non-finite entries");
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double spectral_radius(const Eigen::MatrixXd& m) {
  double rho = 0.0;
  for (const auto& z : dense_eigenvalues(m)) rho = std::max(rho, std::abs(z));
  return rho;
}

PencilEigen pencil_eigen(const Graph& g) {
  const Eigen::MatrixXd lap = laplacian_matrix(g);
  const auto n = g.num_vertices();
  Eigen::VectorXd deg(n);
  for (VertexId v = 0; v < n; ++v) {
    deg(v) = g.weighted_degree(v);
    if (!(deg(v) > 0.0)) throw std::invalid_argument("pencil (L, D) needs positive degrees");
  }
  const Eigen::VectorXd inv_sqrt = deg.cwiseSqrt().cwiseInverse();
  const Eigen::MatrixXd normalized = inv_sqrt.asDiagonal() * lap * inv_sqrt.asDiagonal();
  auto sym = dense_symmetric_eigen(0.5 * (normalized + normalized.transpose()));

  PencilEigen eig;
  eig.mu = sym.values;
  eig.vectors = inv_sqrt.asDiagonal() * sym.vectors;
  eig.degrees = deg;
  fix_signs(eig.vectors);
  eig.disconnected = n >= 2 && std::abs(eig.mu(1)) < 1e-10;
  return eig;
}

Eigen::VectorXd expansion_coefficients(const PencilEigen& eig, std::span<const double> x) {
  if (static_cast<Eigen::Index>(x.size()) != eig.size()) {
    throw std::invalid_argument("vector length does not match pencil size");
  }
  const Eigen::Map<const Eigen::VectorXd> xv(x.data(), eig.size());
  return eig.vectors.transpose() * eig.degrees.cwiseProduct(xv);
}

std::vector<JorMode> jor_spectrum(const PencilEigen& eig, double omega) {
  std::vector<JorMode> modes;
  modes.reserve(static_cast<std::size_t>(eig.size()));
  for (Eigen::Index i = 0; i < eig.size(); ++i) modes.push_back({1.0 - omega * eig.mu(i), i});
  std::stable_sort(modes.begin(), modes.end(), [](const JorMode& a, const JorMode& b) {
    return std::abs(a.sigma) > std::abs(b.sigma);
  });
  return modes;
}

double cutting_point(const PencilEigen& eig) {
  if (eig.size() < 2) throw std::invalid_argument("need at least two vertices");
  return 2.0 / (eig.mu(1) + eig.mu_max());
}

bool has_degenerate_spectrum(const PencilEigen& eig) {
  const auto n = eig.size();
  if (n < 4) return false;
  return nearly_equal(eig.mu(1), eig.mu(2), 1e-8) || nearly_equal(eig.mu(n - 2), eig.mu(n - 1), 1e-8);
}

std::vector<ThetaPoint> theta_curve(const PencilEigen& eig, std::span<const double> omegas) {
  const auto n = eig.size();
  if (n < 2) throw std::invalid_argument("need at least two vertices");
  const double cut = cutting_point(eig);
  const bool degenerate = has_degenerate_spectrum(eig);
  constexpr double tol = 1e-12;

  std::vector<ThetaPoint> out;
  out.reserve(omegas.size());
  for (double omega : omegas) {
    ThetaPoint pt;
    pt.omega = omega;
    pt.degenerate = degenerate;
    pt.out_of_range = !(omega > 0.0 && omega * eig.mu_max() < 2.0);

    // Skip the constant mode (mu_1 = 0, sigma = 1).
    std::vector<double> sigma;
    for (Eigen::Index i = 1; i < n; ++i) sigma.push_back(1.0 - omega * eig.mu(i));
    std::stable_sort(sigma.begin(), sigma.end(),
                     [](double a, double b) { return std::abs(a) > std::abs(b); });
    pt.sigma2 = sigma.front();

    if (nearly_equal(omega, cut, tol)) {
      pt.at_cutting_point = true;
      pt.theta = 1.0;
      pt.limit = LimitVector::Undefined;
      out.push_back(pt);
      continue;
    }
    pt.limit = omega < cut ? LimitVector::Second : LimitVector::Last;

    const double lead = std::abs(pt.sigma2);
    if (lead == 0.0) {
      pt.theta = 0.0;
    } else {
      auto next = std::find_if(sigma.begin(), sigma.end(), [&](double s) {
        return !nearly_equal(s, pt.sigma2, tol);
      });
      pt.theta = next == sigma.end() ? 0.0 : std::abs(*next) / lead;
    }
    out.push_back(pt);
  }
  return out;
}

}  // namespace algdist
