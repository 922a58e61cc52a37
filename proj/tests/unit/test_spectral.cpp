#include "doctest.h"
#include "support.hpp"

#include <cmath>

#include "algdist/relax.hpp"
#include "algdist/spectral.hpp"

using namespace algdist;

TEST_CASE("pencil of P3 and K2") {
  const auto p3 = pencil_eigen(testing::path(3));
  CHECK(p3.mu(0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(p3.mu(1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p3.mu(2) == doctest::Approx(2.0).epsilon(1e-12));
  // D-normalized v2 for d = (1, 2, 1) is (1, 0, -1) / sqrt(2).
  CHECK(p3.vectors(0, 1) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(std::abs(p3.vectors(1, 1)) < 1e-12);
  CHECK(p3.vectors(2, 1) == doctest::Approx(-std::sqrt(0.5)).epsilon(1e-12));
  CHECK_FALSE(p3.disconnected);

  const auto k2 = pencil_eigen(testing::path(2));
  CHECK(k2.mu(0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(k2.mu(1) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("pencil invariants on random graphs") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const VertexId n = 5 + static_cast<VertexId>(seed) * 4;
    const auto g = testing::random_connected(n, static_cast<int>(n), seed);
    const auto eig = pencil_eigen(g);
    const auto L = laplacian_matrix(g);
    const Eigen::MatrixXd D = eig.degrees.asDiagonal();
    CHECK(std::abs(eig.mu(0)) < 1e-10);
    for (Eigen::Index i = 0; i < n; ++i) {
      CHECK(eig.mu(i) >= -1e-10);
      CHECK(eig.mu(i) <= 2.0 + 1e-10);
      const Eigen::VectorXd v = eig.vectors.col(i);
      CHECK((L * v - eig.mu(i) * D * v).norm() <= 1e-8 * L.norm());
      Eigen::Index first = 0;
      while (std::abs(v(first)) < 1e-12) ++first;
      CHECK(v(first) > 0.0);
    }
    const Eigen::MatrixXd gram = eig.vectors.transpose() * D * eig.vectors;
    CHECK((gram - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-8);
    const Eigen::VectorXd v1 = eig.vectors.col(0);
    CHECK((v1.array() - v1(0)).abs().maxCoeff() < 1e-10);
    if (g.num_edges() < static_cast<EdgeId>(n) * (n - 1) / 2) {
      CHECK(eig.mu(1) <= 1.0 + 1e-12);
      CHECK(cutting_point(eig) >= 2.0 / 3.0 - 1e-12);
    }
  }
}

TEST_CASE("disconnected graphs are flagged") {
  const auto g = testing::make_graph(4, {{0, 1, 1.0}, {2, 3, 1.0}});
  CHECK(pencil_eigen(g).disconnected);
  const auto isolated = testing::make_graph(3, {{0, 1, 1.0}});
  CHECK_THROWS_AS(pencil_eigen(isolated), std::invalid_argument);
}

TEST_CASE("expansion coefficients reconstruct the vector") {
  const auto g = testing::random_connected(20, 15, 3);
  const auto eig = pencil_eigen(g);
  const auto x = initial_vectors(20, 1, 3);
  const auto a = expansion_coefficients(eig, x.run(0));
  const Eigen::VectorXd back = eig.vectors * a;
  for (int i = 0; i < 20; ++i) CHECK(back(i) == doctest::Approx(x.at(0, i)).epsilon(1e-10));
}

TEST_CASE("JOR spectrum pairs with the pencil") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = testing::random_connected(40, 50, seed);
    const auto eig = pencil_eigen(g);
    for (double omega : {0.3, 0.5, 0.9}) {
      const auto modes = jor_spectrum(eig, omega);
      const auto dense = dense_eigenvalues(iteration_matrix(g, IterationMethod::JOR, omega));
      std::vector<double> a, b;
      for (const auto& m : modes) {
        CHECK(m.sigma == doctest::Approx(1.0 - omega * eig.mu(m.pencil_index)));
        a.push_back(m.sigma);
      }
      for (auto z : dense) {
        CHECK(std::abs(z.imag()) < 1e-8);
        b.push_back(z.real());
      }
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-8);
      for (std::size_t i = 1; i < modes.size(); ++i)
        CHECK(std::abs(modes[i - 1].sigma) >= std::abs(modes[i].sigma));
    }
  }
}

TEST_CASE("theta curve") {
  const auto p3 = pencil_eigen(testing::path(3));
  const std::vector<double> half{0.5};
  const auto pt = theta_curve(p3, half).front();
  CHECK(pt.theta == doctest::Approx(0.0));
  CHECK(pt.sigma2 == doctest::Approx(0.5));
  CHECK(pt.limit == LimitVector::Second);

  const auto g = testing::random_connected(25, 30, 12);
  const auto eig = pencil_eigen(g);
  REQUIRE_FALSE(has_degenerate_spectrum(eig));
  const double cut = cutting_point(eig);
  CHECK(cut == doctest::Approx(2.0 / (eig.mu(1) + eig.mu_max())));
  const std::vector<double> omegas{cut * 0.5, cut * (1 - 1e-6), cut, cut * (1 + 1e-6),
                                   0.5 * (cut + 2.0 / eig.mu_max()), 2.5 / eig.mu_max()};
  const auto curve = theta_curve(eig, omegas);
  CHECK(curve[0].limit == LimitVector::Second);
  CHECK(curve[0].theta < 1.0);
  CHECK(curve[1].theta > 0.999);
  CHECK(curve[1].theta <= 1.0);
  CHECK(curve[1].limit == LimitVector::Second);
  CHECK(curve[2].at_cutting_point);
  CHECK(curve[2].limit == LimitVector::Undefined);
  CHECK(curve[3].theta > 0.999);
  CHECK(curve[3].limit == LimitVector::Last);
  CHECK(curve[4].limit == LimitVector::Last);
  CHECK_FALSE(curve[4].out_of_range);
  CHECK(curve[5].out_of_range);
}

TEST_CASE("degenerate spectra are detected") {
  CHECK(has_degenerate_spectrum(pencil_eigen(testing::star(5))));
  CHECK(has_degenerate_spectrum(pencil_eigen(testing::complete(5))));
  CHECK_FALSE(has_degenerate_spectrum(pencil_eigen(testing::path(6))));
  const std::vector<double> omegas{0.5};
  CHECK(theta_curve(pencil_eigen(testing::star(5)), omegas).front().degenerate);
}

TEST_CASE("dense eigen routines") {
  const auto id = dense_eigenvalues(Eigen::MatrixXd::Identity(3, 3));
  for (auto z : id) CHECK(std::abs(z - 1.0) < 1e-12);

  const auto jac = dense_eigenvalues(iteration_matrix(testing::cycle(4), IterationMethod::Jacobi));
  std::vector<double> re;
  for (auto z : jac) re.push_back(z.real());
  std::sort(re.begin(), re.end());
  const std::vector<double> expect{-1.0, 0.0, 0.0, 1.0};
  for (int i = 0; i < 4; ++i) CHECK(std::abs(re[i] - expect[i]) < 1e-8);

  const auto jor = dense_eigenvalues(iteration_matrix(testing::path(3), IterationMethod::JOR, 0.5));
  re.clear();
  for (auto z : jor) re.push_back(z.real());
  std::sort(re.begin(), re.end());
  CHECK(std::abs(re[0]) < 1e-12);
  CHECK(std::abs(re[1] - 0.5) < 1e-12);
  CHECK(std::abs(re[2] - 1.0) < 1e-12);

  Eigen::MatrixXd bad = Eigen::MatrixXd::Identity(2, 2);
  bad(0, 1) = std::nan("");
  CHECK_THROWS_AS(dense_eigenvalues(bad), std::invalid_argument);

  Eigen::MatrixXd sym(2, 2);
  sym << 2, 1, 1, 2;
  const auto se = dense_symmetric_eigen(sym);
  CHECK(se.values(0) == doctest::Approx(1.0));
  CHECK(se.values(1) == doctest::Approx(3.0));
  CHECK(spectral_radius(sym) == doctest::Approx(3.0));
}
