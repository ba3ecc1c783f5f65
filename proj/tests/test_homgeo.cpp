#include <doctest.h>

#include <numbers>

#include "ptb/catalog.hpp"

using namespace ptb;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("su(n) structure constants") {
  for (int n : {2, 3, 4}) {
    const LieAlgebra g = LieAlgebra::su(n);
    CHECK(g.dim() == n * n - 1);
    CHECK(g.jacobi_residual() < 1e-12);
    CHECK(g.ad_invariance_residual() < 1e-12);
    CHECK(g.antisymmetry_residual() < 1e-12);
  }
  // Coordinates of the basis matrices are the unit vectors.
  const auto B = su_matrices(3);
  for (std::size_t a = 0; a < B.size(); ++a)
    CHECK((su_coords(3, B[a]) - Vec::Unit(8, static_cast<Eigen::Index>(a))).norm() < 1e-14);
}

TEST_CASE("brackets match matrix commutators") {
  const auto B = su_matrices(3);
  const LieAlgebra g = LieAlgebra::su(3);
  const Eigen::MatrixXcd X = B[0] + 2.0 * B[3] - B[7], Y = B[2] - B[6];
  const Vec direct = su_coords(3, X * Y - Y * X);
  CHECK((g.bracket(su_coords(3, X), su_coords(3, Y)) - direct).norm() < 1e-13);
  CHECK((g.ad(su_coords(3, X)) * su_coords(3, Y) - direct).norm() < 1e-13);
}

TEST_CASE("reductive decomposition of the 22-dimensional family") {
  for (long alpha : {1, 4}) {
    const Decomposition D = build_decomposition(build_E_geometry(alpha));
    CHECK(D.h.cols() == 20);
    CHECK(D.n2() == 2);
    CHECK(D.n1() == 20);
    CHECK(D.tangent_dim() == 22);
    CHECK(D.residuals.max() < 1e-12);
    const Mat I = Mat::Identity(42, 42);
    CHECK((D.P_m1 + D.P_m2 + D.P_h - I).norm() < 1e-12);
  }
}

TEST_CASE("flag-manifold base breaks one bracket inclusion") {
  const Decomposition D = build_decomposition(build_M_geometry(2));
  CHECK(D.tangent_dim() == 13);
  CHECK(D.h.cols() == 4);
  CHECK(D.residuals.m1_m2_in_m1 < 1e-12);
  CHECK(D.residuals.k_k_in_k < 1e-12);
  CHECK(D.residuals.m2_m2_zero < 1e-12);
  CHECK(D.residuals.m1_m1_in_k > 0.1);
}

TEST_CASE("metric family and its adjoint") {
  const Decomposition D = build_decomposition(build_E_geometry(2));
  CHECK((metric_t(D, 1) - Mat::Identity(42, 42)).norm() < 1e-12);
  Vec x = Vec::LinSpaced(42, -1, 1), y = Vec::LinSpaced(42, 2, -0.5).cwiseProduct(x), z = x.cwiseAbs();
  CHECK((ad_star_t(D, 1, x) + D.g.ad(x)).norm() < 1e-12);
  for (double t : {0.2, 0.7}) {
    const Mat G = metric_t(D, t);
    const Mat A = ad_star_t(D, t, x);
    CHECK(std::abs((D.g.ad(x) * y).dot(G * z) - y.dot(G * (A * z))) < 1e-11);
    CHECK((A * z - ad_star_apply(D, t, x, z)).norm() < 1e-12);
    CHECK(std::abs(inner_t(D, t, y, z) - y.dot(G * z)) < 1e-12);
  }
  CHECK_THROWS_AS(metric_t(D, 0), NonpositiveT);
  CHECK_THROWS_AS(ad_star_t(D, -1, x), NonpositiveT);
}

TEST_CASE("non-integral weights are rejected") {
  GeometrySpec s = build_E_geometry(1);
  s.rho.weights[1][2] = 0.5;
  CHECK_THROWS_AS(build_decomposition(s), WeightNotIntegral);
}

TEST_CASE("covering radii of torus lattices") {
  CHECK(covering_radius_exact(su_torus_gram(2)) == doctest::Approx(kPi * std::sqrt(2.0)).epsilon(1e-14));
  const double su3 = covering_radius_exact(su_torus_gram(3));
  CHECK(su3 == doctest::Approx(2 * kPi * std::sqrt(2.0 / 3)).epsilon(1e-14));
  CHECK(std::abs(covering_radius_brute(su_torus_gram(3), 64) - su3) < 1e-6);
  // A unimodular change of basis leaves the lattice unchanged.
  Mat U(2, 2);
  U << 3, 1, 5, 2;
  CHECK(covering_radius_exact(U.transpose() * su_torus_gram(3) * U) == doctest::Approx(su3).epsilon(1e-12));
  Mat sq = 4 * kPi * kPi * Mat::Identity(2, 2);
  CHECK(covering_radius_exact(sq) == doctest::Approx(kPi * std::sqrt(2.0)));
  CHECK(std::abs(covering_radius_brute(sq, 64) - kPi * std::sqrt(2.0)) < 1e-6);
}

TEST_CASE("diameter bound of the two groups") {
  const double e = diameter_upper_bound(build_E_geometry(1).g).D;
  CHECK(e == doctest::Approx(std::sqrt(5 * 8 * kPi * kPi / 3 + 2 * kPi * kPi)).epsilon(1e-13));
  CHECK(e == diameter_upper_bound(build_E_geometry(3).g).D);
  const auto m = diameter_upper_bound(build_M_geometry(2).g);
  CHECK(m.factors.size() == 3);
  CHECK(m.D == doctest::Approx(std::sqrt(2 * 8 * kPi * kPi / 3 + kPi * kPi)).epsilon(1e-13));
  CHECK_THROWS_AS(diameter_upper_bound(LieAlgebra::su(4)), UnsupportedFactor);
}
