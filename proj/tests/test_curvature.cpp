#include <doctest.h>

#include "ptb/catalog.hpp"

using namespace ptb;

namespace {

const Decomposition& E1() {
  static const Decomposition D = build_decomposition(build_E_geometry(1));
  return D;
}
const Decomposition& M2() {
  static const Decomposition D = build_decomposition(build_M_geometry(2));
  return D;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("term closed forms on the 22-dimensional family") {
  for (double t : {0.2, 0.6, 1.0})
    for (std::uint64_t i = 0; i < 20; ++i) {
      const auto p = random_admissible(E1(), 3, i);
      const SecTerms L = lemma41_terms(E1(), t, p);
      const SecTerms S = sec_terms(E1(), t, p.xt(t), p.yt(t), SymmetricWeight::unit);
      CHECK(rel(L.a, S.a) < 1e-10);
      CHECK(rel(L.b, S.b) < 1e-10);
      CHECK(rel(L.c, S.c) < 1e-10);
      CHECK(rel(L.d, S.d) < 1e-10);
      CHECK(rel(L.value, S.value) < 1e-10);
      const ClosedForm f = sec_closed_form(E1(), t, p);
      CHECK(rel(f.displayed, S.value) < 1e-10);
      CHECK(rel(f.corrected, sec_quadrilinear(E1(), t, p.xt(t), p.yt(t))) < 1e-10);
      CHECK(f.corrected_lower_bound >= -1e-12);
    }
}

TEST_CASE("the symmetric term weight only matters away from t = 1") {
  const auto p = random_admissible(E1(), 5, 0);
  const Vec x1 = p.xt(1), y1 = p.yt(1);
  CHECK(sec_quadrilinear(E1(), 1, x1, y1, SymmetricWeight::unit) ==
        doctest::Approx(sec_quadrilinear(E1(), 1, x1, y1)).epsilon(1e-13));
  const double t = 0.3;
  CHECK(std::abs(sec_quadrilinear(E1(), t, p.xt(t), p.yt(t), SymmetricWeight::unit) -
                 sec_quadrilinear(E1(), t, p.xt(t), p.yt(t))) > 1e-3);
}

TEST_CASE("polarized tensor agrees with the Koszul/O'Neill oracle") {
  for (const Decomposition* D : {&E1(), &M2()})
    for (double t : {0.4, 1.0})
      for (std::uint64_t i = 0; i < 5; ++i) {
        const auto p = random_admissible(*D, 8, i), q = random_admissible(*D, 8, 100 + i);
        const Vec x = p.xt(t), y = p.yt(t), z = q.xt(t), w = q.yt(t);
        CHECK(std::abs(curvature_tensor(*D, t, x, y, z, w) - koszul_oneill_tensor(*D, t, x, y, z, w)) < 1e-10);
        CHECK(curvature_tensor(*D, t, x, y, y, x) == doctest::Approx(sec_quadrilinear(*D, t, x, y)));
      }
}

TEST_CASE("normal homogeneous formula at t = 1") {
  for (std::uint64_t i = 0; i < 10; ++i) {
    const auto p = random_admissible(M2(), 9, i);
    const Vec x = p.xt(1), y = p.yt(1), b = M2().g.bracket(x, y);
    const double normal = 0.25 * (M2().P_m * b).squaredNorm() + (M2().P_h * b).squaredNorm();
    CHECK(sec_quadrilinear(M2(), 1, x, y) == doctest::Approx(normal).epsilon(1e-12));
  }
}

TEST_CASE("input validation") {
  const Vec h = E1().h.col(0);
  const auto p = random_admissible(E1(), 1, 0);
  CHECK_THROWS_AS(sec_terms(E1(), 0.5, h, p.yt(0.5)), NotTangent);
  CHECK_THROWS_AS(sec_terms(E1(), 0.0, p.xt(1), p.yt(1)), NonpositiveT);
  AdmissiblePair q = p;
  q.x1 *= 2;
  CHECK_THROWS_AS(lemma41_terms(E1(), 0.5, q), NotOrthonormal);
}

TEST_CASE("curvature operator on 2-vectors") {
  const double t = 0.5;
  const CurvatureOperator op = assemble_curvature_operator(M2(), t);
  CHECK(op.M.rows() == 78);
  CHECK((op.M - op.M.transpose()).norm() < 1e-12);
  // Decomposable unit 2-vectors give sectional curvature.
  const auto p = random_admissible(M2(), 4, 0);
  const Mat E = op.basis;
  const Vec u = E.completeOrthogonalDecomposition().solve(p.xt(t));
  const Vec v = E.completeOrthogonalDecomposition().solve(p.yt(t));
  const Vec w = op.wedge(u, v);
  CHECK(w.dot(op.M * w) == doctest::Approx(sec_quadrilinear(M2(), t, p.xt(t), p.yt(t))).epsilon(1e-10));
  const EigenResult e = curvature_operator_min_eig(op);
  CHECK(e.residual < 1e-10);
  CHECK(e.value <= w.dot(op.M * w) + 1e-12);
  const CurvatureOperator serial = assemble_curvature_operator(M2(), t, Exec::serial);
  CHECK(serial.R == op.R);
}

TEST_CASE("sec search is reproducible and brackets its samples") {
  const CurvatureOperator op = assemble_curvature_operator(M2(), 0.5);
  const SecBounds a = sec_bounds(op, M2(), 16, 20, 42, Exec::openmp);
  const SecBounds b = sec_bounds(op, M2(), 16, 20, 42, Exec::serial);
  CHECK(a.min == b.min);
  CHECK(a.max == b.max);
  for (double s : a.sampled) {
    CHECK(s >= a.min - 1e-12);
    CHECK(s <= a.max + 1e-12);
  }
  CHECK(a.min >= -1e-9);
  // Witnesses are <,>_t-orthonormal and reproduce the reported values.
  CHECK(inner_t(M2(), 0.5, a.argmax.x, a.argmax.x) == doctest::Approx(1));
  CHECK(std::abs(inner_t(M2(), 0.5, a.argmax.x, a.argmax.y)) < 1e-12);
  CHECK(sec_quadrilinear(M2(), 0.5, a.argmax.x, a.argmax.y) == doctest::Approx(a.max).epsilon(1e-10));
}

TEST_CASE("Ricci curvature") {
  const RicciResult r = ricci_min(E1(), 0.5);
  CHECK(r.min > 0);
  CHECK((r.matrix - r.matrix.transpose()).norm() < 1e-12);
  const Mat E = tangent_basis(E1(), 0.5);
  double scal = 0;
  for (int i = 0; i < E.cols(); ++i)
    for (int j = i + 1; j < E.cols(); ++j) scal += 2 * sec_quadrilinear(E1(), 0.5, E.col(i), E.col(j));
  CHECK(r.trace == doctest::Approx(scal).epsilon(1e-10));
}

TEST_CASE("largest bracket on su(3)") {
  const PlaneWitness w = bracket_norm_max(LieAlgebra::su(3), 8, 30, 1);
  CHECK(w.value == doctest::Approx(2).epsilon(1e-10));
  CHECK(std::abs(w.x.dot(w.y)) < 1e-12);
}
