#include <doctest.h>

#include <random>

#include "ptb/catalog.hpp"
#include "ptb/iso.hpp"

using namespace ptb;

namespace {

RingPtr E(long alpha) { return family_ring(make_family(Family::E, alpha)); }
RingPtr M(long a) { return family_ring(make_family(Family::M, a)); }

std::vector<RatVec> sorted(std::vector<RatVec> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("cube-zero locus of the 22-dimensional rings") {
  for (long alpha = 1; alpha <= 4; ++alpha) {
    const auto L = cube_zero_locus(E(alpha));
    CHECK(L.finite());
    CHECK(sorted(L.points) == sorted({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, alpha}, {1, 1, 1}}));
  }
}

TEST_CASE("cube-zero locus of M_0 and M_1 has five points") {
  auto L0 = cube_zero_locus(M(0));
  CHECK(L0.finite());
  CHECK(sorted(L0.points) == sorted({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}}));
  auto L1 = cube_zero_locus(M(1));
  CHECK(sorted(L1.points) == sorted({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 1, 1}}));
}

TEST_CASE("cube-zero locus of M_2 contains a line and a conjugate pair") {
  const auto L = cube_zero_locus(M(2));
  CHECK_FALSE(L.finite());
  CHECK(L.linear == std::vector<int>{2});
  REQUIRE(L.families.size() == 1);
  CHECK(L.families[0].count == 2);
  CHECK(L.families[0].minpoly == UPoly({Rat(3), Rat(-3), Rat(1)}));
  // Every class in span(x1, y1) cubes to zero.
  CHECK(cube_vanishes(M(2), {3, -7, 0}));
}

TEST_CASE("locus membership agrees with the cube on random classes") {
  const RingPtr r = E(2);
  const auto L = cube_zero_locus(r);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int i = 0; i < 300; ++i) {
    const RatVec w{c(rng), c(rng), c(rng)};
    if (w == RatVec{0, 0, 0}) continue;
    CHECK(cube_vanishes(r, w) == on_locus(L, w));
  }
}

TEST_CASE("well-formedness of induced maps") {
  const RingPtr r = E(3);
  const RatMat id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const auto ok = induced_map_wellformed(r, r, id);
  CHECK(ok.ok);
  CHECK(ok.det == 1);
  const RatMat scaled{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const auto bad = induced_map_wellformed(r, r, scaled);
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.failure.empty());
  const RatMat singular{{1, 1, 0}, {0, 0, 0}, {0, 0, 1}};
  CHECK_FALSE(induced_map_wellformed(r, r, singular).ok);
}

TEST_CASE("small systems: witnesses and refutations") {
  const std::vector<std::string> n{"u", "v"};
  const auto sat = solve_small_system({parse_poly("u^2 - 4", n), parse_poly("u*v - 2", n)}, {parse_poly("u", n)}, 2);
  CHECK(sat.consistent);
  REQUIRE(sat.witness);
  CHECK((*sat.witness)[0] * (*sat.witness)[1] == 2);

  auto unsat = solve_small_system({parse_poly("u*v", n), parse_poly("u - 1", n)}, {parse_poly("v", n)}, 2);
  CHECK_FALSE(unsat.consistent);
  CHECK(verify_inconsistency(unsat));
  REQUIRE_FALSE(unsat.certificate.empty());
  unsat.certificate[0] += Poly(Rat(1));
  CHECK_FALSE(verify_inconsistency(unsat));
}

TEST_CASE("budget guard") {
  std::vector<Poly> many;
  CHECK_THROWS_AS(solve_small_system(many, {}, 20), DegreeBudgetExceeded);
}

TEST_CASE("distinct 22-dimensional rings are refuted shape by shape") {
  const auto d = iso_decide(E(1), E(2));
  CHECK(d.result == IsoResult::not_iso);
  CHECK(d.shapes.size() == 60);
  for (const auto& s : d.shapes) CHECK(s.verified);
}

TEST_CASE("equal rings get a verified certificate") {
  const auto d = iso_decide(E(4), E(4));
  REQUIRE(d.result == IsoResult::iso);
  REQUIRE(d.certificate);
  CHECK(d.certificate->verification.ok);
}

TEST_CASE("M_0 and M_1 are isomorphic") {
  const auto d = iso_decide(M(0), M(1));
  REQUIRE(d.result == IsoResult::iso);
  REQUIRE(d.certificate);
  CHECK(d.certificate->rational);
  CHECK(d.certificate->verification.ok);
}

TEST_CASE("serial and parallel decisions agree") {
  const auto a = iso_decide(E(1), E(3), Exec::serial);
  const auto b = iso_decide(E(1), E(3), Exec::openmp);
  CHECK(a.result == b.result);
  CHECK(a.reason == b.reason);
  CHECK(a.shapes.size() == b.shapes.size());
}
