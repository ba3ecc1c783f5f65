#include <doctest.h>

#include <set>

#include "ptb/graded_ring.hpp"

using namespace ptb;

namespace {

RingPtr cp2_squared() {
  const std::vector<std::string> n{"a", "b"};
  return GradedRing::create({{"a", 2}, {"b", 2}}, {parse_poly("a^3", n), parse_poly("b^3", n)}, 8);
}

}  // namespace

TEST_CASE("polynomials print and parse back") {
  const std::vector<std::string> n{"x1", "x2", "x3"};
  const Poly p = parse_poly("x1^2*x3 + 2*x1*x3^2 - 1/3*x2^3", n);
  CHECK(parse_poly(to_string(p, n), n) == p);
  CHECK(parse_poly(to_text(p, n), n) == p);
  CHECK(p.coeff(Mono::var(1, 3)) == Rat(-1, 3));
  CHECK((p * p).total_degree() == 6);
  CHECK(Poly::var(0).pow(3) == parse_poly("x1^3", n));
}

TEST_CASE("exact linear algebra") {
  RatMat m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(m, 3) == 2);
  const auto k = kernel(m, 3);
  REQUIRE(k.size() == 1);
  for (const auto& v : mat_vec(m, k[0])) CHECK(v == 0);
  CHECK(det(m) == 0);
  CHECK(det(RatMat{{2, 1}, {1, 1}}) == 1);
  RatVec x;
  CHECK(solve(RatMat{{1, 1}, {1, -1}}, 2, {3, 1}, x));
  CHECK(x == RatVec{2, 1});
  CHECK_FALSE(solve(RatMat{{1, 1}, {2, 2}}, 2, {1, 3}, x));
}

TEST_CASE("trailing-pivot echelon form") {
  RatMat m{{1, 1, 0}, {0, 1, 1}};
  const auto piv = rref(m, 3, PivotSide::trailing);
  REQUIRE(piv.size() == 2);
  CHECK(std::set<int>(piv.begin(), piv.end()) == std::set<int>{1, 2});
  for (std::size_t r = 0; r < m.size(); ++r) {
    const auto c = static_cast<std::size_t>(piv[r]);
    CHECK(m[r][c] == 1);
    for (std::size_t j = c + 1; j < 3; ++j) CHECK(m[r][j] == 0);
    CHECK(m[1 - r][c] == 0);
  }
}

TEST_CASE("Betti numbers of a product of projective planes") {
  const RingPtr r = cp2_squared();
  CHECK(r->betti_table() == std::vector<int>{1, 0, 2, 0, 3, 0, 2, 0, 1});
  CHECK(r->is_zero(Poly::var(0).pow(3)));
  CHECK_FALSE(r->is_zero(Poly::var(0).pow(2)));
  const RingClass ab = multiply(r->generator(0), r->generator(1));
  CHECK(ab.degree == 4);
  CHECK_FALSE(ab.is_zero());
  CHECK(multiply(multiply(ab, ab), r->unit()).degree == 8);
}

TEST_CASE("relations discovered in a subring") {
  const RingPtr r = cp2_squared();
  const auto rel = r->find_relations({0}, 6);
  REQUIRE(rel.size() == 1);
  CHECK(rel[0] == Poly::var(0).pow(3));
  CHECK(r->find_relations({0, 1}, 2).empty());
}

TEST_CASE("serialization round trip") {
  const RingPtr r = cp2_squared();
  const RingPtr s = parse_ring(r->serialize());
  CHECK(s->betti_table() == r->betti_table());
  CHECK(s->relations() == r->relations());
  CHECK(s->names() == r->names());
}

TEST_CASE("degree bookkeeping errors") {
  const RingPtr r = cp2_squared();
  CHECK_THROWS_AS(r->degree_basis(10), TruncationExceeded);
  CHECK_THROWS_AS(multiply(r->generator(0), r->normal_form(Poly::var(1).pow(4))), TruncationExceeded);
  CHECK_THROWS_AS(add(r->generator(0), cp2_squared()->generator(0)), RingMismatch);
  CHECK_THROWS(GradedRing::create({{"a", 2}, {"a", 2}}, {}, 4));
}

TEST_CASE("product with a sphere follows Kuenneth") {
  const RingPtr r = cp2_squared();
  for (int n : {2, 3, 5}) {
    const RingPtr p = tensor_with_sphere(r, n);
    for (int d = 0; d <= 8; ++d) CHECK(p->betti(d) == r->betti(d) + (d >= n ? r->betti(d - n) : 0));
    if (2 * n <= 8) CHECK(p->is_zero(Poly::var(p->generator_index("z")).pow(2)));
  }
  CHECK_THROWS_AS(tensor_with_sphere(r, 1), SphereTooSmall);
}
