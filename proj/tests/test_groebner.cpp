#include <doctest.h>

#include "ptb/groebner.hpp"

using namespace ptb;

namespace {
const std::vector<std::string> kNames{"x", "y", "z"};
Poly P(const std::string& s) { return parse_poly(s, kNames); }
}  // namespace

TEST_CASE("univariate arithmetic") {
  const UPoly p({Rat(-2), Rat(0), Rat(1)});  // x^2 - 2
  CHECK(rational_roots(p).empty());
  const UPoly q = p * UPoly({Rat(-1), Rat(1)}) * UPoly({Rat(-1), Rat(1)});
  CHECK(rational_roots(q) == std::vector<Rat>{1});
  CHECK(squarefree_part(q).degree() == 3);
  CHECK(gcd(q, p) == p);
  UPoly quo, rem;
  divmod(q, p, quo, rem);
  CHECK(rem.is_zero());
  CHECK(quo * p == q);
}

TEST_CASE("Groebner basis decides ideal membership") {
  const auto G = groebner({P("x^2 - y"), P("y^2 - x")}, 2);
  CHECK(in_ideal(P("x^4 - x"), G));
  CHECK_FALSE(in_ideal(P("x - y"), G));
  CHECK(is_zero_dimensional(G));
  CHECK(standard_monomials(G).size() == 4);
}

TEST_CASE("inconsistent systems carry a checkable certificate") {
  const std::vector<Poly> in{P("x*y - 1"), P("x"), P("y^2 + z")};
  const auto G = groebner(in, 3, {.track_cofactors = true});
  REQUIRE(G.unit);
  REQUIRE(G.certificate.size() == in.size());
  Poly sum;
  for (std::size_t i = 0; i < in.size(); ++i) sum += G.certificate[i] * in[i];
  CHECK(sum == Poly(Rat(1)));
}

TEST_CASE("rational points and conjugate roots") {
  const auto G = groebner({P("x^2 - 3*x + 2"), P("y - x")}, 2, {.order = MonoOrder::lex});
  const auto pts = rational_points(G);
  CHECK(pts == std::vector<std::vector<Rat>>{{1, 1}, {2, 2}});
  const auto H = groebner({P("x^2 - 2"), P("y - 1")}, 2);
  CHECK(rational_points(H).empty());
  CHECK(minimal_polynomial(P("x"), H) == UPoly({Rat(-2), Rat(0), Rat(1)}));
}

TEST_CASE("radical of a zero-dimensional ideal") {
  const auto G = groebner({P("x^2"), P("y^3 - y^2")}, 2);
  const auto R = zero_dim_radical(G);
  CHECK(standard_monomials(R).size() == 2);
  CHECK(in_ideal(P("x"), R));
}

TEST_CASE("positive-dimensional ideals report free variables") {
  const auto G = groebner({P("x*y")}, 3);
  CHECK_FALSE(is_zero_dimensional(G));
  const auto free = independent_variables(G, {2, 0, 1});
  CHECK(free.size() == 2);
}
