#include <doctest.h>

#include "ptb/catalog.hpp"

using namespace ptb;

TEST_CASE("Hopf-type quotient of CP2 by its generator is a point") {
  const RingPtr cp2 = cp2_power(1, 6);
  const auto q = circle_quotient_report(cp2, cp2->generator(0));
  CHECK(q.ring->betti(0) == 1);
  CHECK(q.ring->betti(2) == 0);
  CHECK(q.ring->betti(4) == 0);
}

TEST_CASE("multiplication maps are injective below the top degree") {
  const RingPtr b = cp2_power(2, 8);
  const RingClass e = b->normal_form(Poly::var(0) + Poly::var(1));
  for (int d : {0, 2}) {
    const MultMap m = mult_map(b, e, d);
    CHECK(m.injective);
    CHECK(m.kernel.empty());
    CHECK(m.rank == b->betti(d));
  }
  const MultMap top = mult_map(b, e, 6);
  CHECK_FALSE(top.injective);
  CHECK(top.kernel.size() == 1);
}

TEST_CASE("Betti numbers drop by the rank of the Euler multiplication") {
  const RingPtr b = cp2_power(2, 8);
  const RingClass e = b->normal_form(Poly::var(0) + Poly::var(1));
  const RingPtr q = circle_quotient(b, e, {.truncation = 4, .rename = {}, .stage = 1});
  for (int d = 2; d <= 4; d += 2) CHECK(q->betti(d) == b->betti(d) - mult_map(b, e, d - 2).rank);
}

TEST_CASE("zero Euler class is rejected") {
  const RingPtr b = cp2_power(2, 8);
  CHECK_THROWS_AS(circle_quotient(b, b->zero(2)), ZeroClass);
}

TEST_CASE("two-stage quotient of (CP2)^5") {
  for (long alpha = 1; alpha <= 4; ++alpha) {
    const TorusQuotient q = torus_quotient(build_E_topology(alpha));
    REQUIRE(q.stages.size() == 2);
    CHECK(q.ring->names() == std::vector<std::string>{"x1", "x2", "x3"});
    CHECK(q.ring->betti(2) == 3);
    CHECK(q.ring->betti(4) == 6);
    const std::vector<std::string> n{"x1", "x2", "x3"};
    CHECK(q.ring->is_zero(parse_poly("x1^2*x3 + " + std::to_string(alpha) + "*x1*x3^2", n)));
    CHECK_FALSE(q.ring->is_zero(parse_poly("x1^2*x3", n)));
  }
}

TEST_CASE("minimal relations are canonical") {
  const std::vector<Generator> g{{"a", 2}, {"b", 2}};
  const std::vector<std::string> n{"a", "b"};
  const auto r1 = minimal_relations(g, {parse_poly("a^2 + b^2", n), parse_poly("a^2 - b^2", n)}, 6);
  const auto r2 = minimal_relations(g, {parse_poly("a^2", n), parse_poly("3*b^2", n)}, 6);
  CHECK(r1 == r2);
  CHECK(r1.size() == 2);
}

TEST_CASE("primitivity modulo a lattice") {
  CHECK(check_primitive({}, {1, 0, 2}));
  CHECK_FALSE(check_primitive({}, {2, 4, 6}));
  CHECK(check_primitive({{1, 1, 1, 1, 0}}, {1, 0, 3, 0, 1}));
  // Modulo (0,1) only the first coordinate matters.
  CHECK_FALSE(check_primitive({{0, 1}}, {2, 5}));
  CHECK(check_primitive({{0, 2}}, {1, 0}));
}

TEST_CASE("the flag-pair quotient keeps three degree-2 generators") {
  for (long a = 0; a <= 5; ++a) {
    const RingPtr r = torus_quotient(build_M_topology(a)).ring;
    CHECK(r->betti(2) == 3);
    CHECK(r->betti(4) == 4);
  }
}
