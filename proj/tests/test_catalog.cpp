#include <doctest.h>

#include "ptb/catalog.hpp"

using namespace ptb;

TEST_CASE("geometric weights are the topological Euler classes") {
  for (long alpha : {1, 2, 5}) {
    const GeometrySpec g = build_E_geometry(alpha);
    const auto e = E_euler(alpha);
    REQUIRE(g.rho.weights.size() == e.size());
    for (std::size_t f = 0; f < e.size(); ++f)
      for (std::size_t k = 0; k < e[f].size(); ++k) CHECK(g.rho.weights[f][k] == static_cast<double>(e[f][k]));
    CHECK(build_E_topology(alpha).euler == e);
  }
  const GeometrySpec m = build_M_geometry(3);
  CHECK(m.rho.weights == std::vector<std::vector<double>>{{3, 1, 0, -1}});
  CHECK(build_M_topology(3).euler == M_euler(3));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(make_family(Family::E, 0), NonpositiveAlpha);
  CHECK_THROWS_AS(build_E_geometry(-2), NonpositiveAlpha);
  CHECK_THROWS_AS(with_sphere(make_family(Family::M, 2), 1), SphereTooSmall);
  CHECK(with_sphere(make_family(Family::M, 2), 3).name() == "M_2 x S^3");
}

TEST_CASE("flag-pair base ring") {
  const RingPtr b = flag_pair(8);
  const std::vector<int> want{1, 4, 8, 10, 8};
  for (int k = 0; k <= 4; ++k) CHECK(b->betti(2 * k) == want[k]);
}

TEST_CASE("degree-4 relation of the circle bundle over the flag pair") {
  const RingPtr r = family_ring(make_family(Family::M, 3));
  CHECK(r->names() == std::vector<std::string>{"x1", "y1", "x2"});
  const std::vector<std::string> n{"x1", "y1", "x2"};
  CHECK(r->is_zero(parse_poly("8*x1^2 + 5*x1*y1 + x2^2 + 3*x1*x2 + y1*x2", n)));
  CHECK(r->is_zero(parse_poly("x1^2 + x1*y1 + y1^2", n)));
  CHECK_FALSE(r->is_zero(parse_poly("x1*x2", n)));
}

TEST_CASE("Euler classes are primitive at every stage") {
  for (const FamilySpec& f : {make_family(Family::E, 1), make_family(Family::E, 4), make_family(Family::M, 0),
                              make_family(Family::M, 5)})
    for (const auto& [lattice, e] : f.primitivity_inputs()) CHECK(check_primitive(lattice, e));
  CHECK_FALSE(check_primitive({}, {2, 4, 0}));
}

TEST_CASE("sphere factor") {
  const RingPtr r = family_ring(with_sphere(make_family(Family::M, 2), 2));
  const std::vector<std::string> n{"x1", "y1", "x2", "z"};
  CHECK(r->is_zero(parse_poly("z^2", n)));
  CHECK_FALSE(r->is_zero(parse_poly("x1*z", n)));
  CHECK(r->betti(2) == 4);
}
