#include "ptb/catalog.hpp"

#include <complex>

namespace ptb {

namespace {

void require_alpha(long alpha) {
  if (alpha < 1) throw NonpositiveAlpha("α must be at least 1, got " + std::to_string(alpha));
}

std::vector<std::vector<double>> as_weights(const std::vector<std::vector<long>>& v) {
  std::vector<std::vector<double>> w;
  for (const auto& row : v) w.emplace_back(row.begin(), row.end());
  return w;
}

// Embed su(3) coordinates into block `b` of a direct sum of dimension n.
Vec embed(const Vec& v, int b, int n) {
  Vec out = Vec::Zero(n);
  out.segment(8 * b, 8) = v;
  return out;
}

Eigen::MatrixXcd idiag(double a, double b, double c) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(3, 3);
  const std::complex<double> i(0, 1);
  m(0, 0) = i * a;
  m(1, 1) = i * b;
  m(2, 2) = i * c;
  return m;
}

}  // namespace

std::vector<std::vector<long>> E_euler(long alpha) {
  require_alpha(alpha);
  return {{1, 1, 1, 1, 0}, {1, 0, alpha, 0, 1}};
}

std::vector<std::vector<long>> M_euler(long a) { return {{a, 1, 0, -1}}; }

RingPtr cp2_power(int k, int truncation) {
  std::vector<Generator> gens;
  std::vector<Poly> rels;
  for (int i = 0; i < k; ++i) {
    gens.push_back({"z" + std::to_string(i + 1), 2});
    rels.push_back(Poly::monomial(Mono::var(i, 3)));
  }
  return GradedRing::create(gens, rels, truncation);
}

RingPtr flag_pair(int truncation) {
  const std::vector<std::string> names{"x1", "y1", "x2", "y2"};
  std::vector<Generator> gens;
  for (const auto& n : names) gens.push_back({n, 2});
  std::vector<Poly> rels;
  for (const char* r : {"x1^2+x1*y1+y1^2", "x1^2*y1+x1*y1^2", "x2^2+x2*y2+y2^2", "x2^2*y2+x2*y2^2"})
    rels.push_back(parse_poly(r, names));
  return GradedRing::create(gens, rels, truncation);
}

BundleSpec build_E_topology(long alpha) {
  BundleSpec s;
  s.euler = E_euler(alpha);
  s.base = cp2_power(5, 8);
  s.stage_names = {{"y1", "y2", "y3", "y5"}, {"x1", "x2", "x3"}};
  s.stage_truncation = {8, 6};
  return s;
}

BundleSpec build_M_topology(long a) {
  BundleSpec s;
  s.base = flag_pair(8);
  s.euler = M_euler(a);
  s.stage_truncation = {6};
  return s;
}

GeometrySpec build_E_geometry(long alpha) {
  const auto euler = E_euler(alpha);
  GeometrySpec spec;
  spec.name = "E_" + std::to_string(alpha);
  std::vector<LieAlgebra> parts(5, LieAlgebra::su(3));
  parts.push_back(LieAlgebra::torus(2));
  spec.g = LieAlgebra::direct_sum(parts);
  const int n = spec.g.dim();
  const auto B = su_matrices(3);
  // s(u(1) ⊕ u(2)): su(2) on the last two coordinates plus the central direction Z.
  const Eigen::MatrixXcd Z = idiag(2, -1, -1) / std::sqrt(6.0);
  const std::size_t pair12 = 4;  // su_matrices order: pairs (0,1), (0,2), (1,2)
  for (int b = 0; b < 5; ++b) {
    spec.h_basis.push_back(embed(su_coords(3, B[pair12]), b, n));
    spec.h_basis.push_back(embed(su_coords(3, B[pair12 + 1]), b, n));
    spec.h_basis.push_back(embed(su_coords(3, idiag(0, 1, -1) / std::sqrt(2.0)), b, n));
    spec.h_basis.push_back(embed(su_coords(3, Z), b, n));
    spec.rho.characters.push_back(embed(su_coords(3, Z), b, n));
  }
  spec.fiber = {40, 41};
  spec.rho.weights = as_weights(euler);
  return spec;
}

GeometrySpec build_M_geometry(long a) {
  const auto euler = M_euler(a);
  GeometrySpec spec;
  spec.name = "M_" + std::to_string(a);
  spec.g = LieAlgebra::direct_sum({LieAlgebra::su(3), LieAlgebra::su(3), LieAlgebra::torus(1)});
  const int n = spec.g.dim();
  const auto B = su_matrices(3);
  for (int b = 0; b < 2; ++b) {
    spec.h_basis.push_back(embed(su_coords(3, B[6]), b, n));
    spec.h_basis.push_back(embed(su_coords(3, B[7]), b, n));
    // θ_k(i·diag(h1,h2,h3)) = h_k is <i E_kk, ·> restricted to su(3).
    spec.rho.characters.push_back(embed(su_coords(3, idiag(1, 0, 0)), b, n));
    spec.rho.characters.push_back(embed(su_coords(3, idiag(0, 1, 0)), b, n));
  }
  spec.fiber = {16};
  spec.rho.weights = as_weights(euler);
  return spec;
}

std::string FamilySpec::name() const {
  std::string s = (family == Family::E ? "E_" : "M_") + std::to_string(param);
  if (sphere) s += " x S^" + std::to_string(*sphere);
  return s;
}

std::vector<std::pair<std::vector<std::vector<long>>, std::vector<long>>> FamilySpec::primitivity_inputs() const {
  // H² of (CP²)⁵ and of the flag pair are free on the generators; each later stage
  // divides by the earlier Euler classes.
  std::vector<std::pair<std::vector<std::vector<long>>, std::vector<long>>> out;
  std::vector<std::vector<long>> lattice;
  for (const auto& e : bundle.euler) {
    out.emplace_back(lattice, e);
    lattice.push_back(e);
  }
  return out;
}

FamilySpec make_family(Family f, long param) {
  FamilySpec s;
  s.family = f;
  s.param = param;
  if (f == Family::E) {
    s.bundle = build_E_topology(param);
    s.geometry = build_E_geometry(param);
  } else {
    s.bundle = build_M_topology(param);
    s.geometry = build_M_geometry(param);
  }
  return s;
}

FamilySpec with_sphere(const FamilySpec& spec, int n) {
  if (n <= 1) throw SphereTooSmall("sphere dimension must be at least 2, got " + std::to_string(n));
  FamilySpec s = spec;
  s.sphere = n;
  return s;
}

TorusQuotient family_quotient(const FamilySpec& spec) { return torus_quotient(spec.bundle); }

RingPtr family_ring(const FamilySpec& spec) {
  RingPtr r = family_quotient(spec).ring;
  if (spec.sphere) r = tensor_with_sphere(r, *spec.sphere);
  return r;
}

}  // namespace ptb
