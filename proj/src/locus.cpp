#include <algorithm>

#include "ptb/errors.hpp"
#include "ptb/iso.hpp"

namespace ptb {

namespace {

CoeffPoly multiply(const CoeffPoly& a, const CoeffPoly& b) {
  CoeffPoly r;
  for (const auto& [ma, pa] : a)
    for (const auto& [mb, pb] : b) r[ma * mb] += pa * pb;
  std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

Poly linear_form(const RatVec& c) {
  Poly p;
  for (std::size_t i = 0; i < c.size(); ++i) p.add_term(Mono::var(static_cast<int>(i)), c[i]);
  return p;
}

// Integral, primitive, first nonzero entry positive.
RatVec normalize_point(RatVec v) {
  mpz_class den = 1, num = 0;
  for (const auto& x : v) den = lcm(den, mpz_class(x.get_den()));
  for (auto& x : v) {
    x *= den;
    num = gcd(num, mpz_class(x.get_num()));
  }
  auto first = std::find_if(v.begin(), v.end(), [](const Rat& x) { return x != 0; });
  if (first == v.end()) return v;
  if (*first < 0) num = -num;
  for (auto& x : v) x /= Rat(num);
  return v;
}

UPoly remainder(const UPoly& a, const UPoly& m) {
  UPoly q, r;
  divmod(a, m, q, r);
  return r;
}

}  // namespace

std::vector<Poly> pushforward_equations(const RingPtr& ring, const Poly& p,
                                        const std::vector<CoeffPoly>& images) {
  CoeffPoly total;
  int degree = -1;
  for (const auto& [m, c] : p.terms()) {
    CoeffPoly term{{Mono{}, Poly(c)}};
    for (std::size_t i = 0; i < images.size(); ++i)
      for (int k = 0; k < m[static_cast<int>(i)]; ++k) term = multiply(term, images[i]);
    for (auto& [tm, tc] : term) total[tm] += tc;
    int d = 0;
    for (std::size_t i = 0; i < images.size(); ++i) d += 2 * m[static_cast<int>(i)];
    if (degree >= 0 && d != degree) throw std::invalid_argument("pushforward of a non-homogeneous polynomial");
    degree = d;
  }
  if (degree < 0) return {};
  if (degree > ring->truncation()) throw TruncationExceeded("pushforward beyond the ring truncation");
  std::vector<Poly> eqs(static_cast<std::size_t>(ring->betti(degree)));
  for (const auto& [m, coeff] : total) {
    if (coeff.is_zero()) continue;
    const RatVec& v = ring->monomial_coords(m);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) eqs[k] += coeff * v[k];
  }
  return eqs;
}

std::string LocusFamily::describe(const std::vector<std::string>& names) const {
  std::string s = std::to_string(count) + " conjugate points over " + minpoly.str("t") + " = 0: [";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ", ";
    s += names[i] + " = " + (coords[i].is_zero() ? std::string("0") : coords[i].str("t"));
  }
  return s + "]";
}

int CubeZeroLocus::point_count() const {
  int n = static_cast<int>(points.size());
  for (const auto& f : families) n += f.count;
  return n;
}

std::vector<std::string> CubeZeroLocus::describe() const {
  std::vector<std::string> out;
  for (int d : linear) {
    std::string s = "span(";
    for (int i = 0; i < d; ++i) s += (i ? ", " : "") + names[static_cast<std::size_t>(i)];
    out.push_back(s + ")");
  }
  for (const auto& p : points) out.push_back("[" + to_string(linear_form(p), names) + "]");
  for (const auto& f : families) out.push_back(f.describe(names));
  if (!decomposed) out.push_back("positive-dimensional component (undecomposed)");
  return out;
}

bool cube_vanishes(const RingPtr& ring, const RatVec& omega) {
  return ring->normal_form(linear_form(omega).pow(3)).is_zero();
}

bool on_locus(const CubeZeroLocus& locus, const RatVec& omega) {
  auto last = std::find_if(omega.rbegin(), omega.rend(), [](const Rat& x) { return x != 0; });
  if (last == omega.rend()) return false;
  const int j = static_cast<int>(omega.rend() - last) - 1;
  for (int d : locus.linear)
    if (j < d) return true;
  RatVec n = normalize_point(omega);
  // Family points are irrational, so a rational ω can only match a listed point.
  return std::find(locus.points.begin(), locus.points.end(), n) != locus.points.end();
}

CubeZeroLocus cube_zero_locus(const RingPtr& ring) {
  for (const auto& g : ring->generators())
    if (g.degree != 2) throw ScopeViolation("cube_zero_locus needs a ring generated in degree 2");
  if (ring->truncation() < 6) throw TruncationExceeded("cube_zero_locus needs the degree-6 piece");
  const int g = ring->ngens();
  CubeZeroLocus L;
  L.ngens = g;
  L.names = ring->names();

  CoeffPoly omega;
  for (int i = 0; i < g; ++i) omega[Mono::var(i)] = Poly::var(i);
  for (auto& e : pushforward_equations(ring, Poly::var(0).pow(3), {omega}))
    if (!e.is_zero()) L.equations.push_back(e);

  // Chart j: c_j = 1 and c_k = 0 for k > j; unknowns c_0..c_{j-1}.
  for (int j = g - 1; j >= 0; --j) {
    std::vector<Poly> sub(static_cast<std::size_t>(g));
    for (int k = 0; k < g; ++k) sub[static_cast<std::size_t>(k)] = k < j ? Poly::var(k) : Poly(Rat(k == j ? 1 : 0));
    std::vector<Poly> chart;
    for (const auto& e : L.equations) {
      Poly s = e.substitute(sub);
      if (!s.is_zero()) chart.push_back(s);
    }
    if (chart.empty() && j == 0) {
      RatVec e0(static_cast<std::size_t>(g), Rat(0));
      e0[0] = 1;
      L.points.push_back(e0);
      break;
    }
    if (chart.empty()) {
      L.linear.push_back(j + 1);  // every point with last nonzero index <= j
      break;
    }
    GroebnerBasis G = groebner(chart, j);
    if (G.unit) continue;
    if (!is_zero_dimensional(G)) {
      L.decomposed = false;
      continue;
    }
    GroebnerBasis R = zero_dim_radical(G);
    const int count = static_cast<int>(standard_monomials(R).size());
    auto rational = rational_points(R);
    auto full = [&](const std::vector<Rat>& r) {
      RatVec v(static_cast<std::size_t>(g), Rat(0));
      for (int k = 0; k < j; ++k) v[static_cast<std::size_t>(k)] = r[static_cast<std::size_t>(k)];
      v[static_cast<std::size_t>(j)] = 1;
      return v;
    };
    for (const auto& r : rational) L.points.push_back(normalize_point(full(r)));
    if (static_cast<int>(rational.size()) == count) continue;

    // Separating linear form ℓ = c_0 + k c_1 + k^2 c_2 + ...; the shape lemma then
    // writes every coordinate as a polynomial in θ = ℓ.
    Poly ell;
    UPoly m;
    for (long k = 1;; ++k) {
      ell = Poly();
      Rat w = 1;
      for (int v = 0; v < j; ++v, w *= k) ell.add_term(Mono::var(v), w);
      m = minimal_polynomial(ell, R);
      if (m.degree() == count) break;
      if (k > 64) throw std::logic_error("no separating linear form found");
    }
    auto sm = standard_monomials(R);
    auto coords_of = [&](const Poly& p) {
      RatVec v(sm.size(), Rat(0));
      const Poly r = reduce(p, R);
      for (const auto& [mm, c] : r.terms())
        v[static_cast<std::size_t>(std::find(sm.begin(), sm.end(), mm) - sm.begin())] = c;
      return v;
    };
    RatMat A(sm.size(), RatVec(static_cast<std::size_t>(count)));
    Poly pw(Rat(1));
    for (int k = 0; k < count; ++k) {
      RatVec c = coords_of(pw);
      for (std::size_t r = 0; r < sm.size(); ++r) A[r][static_cast<std::size_t>(k)] = c[r];
      pw = reduce(pw * ell, R);
    }
    LocusFamily fam;
    fam.chart = j;
    UPoly rat_part({Rat(1)});
    for (const auto& r : rational) {
      std::vector<Poly> at;
      for (const auto& x : r) at.emplace_back(x);
      Rat val = ell.substitute(at).coeff(Mono{});
      rat_part = rat_part * UPoly({-val, Rat(1)});
    }
    UPoly q, rr;
    divmod(m, rat_part, q, rr);
    fam.minpoly = q.monic();
    fam.count = fam.minpoly.degree();
    for (int v = 0; v < g; ++v) {
      if (v >= j) {
        fam.coords.push_back(v == j ? UPoly({Rat(1)}) : UPoly());
        continue;
      }
      RatVec x;
      if (!solve(A, count, coords_of(Poly::var(v)), x)) throw std::logic_error("shape lemma failed");
      fam.coords.push_back(remainder(UPoly(x), fam.minpoly));
    }
    L.families.push_back(std::move(fam));
  }
  std::sort(L.points.begin(), L.points.end(), [](const RatVec& a, const RatVec& b) {
    auto nz = [](const RatVec& v) { return std::count_if(v.begin(), v.end(), [](const Rat& x) { return x != 0; }); };
    if (nz(a) != nz(b)) return nz(a) < nz(b);
    return a > b;
  });
  return L;
}

}  // namespace ptb
