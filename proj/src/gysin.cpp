#include "ptb/gysin.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ptb {

MultMap mult_map(const RingPtr& ring, const RingClass& e, int d) {
  if (e.ring != ring) throw RingMismatch("mult_map: Euler class from another ring");
  if (e.degree != 2) throw std::invalid_argument("mult_map: Euler class must have degree 2");
  if (d + 2 > ring->truncation())
    throw TruncationExceeded("mult_map: target degree " + std::to_string(d + 2) +
                             " above truncation");
  MultMap out;
  out.degree = d;
  const int src = ring->betti(d);
  const int dst = ring->betti(d + 2);
  out.matrix.assign(static_cast<std::size_t>(dst), RatVec(static_cast<std::size_t>(src), Rat(0)));
  for (int j = 0; j < src; ++j) {
    RingClass b = ring->zero(d);
    b.coords[static_cast<std::size_t>(j)] = 1;
    RingClass img = multiply(e, b);
    for (int i = 0; i < dst; ++i)
      out.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = img.coords[static_cast<std::size_t>(i)];
  }
  out.kernel = kernel(out.matrix, src);
  out.rank = src - static_cast<int>(out.kernel.size());
  out.injective = out.kernel.empty();
  return out;
}

std::vector<Poly> minimal_relations(const std::vector<Generator>& gens, const std::vector<Poly>& ideal,
                                    int truncation) {
  std::vector<Poly> kept;
  for (const auto& p : ideal) {
    if (p.is_zero()) continue;
    std::vector<int> w;
    for (const auto& g : gens) w.push_back(g.degree);
    if (p.weighted_degree(w) <= truncation) kept.push_back(p);
  }
  RingPtr full = GradedRing::create(gens, kept, truncation);
  const auto& w = full->weights();
  std::vector<int> all(gens.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);

  std::vector<Poly> minimal;
  for (int d = 1; d <= truncation; ++d) {
    const auto& mons = full->monomials(d);
    const int n = static_cast<int>(mons.size());
    std::unordered_map<Mono, int, MonoHash> col;
    for (int j = 0; j < n; ++j) col.emplace(mons[static_cast<std::size_t>(j)], j);
    RatMat lower;
    for (const auto& r : minimal) {
      int rd = r.weighted_degree(w);
      for (const auto& m : monomials_of_degree(all, w, d - rd)) {
        RatVec row(static_cast<std::size_t>(n), Rat(0));
        for (const auto& [mm, c] : r.terms()) row[static_cast<std::size_t>(col.at(mm * m))] += c;
        lower.push_back(std::move(row));
      }
    }
    auto lower_piv = rref(lower, n, PivotSide::trailing);
    std::set<int> have(lower_piv.begin(), lower_piv.end());
    for (const auto& row : full->ideal_slice(d)) {
      // ideal_slice rows are in trailing-pivot RREF; the pivot is the deglex-last monomial.
      Mono piv = mons.front();
      for (const auto& m : mons)
        if (row.coeff(m) != 0) piv = m;
      if (have.count(col.at(piv))) continue;
      minimal.push_back(primitive_part(row, piv));
    }
  }
  return minimal;
}

QuotientReport circle_quotient_report(const RingPtr& ring, const RingClass& e,
                                      const QuotientOptions& opt) {
  if (e.ring != ring) throw RingMismatch("circle_quotient: Euler class from another ring");
  if (e.degree != 2) throw std::invalid_argument("circle_quotient: Euler class must have degree 2");
  if (e.is_zero()) throw ZeroClass("circle_quotient: Euler class is zero");
  const int out_trunc = opt.truncation < 0 ? ring->truncation() : opt.truncation;
  if (out_trunc > ring->truncation())
    throw TruncationExceeded("circle_quotient: output truncation above the base's");

  QuotientReport rep;
  // Multiplication maps in every degree the base supports.
  int first_bad = -1;
  for (int d = 0; d + 2 <= ring->truncation(); ++d) {
    if (ring->betti(d) == 0) continue;
    rep.maps.push_back(mult_map(ring, e, d));
    if (first_bad < 0 && !rep.maps.back().injective) first_bad = d;
  }

  // The coker formula in degree k needs H^{k-1}(base) = 0.
  if (ring->odd_zero_through() < out_trunc - 1) {
    if (ring->obstruction())
      throw NotInjective(ring->obstruction()->stage, ring->obstruction()->degree,
                         ring->obstruction()->kernel,
                         "stage " + std::to_string(ring->obstruction()->stage) +
                             ": multiplication by the Euler class is not injective in degree " +
                             std::to_string(ring->obstruction()->degree) +
                             ", so odd cohomology appears below the requested truncation");
    throw NotInjective(opt.stage, ring->odd_zero_through() + 1, {},
                       "base odd cohomology not known to vanish below degree " +
                           std::to_string(out_trunc));
  }

  // Eliminate the highest-index generator with a unit coefficient.
  Poly el = ring->lift(e);
  int elim = -1;
  for (int i = ring->ngens() - 1; i >= 0; --i) {
    Rat c = el.coeff(Mono::var(i));
    if (c == 1 || c == -1) {
      elim = i;
      break;
    }
  }
  if (elim < 0)
    throw std::invalid_argument("circle_quotient: Euler class has no unit coefficient on a generator");
  const Rat c = el.coeff(Mono::var(elim));
  rep.eliminated = ring->generators()[static_cast<std::size_t>(elim)].name;

  std::vector<Generator> gens;
  std::vector<int> remap(static_cast<std::size_t>(ring->ngens()), -1);
  for (int i = 0; i < ring->ngens(); ++i) {
    if (i == elim) continue;
    remap[static_cast<std::size_t>(i)] = static_cast<int>(gens.size());
    gens.push_back(ring->generators()[static_cast<std::size_t>(i)]);
  }
  if (!opt.rename.empty()) {
    if (opt.rename.size() != gens.size())
      throw std::invalid_argument("circle_quotient: rename list has wrong length");
    for (std::size_t i = 0; i < gens.size(); ++i) gens[i].name = opt.rename[i];
  }
  rep.substitution.resize(static_cast<std::size_t>(ring->ngens()));
  Poly rest = el - Poly::monomial(Mono::var(elim), c);
  for (int i = 0; i < ring->ngens(); ++i) {
    if (i == elim)
      rep.substitution[static_cast<std::size_t>(i)] = (rest * Rat(-1 / c)).remap(remap);
    else
      rep.substitution[static_cast<std::size_t>(i)] = Poly::var(remap[static_cast<std::size_t>(i)]);
  }
  std::vector<Poly> ideal;
  for (const auto& r : ring->relations()) ideal.push_back(r.substitute(rep.substitution));

  int odd = std::min(ring->odd_zero_through(), ring->truncation() - 1);
  std::optional<OddObstruction> obs = ring->obstruction();
  if (first_bad >= 0) {
    odd = std::min(odd, first_bad - 1);
    if (!obs) {
      const auto& bad = *std::find_if(rep.maps.begin(), rep.maps.end(),
                                      [&](const MultMap& m) { return m.degree == first_bad; });
      obs = OddObstruction{opt.stage, first_bad, bad.kernel.front()};
    }
  }
  rep.ring = GradedRing::create(gens, minimal_relations(gens, ideal, out_trunc), out_trunc, odd, obs);

  for (int d = 0; d <= out_trunc; ++d) {
    int expect = ring->betti(d);
    for (const auto& m : rep.maps)
      if (m.degree == d - 2) expect -= m.rank;
    if (rep.ring->betti(d) != expect)
      throw std::logic_error("circle_quotient: Betti bookkeeping mismatch in degree " +
                             std::to_string(d));
  }
  return rep;
}

RingPtr circle_quotient(const RingPtr& ring, const RingClass& e, const QuotientOptions& opt) {
  return circle_quotient_report(ring, e, opt).ring;
}

TorusQuotient torus_quotient(const BundleSpec& spec) {
  TorusQuotient out;
  out.ring = spec.base;
  std::vector<int> deg2;
  for (int i = 0; i < spec.base->ngens(); ++i)
    if (spec.base->generators()[static_cast<std::size_t>(i)].degree == 2) deg2.push_back(i);
  // Image of each base generator in the current ring.
  std::vector<Poly> images;
  for (int i = 0; i < spec.base->ngens(); ++i) images.push_back(Poly::var(i));
  for (std::size_t s = 0; s < spec.euler.size(); ++s) {
    const auto& v = spec.euler[s];
    if (v.size() != deg2.size())
      throw std::invalid_argument("torus_quotient: Euler vector length differs from degree-2 rank");
    Poly e;
    for (std::size_t k = 0; k < v.size(); ++k) e += images[static_cast<std::size_t>(deg2[k])] * Rat(v[k]);
    QuotientOptions opt;
    opt.stage = static_cast<int>(s) + 1;
    if (s < spec.stage_names.size()) opt.rename = spec.stage_names[s];
    if (s < spec.stage_truncation.size()) opt.truncation = spec.stage_truncation[s];
    try {
      auto rep = circle_quotient_report(out.ring, out.ring->normal_form(e), opt);
      for (auto& p : images) p = p.substitute(rep.substitution);
      out.ring = rep.ring;
      out.stages.push_back(std::move(rep));
    } catch (const NotInjective&) {
      throw;
    } catch (const Error& err) {
      throw Error(err.kind(), "stage " + std::to_string(s + 1) + ": " + err.what());
    }
  }
  return out;
}

namespace {

// gcd of all k x k minors of an integer matrix.
mpz_class minor_gcd(const std::vector<std::vector<long>>& m, std::size_t k) {
  if (k == 0) return 1;
  const std::size_t rows = m.size(), cols = m.front().size();
  mpz_class g = 0;
  std::vector<std::size_t> ri, ci;
  std::function<void(std::size_t)> pick_cols;
  std::function<void(std::size_t)> pick_rows = [&](std::size_t start) {
    if (ri.size() == k) {
      pick_cols(0);
      return;
    }
    for (std::size_t r = start; r < rows; ++r) {
      ri.push_back(r);
      pick_rows(r + 1);
      ri.pop_back();
    }
  };
  pick_cols = [&](std::size_t start) {
    if (ci.size() == k) {
      RatMat sub(k, RatVec(k));
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) sub[a][b] = Rat(m[ri[a]][ci[b]]);
      Rat d = det(sub);
      g = gcd(g, mpz_class(d.get_num()));
      return;
    }
    for (std::size_t c = start; c < cols; ++c) {
      ci.push_back(c);
      pick_cols(c + 1);
      ci.pop_back();
    }
  };
  pick_rows(0);
  return g;
}

}  // namespace

bool check_primitive(const std::vector<std::vector<long>>& lattice_relations,
                     const std::vector<long>& e) {
  if (e.empty()) throw std::invalid_argument("check_primitive: empty vector");
  for (const auto& r : lattice_relations)
    if (r.size() != e.size()) throw std::invalid_argument("check_primitive: length mismatch");
  auto to_rat = [](const std::vector<std::vector<long>>& m) {
    RatMat out;
    for (const auto& r : m) {
      RatVec v;
      for (long x : r) v.emplace_back(x);
      out.push_back(v);
    }
    return out;
  };
  auto with_e = lattice_relations;
  with_e.push_back(e);
  const int n = static_cast<int>(e.size());
  const int k0 = lattice_relations.empty() ? 0 : rank(to_rat(lattice_relations), n);
  const int k1 = rank(to_rat(with_e), n);
  if (k1 == k0) throw ZeroClass("check_primitive: class vanishes in the quotient lattice");
  // Determinantal divisors of the generating matrices; unimodular row operations
  // leave them unchanged, so their ratio is the divisibility of e modulo the lattice.
  mpz_class d0 = k0 == 0 ? mpz_class(1) : minor_gcd(lattice_relations, static_cast<std::size_t>(k0));
  mpz_class d1 = minor_gcd(with_e, static_cast<std::size_t>(k1));
  return d1 == d0;
}

}  // namespace ptb
