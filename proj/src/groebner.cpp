#include "ptb/groebner.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ptb/errors.hpp"
#include "ptb/linalg.hpp"

namespace ptb {

int compare(const Mono& a, const Mono& b, MonoOrder order, int nvars) {
  if (order == MonoOrder::grevlex) {
    int da = a.total(), db = b.total();
    if (da != db) return da > db ? 1 : -1;
    for (int i = nvars - 1; i >= 0; --i)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }
  for (int i = 0; i < nvars; ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

Mono leading_monomial(const Poly& p, MonoOrder order, int nvars) {
  if (p.is_zero()) throw std::invalid_argument("leading monomial of zero");
  Mono best = p.terms().begin()->first;
  for (const auto& [m, c] : p.terms())
    if (compare(m, best, order, nvars) > 0) best = m;
  return best;
}

namespace {

struct Term {
  Mono m;
  Rat c;
};

// Terms in ascending order; the leading term is back().
struct TPoly {
  std::vector<Term> t;
  bool empty() const { return t.empty(); }
  const Term& lead() const { return t.back(); }
};

struct Ctx {
  MonoOrder order;
  int nvars;
  bool less(const Mono& a, const Mono& b) const { return compare(a, b, order, nvars) < 0; }
};

TPoly to_t(const Poly& p, const Ctx& ctx) {
  TPoly r;
  for (const auto& [m, c] : p.terms()) r.t.push_back({m, c});
  std::sort(r.t.begin(), r.t.end(), [&](const Term& a, const Term& b) { return ctx.less(a.m, b.m); });
  return r;
}

Poly from_t(const TPoly& p) {
  Poly r;
  for (const auto& x : p.t) r.add_term(x.m, x.c);
  return r;
}

// a - c * m * b
TPoly sub_mul(const TPoly& a, const Rat& c, const Mono& m, const TPoly& b, const Ctx& ctx) {
  TPoly r;
  r.t.reserve(a.t.size() + b.t.size());
  std::size_t i = 0, j = 0;
  while (i < a.t.size() || j < b.t.size()) {
    if (j == b.t.size()) {
      r.t.push_back(a.t[i++]);
      continue;
    }
    Mono bm = b.t[j].m * m;
    if (i == a.t.size()) {
      r.t.push_back({bm, -c * b.t[j].c});
      ++j;
      continue;
    }
    int cmp = compare(a.t[i].m, bm, ctx.order, ctx.nvars);
    if (cmp < 0) {
      r.t.push_back(a.t[i++]);
    } else if (cmp > 0) {
      r.t.push_back({bm, -c * b.t[j].c});
      ++j;
    } else {
      Rat v = a.t[i].c - c * b.t[j].c;
      if (v != 0) r.t.push_back({bm, v});
      ++i;
      ++j;
    }
  }
  return r;
}

struct Elem {
  TPoly p;
  std::vector<Poly> cof;
};

struct Reducer {
  const Ctx& ctx;
  const std::vector<Elem>& basis;
  bool track;

  // Full reduction; returns the remainder with its cofactors.
  Elem operator()(Elem f) const {
    Elem rem;
    rem.cof = f.cof;
    std::vector<Term> done;  // descending
    while (!f.p.empty()) {
      const Term lt = f.p.lead();
      const Elem* div = nullptr;
      for (const auto& g : basis)
        if (g.p.lead().m.divides(lt.m)) {
          div = &g;
          break;
        }
      if (!div) {
        done.push_back(lt);
        f.p.t.pop_back();
        continue;
      }
      Mono q = lt.m / div->p.lead().m;
      Rat c = lt.c / div->p.lead().c;
      f.p = sub_mul(f.p, c, q, div->p, ctx);
      if (track)
        for (std::size_t k = 0; k < f.cof.size(); ++k) f.cof[k] -= div->cof[k].mul_mono(q, c);
    }
    std::reverse(done.begin(), done.end());
    rem.p.t = std::move(done);
    rem.cof = std::move(f.cof);
    return rem;
  }
};

void make_monic(Elem& e, bool track) {
  Rat inv = 1 / e.p.lead().c;
  for (auto& x : e.p.t) x.c *= inv;
  if (track)
    for (auto& c : e.cof) c *= inv;
}

bool is_constant(const TPoly& p) { return p.t.size() == 1 && p.lead().m.is_one(); }

}  // namespace

GroebnerBasis groebner(const std::vector<Poly>& input, int nvars, const GroebnerOptions& opt) {
  if (nvars > kMaxVars) throw DegreeBudgetExceeded("too many variables for the Groebner engine");
  Ctx ctx{opt.order, nvars};
  const bool track = opt.track_cofactors;
  GroebnerBasis out;
  out.order = opt.order;
  out.nvars = nvars;
  std::vector<Elem> basis;
  auto finish_unit = [&](const Elem& e) {
    out.unit = true;
    out.g = {Poly(Rat(1))};
    if (track) {
      Rat inv = 1 / e.p.lead().c;
      for (const auto& c : e.cof) out.certificate.push_back(c * inv);
    }
    return out;
  };

  struct Pair {
    std::size_t i, j;
    Mono lcm;
  };
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_elem = [&](Elem e) {
    make_monic(e, track);
    const std::size_t k = basis.size();
    basis.push_back(std::move(e));
    for (std::size_t i = 0; i < k; ++i) {
      pairs.push_back({i, k, lcm(basis[i].p.lead().m, basis[k].p.lead().m)});
      pending.insert({i, k});
    }
  };

  for (std::size_t k = 0; k < input.size(); ++k) {
    if (input[k].is_zero()) continue;
    Elem e;
    e.p = to_t(input[k], ctx);
    if (track) {
      e.cof.assign(input.size(), Poly());
      e.cof[k] = Poly(Rat(1));
    }
    Elem r = Reducer{ctx, basis, track}(std::move(e));
    if (r.p.empty()) continue;
    if (is_constant(r.p)) return finish_unit(r);
    add_elem(std::move(r));
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      int c = compare(a.lcm, b.lcm, ctx.order, ctx.nvars);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    Pair pr = *best;
    pairs.erase(best);
    pending.erase({pr.i, pr.j});
    const Mono& li = basis[pr.i].p.lead().m;
    const Mono& lj = basis[pr.j].p.lead().m;
    if (lcm(li, lj) == li * lj) continue;  // coprime leading monomials
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis[k].p.lead().m.divides(pr.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      chain = !pending.count(key(pr.i, k)) && !pending.count(key(pr.j, k));
    }
    if (chain) continue;
    if (basis.size() > opt.max_basis) throw DegreeBudgetExceeded("Groebner basis grew beyond budget");

    Elem s;
    Mono qi = pr.lcm / li, qj = pr.lcm / lj;
    TPoly zero;
    s.p = sub_mul(sub_mul(zero, Rat(-1), qi, basis[pr.i].p, ctx), Rat(1), qj, basis[pr.j].p, ctx);
    if (track) {
      s.cof.assign(input.size(), Poly());
      for (std::size_t k = 0; k < input.size(); ++k)
        s.cof[k] = basis[pr.i].cof[k].mul_mono(qi, 1) - basis[pr.j].cof[k].mul_mono(qj, 1);
    }
    Elem r = Reducer{ctx, basis, track}(std::move(s));
    if (r.p.empty()) continue;
    if (is_constant(r.p)) return finish_unit(r);
    add_elem(std::move(r));
  }

  // Minimalize and interreduce (cofactors are no longer needed).
  std::vector<Elem> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Mono& a = basis[j].p.lead().m;
      const Mono& b = basis[i].p.lead().m;
      if (a.divides(b) && (a != b || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(Elem{basis[i].p, {}});
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Elem> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    // Reduce the tail only: the leading term is not divisible by any other lead.
    Elem tail{minimal[i].p, {}};
    Term lt = tail.p.lead();
    tail.p.t.pop_back();
    Elem r = Reducer{ctx, others, false}(std::move(tail));
    r.p.t.push_back(lt);
    minimal[i] = std::move(r);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Elem& a, const Elem& b) { return ctx.less(a.p.lead().m, b.p.lead().m); });
  for (const auto& e : minimal) out.g.push_back(from_t(e.p));
  return out;
}

Poly reduce(const Poly& f, const GroebnerBasis& G) {
  Ctx ctx{G.order, G.nvars};
  std::vector<Elem> basis;
  for (const auto& g : G.g) basis.push_back(Elem{to_t(g, ctx), {}});
  Elem e{to_t(f, ctx), {}};
  return from_t(Reducer{ctx, basis, false}(std::move(e)).p);
}

bool in_ideal(const Poly& f, const GroebnerBasis& G) { return reduce(f, G).is_zero(); }

bool is_zero_dimensional(const GroebnerBasis& G) {
  if (G.unit) return true;
  for (int v = 0; v < G.nvars; ++v) {
    bool found = false;
    for (const auto& g : G.g) {
      Mono lm = leading_monomial(g, G.order, G.nvars);
      if (lm[v] > 0 && lm.total() == lm[v]) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<Mono> standard_monomials(const GroebnerBasis& G) {
  if (!is_zero_dimensional(G)) throw std::invalid_argument("standard_monomials: ideal not zero-dimensional");
  if (G.unit) return {};
  std::vector<Mono> leads;
  for (const auto& g : G.g) leads.push_back(leading_monomial(g, G.order, G.nvars));
  auto is_standard = [&](const Mono& m) {
    return std::none_of(leads.begin(), leads.end(), [&](const Mono& l) { return l.divides(m); });
  };
  std::vector<Mono> out;
  Mono cur;
  std::function<void(int)> rec = [&](int v) {
    if (v == G.nvars) {
      out.push_back(cur);
      return;
    }
    for (int e = 0;; ++e) {
      cur.at(v) = static_cast<std::uint8_t>(e);
      // Once cur (with later variables zero) is non-standard, larger exponents are too.
      if (!is_standard(cur)) break;
      rec(v + 1);
    }
    cur.at(v) = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end(),
            [&](const Mono& a, const Mono& b) { return compare(a, b, G.order, G.nvars) < 0; });
  return out;
}

std::vector<int> independent_variables(const GroebnerBasis& G, const std::vector<int>& prefer) {
  std::vector<Mono> leads;
  for (const auto& g : G.g) leads.push_back(leading_monomial(g, G.order, G.nvars));
  std::vector<int> order = prefer;
  for (int v = 0; v < G.nvars; ++v)
    if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
  std::vector<int> u;
  std::vector<bool> in(static_cast<std::size_t>(G.nvars), false);
  for (int v : order) {
    in[static_cast<std::size_t>(v)] = true;
    bool ok = std::none_of(leads.begin(), leads.end(), [&](const Mono& l) {
      for (int k = 0; k < G.nvars; ++k)
        if (l[k] > 0 && !in[static_cast<std::size_t>(k)]) return false;
      return true;
    });
    if (ok)
      u.push_back(v);
    else
      in[static_cast<std::size_t>(v)] = false;
  }
  return u;
}

UPoly minimal_polynomial(const Poly& f, const GroebnerBasis& G) {
  auto sm = standard_monomials(G);
  const int n = static_cast<int>(sm.size());
  if (n == 0) return UPoly({Rat(1)});
  auto coords = [&](const Poly& p) {
    RatVec v(static_cast<std::size_t>(n), Rat(0));
    Poly r = reduce(p, G);
    for (const auto& [m, c] : r.terms()) {
      auto it = std::find(sm.begin(), sm.end(), m);
      v[static_cast<std::size_t>(it - sm.begin())] = c;
    }
    return v;
  };
  std::vector<RatVec> powers;
  Poly cur(Rat(1));
  for (int k = 0; k <= n; ++k) {
    powers.push_back(coords(cur));
    // Is powers[k] in the span of the earlier ones?
    RatMat m(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(k + 1)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= k; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = powers[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    auto ker = kernel(m, k + 1);
    if (!ker.empty()) {
      // The first dependency involves the top power with a nonzero coefficient.
      const auto& v = ker.front();
      return UPoly(v).monic();
    }
    cur = reduce(cur * f, G);
  }
  throw std::logic_error("minimal_polynomial: no dependency found");
}

GroebnerBasis zero_dim_radical(const GroebnerBasis& G) {
  if (G.unit) return G;
  std::vector<Poly> gens = G.g;
  for (int v = 0; v < G.nvars; ++v) gens.push_back(squarefree_part(minimal_polynomial(Poly::var(v), G)).to_poly(v));
  GroebnerOptions opt;
  opt.order = G.order;
  return groebner(gens, G.nvars, opt);
}

std::vector<std::vector<Rat>> rational_points(const GroebnerBasis& G) {
  if (G.unit) return {};
  if (!is_zero_dimensional(G)) throw std::invalid_argument("rational_points: ideal not zero-dimensional");
  std::vector<std::vector<Rat>> cand;
  for (int v = 0; v < G.nvars; ++v) cand.push_back(rational_roots(minimal_polynomial(Poly::var(v), G)));
  std::vector<int> support_max;
  for (const auto& g : G.g) support_max.push_back(g.max_var());
  std::vector<std::vector<Rat>> out;
  std::vector<Rat> cur(static_cast<std::size_t>(G.nvars));
  std::vector<Poly> ev(static_cast<std::size_t>(G.nvars));
  // Assign variables in index order; a generator is checked once its last variable is set.
  std::function<void(int)> rec = [&](int v) {
    if (v == G.nvars) {
      out.push_back(cur);
      return;
    }
    for (const auto& r : cand[static_cast<std::size_t>(v)]) {
      cur[static_cast<std::size_t>(v)] = r;
      for (int k = 0; k <= v; ++k) ev[static_cast<std::size_t>(k)] = Poly(cur[static_cast<std::size_t>(k)]);
      bool ok = true;
      for (std::size_t i = 0; i < G.g.size() && ok; ++i)
        if (support_max[i] == v) ok = G.g[i].substitute(ev).is_zero();
      if (ok) rec(v + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::string poly_list_string(const std::vector<Poly>& ps, const std::vector<std::string>& names) {
  std::string s = "[";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) s += ", ";
    s += to_string(ps[i], names);
  }
  return s + "]";
}

}  // namespace ptb
