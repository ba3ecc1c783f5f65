#include <omp.h>

#include <algorithm>
#include <functional>

#include "ptb/errors.hpp"
#include "ptb/iso.hpp"

namespace ptb {

std::string to_string(IsoResult r) {
  switch (r) {
    case IsoResult::iso: return "iso";
    case IsoResult::not_iso: return "not-iso";
    case IsoResult::unknown: return "unknown";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Induced maps

WellformedReport induced_map_wellformed(const RingPtr& source, const RingPtr& target,
                                        const RatMat& matrix) {
  WellformedReport rep;
  const auto& basis = target->degree_basis(2);
  const std::size_t n = static_cast<std::size_t>(source->ngens());
  if (matrix.size() != basis.size() || (!matrix.empty() && matrix[0].size() != n)) {
    rep.failure = "matrix shape does not match the degree-2 pieces";
    return rep;
  }
  std::vector<Poly> images(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < basis.size(); ++k) images[i] += Poly::monomial(basis[k], matrix[k][i]);
  rep.det = basis.size() == n ? det(matrix) : Rat(0);
  const int top = std::min(source->truncation(), target->truncation());
  const auto src_names = source->names();
  const auto tgt_names = target->names();
  bool all = true;
  for (const auto& rel : source->relations()) {
    if (rel.weighted_degree(source->weights()) > top) continue;
    Poly img = rel.substitute(images);
    RelationCheck c{to_string(rel, src_names, source->weights()), to_string(img, tgt_names, target->weights()),
                    target->is_zero(img)};
    if (!c.vanishes && all) rep.failure = "relation " + c.relation + " maps outside the target ideal";
    all = all && c.vanishes;
    rep.checks.push_back(std::move(c));
  }
  if (all && rep.det == 0) rep.failure = "singular";
  rep.ok = all && rep.det != 0;
  return rep;
}

// ---------------------------------------------------------------------------
// Small polynomial systems

namespace {

Poly product(const std::vector<Poly>& ps) {
  Poly h(Rat(1));
  for (const auto& p : ps) h = h * p;
  return h;
}

// Rational point of the saturated ideal, found by specializing a maximal independent
// set to small integers. Bounded search; failure only means no witness was produced.
std::optional<std::vector<Rat>> rational_witness(const std::vector<Poly>& system, int nvars,
                                                 int nunknowns) {
  static const int values[] = {0, 1, -1, 2, -2, 3, -3};
  int budget = 64;
  std::function<std::optional<std::vector<Rat>>(std::vector<Poly>, const GroebnerBasis&)> rec =
      [&](std::vector<Poly> cur, const GroebnerBasis& G) -> std::optional<std::vector<Rat>> {
    if (is_zero_dimensional(G)) {
      auto pts = rational_points(G);
      if (pts.empty()) return std::nullopt;
      return std::vector<Rat>(pts.front().begin(), pts.front().begin() + nunknowns);
    }
    std::vector<int> prefer;
    for (int v = 0; v < nunknowns; ++v) prefer.push_back(v);
    auto ind = independent_variables(G, prefer);
    if (ind.empty()) return std::nullopt;
    const int u = ind.front();
    for (int val : values) {
      if (--budget < 0) return std::nullopt;
      cur.push_back(Poly::var(u) - Poly(Rat(val)));
      GroebnerBasis H = groebner(cur, nvars);
      if (!H.unit)
        if (auto w = rec(cur, H)) return w;
      cur.pop_back();
    }
    return std::nullopt;
  };
  GroebnerBasis G = groebner(system, nvars);
  if (G.unit) return std::nullopt;
  return rec(system, G);
}

}  // namespace

SystemResult solve_small_system(const std::vector<Poly>& polys, const std::vector<Poly>& nonvanishing,
                                int nunknowns, const SolveBudget& budget) {
  if (nunknowns > budget.max_unknowns)
    throw DegreeBudgetExceeded("system has " + std::to_string(nunknowns) + " unknowns, budget " +
                               std::to_string(budget.max_unknowns));
  SystemResult r;
  for (const auto& p : polys)
    if (!p.is_zero()) r.system.push_back(p);
  r.nvars = nunknowns;
  if (!nonvanishing.empty()) {
    Poly h = product(nonvanishing);
    r.system.push_back(h * Poly::var(nunknowns) - Poly(Rat(1)));
    r.nvars = nunknowns + 1;
  }
  for (const auto& p : r.system)
    if (p.total_degree() > budget.max_degree)
      throw DegreeBudgetExceeded("input degree " + std::to_string(p.total_degree()) + " exceeds budget " +
                                 std::to_string(budget.max_degree));
  if (r.nvars > kMaxVars) throw DegreeBudgetExceeded("too many variables");

  GroebnerBasis G = groebner(r.system, r.nvars);
  if (G.unit) {
    GroebnerOptions opt;
    opt.track_cofactors = true;
    r.certificate = groebner(r.system, r.nvars, opt).certificate;
    return r;
  }
  r.consistent = true;
  r.description = G.g;
  r.witness = rational_witness(r.system, r.nvars, nunknowns);
  return r;
}

bool verify_inconsistency(const SystemResult& r) {
  if (r.consistent || r.certificate.size() != r.system.size()) return false;
  Poly sum;
  for (std::size_t i = 0; i < r.system.size(); ++i) sum += r.certificate[i] * r.system[i];
  return sum == Poly(Rat(1));
}

// ---------------------------------------------------------------------------
// Decision

namespace {

struct Component {
  enum Kind { linear, point, family } kind;
  int index = 0;  // into locus.linear / points / families
  int cap = 1;
};

std::vector<Component> components_of(const CubeZeroLocus& L) {
  std::vector<Component> out;
  for (std::size_t i = 0; i < L.linear.size(); ++i)
    out.push_back({Component::linear, static_cast<int>(i), L.linear[i]});
  for (std::size_t i = 0; i < L.points.size(); ++i) out.push_back({Component::point, static_cast<int>(i), 1});
  for (std::size_t i = 0; i < L.families.size(); ++i)
    out.push_back({Component::family, static_cast<int>(i), L.families[i].count});
  return out;
}

std::string component_name(const CubeZeroLocus& L, const Component& c) {
  switch (c.kind) {
    case Component::linear: return L.describe()[static_cast<std::size_t>(c.index)];
    case Component::point: {
      Poly p;
      for (std::size_t k = 0; k < L.points[static_cast<std::size_t>(c.index)].size(); ++k)
        p.add_term(Mono::var(static_cast<int>(k)), L.points[static_cast<std::size_t>(c.index)][k]);
      return "[" + to_string(p, L.names) + "]";
    }
    case Component::family: return "family" + std::to_string(c.index);
  }
  return "";
}

Poly determinant(const std::vector<std::vector<Poly>>& A) {
  const std::size_t n = A.size();
  if (n == 0) return Poly(Rat(1));
  if (n == 1) return A[0][0];
  Poly d;
  for (std::size_t j = 0; j < n; ++j) {
    if (A[0][j].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(A[i][k]);
      minor.push_back(std::move(row));
    }
    Poly term = A[0][j] * determinant(minor);
    d = (j % 2 == 0) ? d + term : d - term;
  }
  return d;
}

struct ShapeSystem {
  std::vector<Poly> equations;
  std::vector<std::vector<Poly>> matrix;  // target coordinate x source generator
  std::vector<std::string> unknown_names;
};

ShapeSystem build_shape(const RingPtr& source, const RingPtr& target, const CubeZeroLocus& L,
                        const std::vector<Component>& comps, const std::vector<int>& shape) {
  const int g = target->ngens();
  const int n = source->ngens();
  ShapeSystem S;
  S.matrix.assign(static_cast<std::size_t>(g), std::vector<Poly>(static_cast<std::size_t>(n)));
  std::vector<Poly> minpolys;
  int next = 0;
  for (int i = 0; i < n; ++i) {
    const Component& c = comps[static_cast<std::size_t>(shape[static_cast<std::size_t>(i)])];
    const std::string tag = std::to_string(i + 1);
    auto col = [&](int k) -> Poly& { return S.matrix[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]; };
    if (c.kind == Component::linear) {
      for (int k = 0; k < L.linear[static_cast<std::size_t>(c.index)]; ++k) {
        col(k) = Poly::var(next++);
        S.unknown_names.push_back("w" + tag + "_" + std::to_string(k + 1));
      }
    } else if (c.kind == Component::point) {
      const Poly lam = Poly::var(next++);
      S.unknown_names.push_back("l" + tag);
      for (int k = 0; k < g; ++k) col(k) = lam * L.points[static_cast<std::size_t>(c.index)][static_cast<std::size_t>(k)];
    } else {
      const auto& f = L.families[static_cast<std::size_t>(c.index)];
      const int theta = next++;
      const Poly lam = Poly::var(next++);
      S.unknown_names.push_back("t" + tag);
      S.unknown_names.push_back("l" + tag);
      for (int k = 0; k < g; ++k) col(k) = lam * f.coords[static_cast<std::size_t>(k)].to_poly(theta);
      minpolys.push_back(f.minpoly.to_poly(theta));
    }
  }
  std::vector<CoeffPoly> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < g; ++k)
      if (!S.matrix[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)].is_zero())
        images[static_cast<std::size_t>(i)][Mono::var(k)] = S.matrix[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
  for (const auto& rel : source->relations())
    for (auto& e : pushforward_equations(target, rel, images))
      if (!e.is_zero()) S.equations.push_back(std::move(e));
  for (auto& m : minpolys) S.equations.push_back(std::move(m));
  return S;
}

struct ShapeOutcome {
  ShapeRecord record;
  SystemResult result;
  ShapeSystem system;
};

ShapeOutcome evaluate_shape(const RingPtr& source, const RingPtr& target, const CubeZeroLocus& L,
                            const std::vector<Component>& comps, const std::vector<int>& shape) {
  ShapeOutcome out;
  out.system = build_shape(source, target, L, comps, shape);
  out.record.components = shape;
  const auto names = source->names();
  for (std::size_t i = 0; i < shape.size(); ++i)
    out.record.description += (i ? ", " : "") + names[i] + " -> " + component_name(L, comps[static_cast<std::size_t>(shape[i])]);
  const int nu = static_cast<int>(out.system.unknown_names.size());
  out.record.unknowns = nu;
  out.result = solve_small_system(out.system.equations, {determinant(out.system.matrix)}, nu);
  out.record.consistent = out.result.consistent;
  if (!out.result.consistent) {
    out.record.verified = verify_inconsistency(out.result);
    for (const auto& c : out.result.certificate) out.record.certificate_terms += c.size();
  }
  return out;
}

std::vector<std::vector<int>> enumerate_shapes(const std::vector<Component>& comps, int n) {
  std::vector<std::vector<int>> shapes;
  std::vector<int> cur;
  std::vector<int> used(comps.size(), 0);
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == n) {
      shapes.push_back(cur);
      return;
    }
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (used[c] >= comps[c].cap) continue;
      ++used[c];
      cur.push_back(static_cast<int>(c));
      rec();
      cur.pop_back();
      --used[c];
    }
  };
  rec();
  return shapes;
}

std::string betti_string(const std::vector<int>& b) {
  std::string s = "(";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  return s + ")";
}

IsoCertificate make_certificate(const RingPtr& source, const RingPtr& target, const ShapeOutcome& o) {
  IsoCertificate cert;
  cert.components = o.record.components;
  cert.unknown_names = o.system.unknown_names;
  if (o.result.witness) {
    cert.rational = true;
    std::vector<Poly> at;
    for (const auto& v : *o.result.witness) at.emplace_back(v);
    for (const auto& row : o.system.matrix) {
      RatVec r;
      for (const auto& e : row) r.push_back(e.substitute(at).coeff(Mono{}));
      cert.matrix.push_back(std::move(r));
    }
    cert.verification = induced_map_wellformed(source, target, cert.matrix);
    if (!cert.verification.ok) throw std::logic_error("rational witness failed re-verification");
    return cert;
  }
  auto names = cert.unknown_names;
  names.push_back("s");
  for (const auto& p : o.result.description) cert.description.push_back(to_string(p, names));
  // The equations lie in the saturated ideal, which is proper: the map exists over the
  // algebraic closure. Record that check.
  GroebnerBasis G = groebner(o.result.system, o.result.nvars);
  cert.verification.ok = !G.unit && std::all_of(o.result.system.begin(), o.result.system.end(),
                                                 [&](const Poly& p) { return in_ideal(p, G); });
  cert.verification.failure = cert.verification.ok ? "" : "algebraic witness failed re-verification";
  return cert;
}

}  // namespace

IsoDecision iso_decide(const RingPtr& source, const RingPtr& target, Exec mode) {
  IsoDecision D;
  for (const auto& R : {source, target})
    for (const auto& g : R->generators())
      if (g.degree != 2) throw ScopeViolation("iso_decide needs rings generated in degree 2");
  for (int i = 0; i < source->ngens(); ++i)
    if (!source->is_zero(Poly::var(i).pow(3)))
      throw ScopeViolation("source generator " + source->names()[static_cast<std::size_t>(i)] + " has nonzero cube");
  if (target->betti(2) != target->ngens()) throw ScopeViolation("target has degree-2 relations");

  const int top = std::min({source->truncation(), target->truncation(), 6});
  std::vector<int> bs, bt;
  for (int d = 0; d <= top; d += 2) {
    bs.push_back(source->betti(d));
    bt.push_back(target->betti(d));
  }
  if (bs != bt) {
    D.result = IsoResult::not_iso;
    D.reason = "even Betti numbers differ: " + betti_string(bs) + " vs " + betti_string(bt);
    return D;
  }

  D.source_locus = cube_zero_locus(source);
  D.target_locus = cube_zero_locus(target);
  const auto& L = D.target_locus;
  if (!D.source_locus.decomposed || !L.decomposed) {
    D.result = IsoResult::unknown;
    D.reason = "cube-zero locus has a positive-dimensional component that is not a coordinate subspace";
    return D;
  }
  auto signature = [](const CubeZeroLocus& c) {
    auto lin = c.linear;
    std::sort(lin.begin(), lin.end());
    return std::make_pair(lin, c.point_count());
  };
  if (signature(D.source_locus) != signature(L)) {
    D.result = IsoResult::not_iso;
    D.reason = "cube-zero loci differ: " + std::to_string(D.source_locus.point_count()) + " points vs " +
               std::to_string(L.point_count()) + " points, linear components " +
               std::to_string(D.source_locus.linear.size()) + " vs " + std::to_string(L.linear.size());
    return D;
  }

  const auto comps = components_of(L);
  const auto shapes = enumerate_shapes(comps, source->ngens());
  std::vector<std::optional<ShapeOutcome>> outcomes(shapes.size());
  std::optional<std::size_t> winner;

  if (mode == Exec::serial) {
    for (std::size_t i = 0; i < shapes.size() && !winner; ++i) {
      outcomes[i] = evaluate_shape(source, target, L, comps, shapes[i]);
      if (outcomes[i]->record.consistent) winner = i;
    }
  } else {
    // Blocks of shapes in parallel; the lowest consistent index wins, so the outcome
    // does not depend on scheduling.
    const std::size_t block = static_cast<std::size_t>(std::max(1, 2 * omp_get_max_threads()));
    for (std::size_t start = 0; start < shapes.size() && !winner; start += block) {
      const std::size_t end = std::min(shapes.size(), start + block);
      std::vector<std::string> errors(end - start);
#pragma omp parallel for schedule(dynamic, 1)
      for (std::size_t i = start; i < end; ++i) {
        try {
          outcomes[i] = evaluate_shape(source, target, L, comps, shapes[i]);
        } catch (const std::exception& e) {
          errors[i - start] = e.what();
        }
      }
      for (std::size_t i = start; i < end; ++i) {
        if (!errors[i - start].empty()) throw std::runtime_error(errors[i - start]);
        if (!winner && outcomes[i]->record.consistent) winner = i;
      }
    }
  }

  const std::size_t last = winner ? *winner + 1 : shapes.size();
  for (std::size_t i = 0; i < last; ++i) D.shapes.push_back(outcomes[i]->record);
  if (winner) {
    D.result = IsoResult::iso;
    D.certificate = make_certificate(source, target, *outcomes[*winner]);
    D.reason = "consistent shape " + std::to_string(*winner) + ": " + outcomes[*winner]->record.description;
  } else {
    D.result = IsoResult::not_iso;
    D.reason = "all " + std::to_string(shapes.size()) + " shapes inconsistent";
    for (const auto& s : D.shapes)
      if (!s.verified) throw std::logic_error("inconsistency certificate failed re-verification");
  }
  return D;
}

}  // namespace ptb
