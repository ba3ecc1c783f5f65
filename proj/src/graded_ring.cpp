#include "ptb/graded_ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ptb {

bool RingClass::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rat& c) { return c == 0; });
}

RingPtr GradedRing::create(std::vector<Generator> gens, std::vector<Poly> relations, int truncation,
                           int odd_zero_through, std::optional<OddObstruction> obstruction) {
  if (gens.size() > static_cast<std::size_t>(kMaxVars))
    throw std::invalid_argument("too many generators");
  if (truncation < 0) throw std::invalid_argument("negative truncation");
  std::set<std::string> seen;
  for (const auto& g : gens) {
    if (g.degree <= 0) throw std::invalid_argument("generator degree must be positive: " + g.name);
    if (!seen.insert(g.name).second) throw std::invalid_argument("duplicate generator " + g.name);
  }
  std::shared_ptr<GradedRing> r(new GradedRing());
  r->gens_ = std::move(gens);
  for (const auto& g : r->gens_) r->weights_.push_back(g.degree);
  r->truncation_ = truncation;
  r->odd_zero_through_ = odd_zero_through;
  r->obstruction_ = std::move(obstruction);
  for (auto& p : relations) {
    if (p.is_zero()) continue;
    if (p.max_var() >= r->ngens()) throw std::invalid_argument("relation uses unknown generator");
    int d = p.weighted_degree(r->weights_);
    if (d > truncation)
      throw TruncationExceeded("relation of degree " + std::to_string(d) + " above truncation " +
                               std::to_string(truncation));
    r->relations_.push_back(std::move(p));
  }
  r->build();
  return r;
}

void GradedRing::build() {
  std::vector<int> all(gens_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  pieces_.resize(static_cast<std::size_t>(truncation_) + 1);
  for (int d = 0; d <= truncation_; ++d) {
    Piece& P = pieces_[static_cast<std::size_t>(d)];
    P.monomials = monomials_of_degree(all, weights_, d);
    const int n = static_cast<int>(P.monomials.size());
    for (int j = 0; j < n; ++j) P.column.emplace(P.monomials[static_cast<std::size_t>(j)], j);
    RatMat rows;
    for (const auto& r : relations_) {
      int rd = r.weighted_degree(weights_);
      if (rd > d) continue;
      for (const auto& m : monomials_of_degree(all, weights_, d - rd)) {
        RatVec row(static_cast<std::size_t>(n), Rat(0));
        for (const auto& [mm, c] : r.terms())
          row[static_cast<std::size_t>(P.column.at(mm * m))] += c;
        rows.push_back(std::move(row));
      }
    }
    auto piv = rref(rows, n, PivotSide::trailing);
    std::vector<int> pivot_row(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < piv.size(); ++i) pivot_row[static_cast<std::size_t>(piv[i])] = static_cast<int>(i);
    std::vector<int> basis_index(static_cast<std::size_t>(n), -1);
    for (int j = 0; j < n; ++j) {
      if (pivot_row[static_cast<std::size_t>(j)] < 0) {
        basis_index[static_cast<std::size_t>(j)] = static_cast<int>(P.basis.size());
        P.basis.push_back(P.monomials[static_cast<std::size_t>(j)]);
      }
    }
    const std::size_t b = P.basis.size();
    P.nf.assign(static_cast<std::size_t>(n), RatVec(b, Rat(0)));
    for (int j = 0; j < n; ++j) {
      auto& v = P.nf[static_cast<std::size_t>(j)];
      int pr = pivot_row[static_cast<std::size_t>(j)];
      if (pr < 0) {
        v[static_cast<std::size_t>(basis_index[static_cast<std::size_t>(j)])] = 1;
        continue;
      }
      // Row: m_j + sum over free columns k of a_k m_k = 0.
      for (int k = 0; k < n; ++k) {
        if (basis_index[static_cast<std::size_t>(k)] < 0) continue;
        const Rat& a = rows[static_cast<std::size_t>(pr)][static_cast<std::size_t>(k)];
        if (a != 0) v[static_cast<std::size_t>(basis_index[static_cast<std::size_t>(k)])] = -a;
      }
    }
    P.slice = std::move(rows);
  }
}

std::vector<std::string> GradedRing::names() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(g.name);
  return out;
}

int GradedRing::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return static_cast<int>(i);
  throw std::invalid_argument("unknown generator " + name);
}

const GradedRing::Piece& GradedRing::piece(int d) const {
  if (d > truncation_)
    throw TruncationExceeded("degree " + std::to_string(d) + " above truncation " +
                             std::to_string(truncation_));
  if (d < 0) throw std::invalid_argument("negative degree");
  return pieces_[static_cast<std::size_t>(d)];
}

const std::vector<Mono>& GradedRing::degree_basis(int d) const { return piece(d).basis; }
const std::vector<Mono>& GradedRing::monomials(int d) const { return piece(d).monomials; }

const RatVec& GradedRing::monomial_coords(const Mono& m) const {
  const Piece& P = piece(m.weighted(weights_));
  return P.nf[static_cast<std::size_t>(P.column.at(m))];
}

std::vector<int> GradedRing::betti_table() const {
  std::vector<int> out;
  for (int d = 0; d <= truncation_; ++d) out.push_back(betti(d));
  return out;
}

RingClass GradedRing::zero(int d) const {
  return RingClass{shared_from_this(), d, RatVec(static_cast<std::size_t>(betti(d)), Rat(0))};
}

RingClass GradedRing::unit() const { return normal_form(Poly(Rat(1))); }

RingClass GradedRing::generator(int i) const { return normal_form(Poly::var(i)); }

RingClass GradedRing::normal_form(const Poly& p) const {
  if (p.max_var() >= ngens()) throw std::invalid_argument("polynomial uses unknown generator");
  if (p.is_zero()) return zero(0);
  const int d = p.weighted_degree(weights_);
  const Piece& P = piece(d);
  RingClass out{shared_from_this(), d, RatVec(P.basis.size(), Rat(0))};
  for (const auto& [m, c] : p.terms()) {
    const auto& v = P.nf[static_cast<std::size_t>(P.column.at(m))];
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) out.coords[i] += c * v[i];
  }
  return out;
}

Poly GradedRing::lift(const RingClass& c) const {
  const auto& b = degree_basis(c.degree);
  Poly p;
  for (std::size_t i = 0; i < b.size(); ++i) p.add_term(b[i], c.coords.at(i));
  return p;
}

std::vector<Poly> GradedRing::find_relations(const std::vector<int>& gens, int d) const {
  piece(d);  // truncation check
  for (int g : gens)
    if (g < 0 || g >= ngens()) throw std::invalid_argument("find_relations: bad generator index");
  auto mons = monomials_of_degree(gens, weights_, d);
  const int n = static_cast<int>(mons.size());
  const int b = betti(d);
  // Columns are monomials; rows are basis coordinates.
  RatMat m(static_cast<std::size_t>(b), RatVec(static_cast<std::size_t>(n), Rat(0)));
  for (int j = 0; j < n; ++j) {
    const auto& v = monomial_coords(mons[static_cast<std::size_t>(j)]);
    for (int i = 0; i < b; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(i)];
  }
  RatMat ker = kernel(m, n);
  rref(ker, n, PivotSide::leading);
  std::vector<Poly> out;
  for (const auto& row : ker) {
    Poly p;
    for (int j = 0; j < n; ++j) p.add_term(mons[static_cast<std::size_t>(j)], row[static_cast<std::size_t>(j)]);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Poly> GradedRing::ideal_slice(int d) const {
  const Piece& P = piece(d);
  std::vector<Poly> out;
  for (const auto& row : P.slice) {
    Poly p;
    for (std::size_t j = 0; j < row.size(); ++j) p.add_term(P.monomials[j], row[j]);
    out.push_back(std::move(p));
  }
  return out;
}

std::string GradedRing::serialize() const {
  std::ostringstream os;
  os << "trunc " << truncation_ << "\n";
  for (const auto& g : gens_) os << "gen " << g.name << " " << g.degree << "\n";
  auto nm = names();
  for (const auto& r : relations_) os << "rel " << to_text(r, nm, weights_) << "\n";
  return os.str();
}

RingPtr parse_ring(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<Generator> gens;
  std::vector<std::string> rel_src;
  int trunc = -1;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "trunc") {
      ls >> trunc;
    } else if (key == "gen") {
      Generator g;
      if (!(ls >> g.name >> g.degree)) throw std::invalid_argument("bad gen line: " + line);
      gens.push_back(g);
    } else if (key == "rel") {
      std::string rest;
      std::getline(ls, rest);
      rel_src.push_back(rest);
    } else {
      throw std::invalid_argument("unknown directive: " + key);
    }
  }
  if (trunc < 0) throw std::invalid_argument("missing trunc line");
  std::vector<std::string> names;
  for (const auto& g : gens) names.push_back(g.name);
  std::vector<Poly> rels;
  for (const auto& s : rel_src) rels.push_back(parse_poly(s, names));
  return GradedRing::create(gens, rels, trunc);
}

RingClass multiply(const RingClass& a, const RingClass& b) {
  if (a.ring != b.ring) throw RingMismatch("multiply: classes live in different rings");
  const GradedRing& R = *a.ring;
  const int d = a.degree + b.degree;
  if (d > R.truncation())
    throw TruncationExceeded("product degree " + std::to_string(d) + " above truncation");
  const auto& ba = R.degree_basis(a.degree);
  const auto& bb = R.degree_basis(b.degree);
  RingClass out = R.zero(d);
  for (std::size_t i = 0; i < ba.size(); ++i) {
    if (a.coords[i] == 0) continue;
    for (std::size_t j = 0; j < bb.size(); ++j) {
      if (b.coords[j] == 0) continue;
      Rat c = a.coords[i] * b.coords[j];
      const auto& v = R.monomial_coords(ba[i] * bb[j]);
      for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0) out.coords[k] += c * v[k];
    }
  }
  return out;
}

RingClass add(const RingClass& a, const RingClass& b) {
  if (a.ring != b.ring) throw RingMismatch("add: classes live in different rings");
  if (a.degree != b.degree) throw std::invalid_argument("add: degree mismatch");
  RingClass out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

RingClass scale(const RingClass& a, const Rat& c) {
  RingClass out = a;
  for (auto& x : out.coords) x *= c;
  return out;
}

RingPtr tensor_with_sphere(const RingPtr& ring, int n, const std::string& name) {
  if (n < 2) throw SphereTooSmall("sphere dimension must be at least 2");
  auto gens = ring->generators();
  gens.push_back({name, n});
  auto rels = ring->relations();
  const int z = static_cast<int>(gens.size()) - 1;
  if (2 * n <= ring->truncation()) rels.push_back(Poly::monomial(Mono::var(z, 2)));
  int odd = ring->odd_zero_through();
  if (n % 2 == 1) odd = std::min(odd, n - 2);
  return GradedRing::create(gens, rels, ring->truncation(), odd, ring->obstruction());
}

}  // namespace ptb
