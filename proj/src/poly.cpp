#include "ptb/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace ptb {

int Mono::total() const {
  int s = 0;
  for (auto v : e) s += v;
  return s;
}

int Mono::weighted(const std::vector<int>& weights) const {
  int s = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) s += weights[i] * e[i];
  return s;
}

bool Mono::divides(const Mono& o) const {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Mono Mono::var(int i, int power) {
  if (i < 0 || i >= kMaxVars) throw std::out_of_range("variable index");
  Mono m;
  m.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(power);
  return m;
}

Mono operator*(const Mono& a, const Mono& b) {
  Mono r;
  for (std::size_t i = 0; i < r.e.size(); ++i) {
    int v = a.e[i] + b.e[i];
    if (v > 255) throw std::overflow_error("monomial exponent overflow");
    r.e[i] = static_cast<std::uint8_t>(v);
  }
  return r;
}

Mono operator/(const Mono& a, const Mono& b) {
  Mono r;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
  return r;
}

Mono lcm(const Mono& a, const Mono& b) {
  Mono r;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

std::size_t MonoHash::operator()(const Mono& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : m.e) h = (h ^ v) * 1099511628211ull;
  return h;
}

Poly::Poly(const Rat& c) {
  if (c != 0) terms_.emplace(Mono{}, c);
}

Poly Poly::monomial(const Mono& m, const Rat& c) {
  Poly p;
  p.add_term(m, c);
  return p;
}

Rat Poly::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total());
  return d;
}

bool Poly::is_homogeneous(const std::vector<int>& weights) const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int w = m.weighted(weights);
    if (d >= 0 && w != d) return false;
    d = w;
  }
  return true;
}

int Poly::weighted_degree(const std::vector<int>& weights) const {
  if (terms_.empty()) return -1;
  if (!is_homogeneous(weights)) throw std::invalid_argument("polynomial is not homogeneous");
  return terms_.begin()->first.weighted(weights);
}

int Poly::max_var() const {
  int v = -1;
  for (const auto& [m, c] : terms_)
    for (int i = 0; i < kMaxVars; ++i)
      if (m[i] > 0) v = std::max(v, i);
  return v;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::pow(int k) const {
  Poly r(Rat(1));
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

Poly Poly::mul_mono(const Mono& m, const Rat& c) const {
  Poly r;
  if (c == 0) return r;
  for (const auto& [mm, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, v * c);
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    Poly t(c);
    for (int i = 0; i < kMaxVars; ++i) {
      if (m[i] == 0) continue;
      if (static_cast<std::size_t>(i) >= images.size())
        throw std::out_of_range("substitute: missing image");
      t = t * images[static_cast<std::size_t>(i)].pow(m[i]);
    }
    r += t;
  }
  return r;
}

Poly Poly::remap(const std::vector<int>& map) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    Mono n;
    for (int i = 0; i < kMaxVars; ++i) {
      if (m[i] == 0) continue;
      int j = map.at(static_cast<std::size_t>(i));
      if (j < 0) throw std::invalid_argument("remap: variable dropped while present");
      n.at(j) = static_cast<std::uint8_t>(n[j] + m[i]);
    }
    r.add_term(n, c);
  }
  return r;
}

Poly primitive_part(const Poly& p, const Mono& sign_of) {
  if (p.is_zero()) return p;
  mpz_class l = 1, g = 0;
  for (const auto& [m, c] : p.terms()) l = lcm(l, mpz_class(c.get_den()));
  for (const auto& [m, c] : p.terms()) g = gcd(g, mpz_class(c.get_num() * (l / c.get_den())));
  Rat s(l, g);
  if (p.coeff(sign_of) < 0) s = -s;
  return p * s;
}

bool deglex_greater(const Mono& a, const Mono& b, const std::vector<int>& weights, int nvars) {
  int da = weights.empty() ? a.total() : a.weighted(weights);
  int db = weights.empty() ? b.total() : b.weighted(weights);
  if (da != db) return da > db;
  for (int i = 0; i < nvars; ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

std::vector<Mono> monomials_of_degree(const std::vector<int>& vars, const std::vector<int>& weights,
                                      int d) {
  std::vector<Mono> out;
  Mono cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k == vars.size()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    int v = vars[k];
    int w = weights.at(static_cast<std::size_t>(v));
    for (int p = left / w; p >= 0; --p) {
      cur.at(v) = static_cast<std::uint8_t>(p);
      rec(k + 1, left - p * w);
    }
    cur.at(v) = 0;
  };
  if (d >= 0) rec(0, d);
  // The recursion already yields lex-descending order in the listed variable order;
  // sort anyway so callers with unordered `vars` get deglex order on indices.
  int nv = static_cast<int>(weights.size());
  std::sort(out.begin(), out.end(),
            [&](const Mono& a, const Mono& b) { return deglex_greater(a, b, weights, nv); });
  return out;
}

std::string rat_string(const Rat& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

std::string mono_string(const Mono& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < names.size(); ++i) {
    int e = m[static_cast<int>(i)];
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += names[i];
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

namespace {

std::vector<std::pair<Mono, Rat>> sorted_terms(const Poly& p, const std::vector<int>& weights,
                                               int nvars) {
  std::vector<std::pair<Mono, Rat>> t(p.terms().begin(), p.terms().end());
  std::vector<int> w = weights;
  if (w.empty()) w.assign(static_cast<std::size_t>(nvars), 1);
  std::sort(t.begin(), t.end(),
            [&](const auto& a, const auto& b) { return deglex_greater(a.first, b.first, w, nvars); });
  return t;
}

}  // namespace

std::string to_string(const Poly& p, const std::vector<std::string>& names,
                      const std::vector<int>& weights) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : sorted_terms(p, weights, static_cast<int>(names.size()))) {
    Rat a = abs(c);
    if (first) {
      if (c < 0) s += '-';
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      s += rat_string(a);
    } else {
      if (a != 1) s += rat_string(a) + '*';
      s += mono_string(m, names);
    }
  }
  return s;
}

std::string to_text(const Poly& p, const std::vector<std::string>& names,
                    const std::vector<int>& weights) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : sorted_terms(p, weights, static_cast<int>(names.size()))) {
    if (!s.empty()) s += " + ";
    s += rat_string(c) + '*' + mono_string(m, names);
  }
  return s;
}

Poly parse_poly(const std::string& src, const std::vector<std::string>& names) {
  std::string s;
  for (char ch : src)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  Poly out;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("parse_poly: " + why + " in '" + src + "'");
  };
  while (i < s.size()) {
    Rat sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    Rat coef = 1;
    Mono m;
    bool any = false;
    while (i < s.size() && s[i] != '+' && s[i] != '-') {
      if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        std::size_t j = i;
        while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
        Rat q(s.substr(i, j - i));
        q.canonicalize();
        coef *= q;
        i = j;
      } else {
        std::size_t j = i;
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
        std::string name = s.substr(i, j - i);
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) fail("unknown variable '" + name + "'");
        int v = static_cast<int>(it - names.begin());
        int e = 1;
        i = j;
        if (i < s.size() && s[i] == '^') {
          std::size_t k = ++i;
          while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
          if (k == i) fail("missing exponent");
          e = std::stoi(s.substr(i, k - i));
          i = k;
        }
        m.at(v) = static_cast<std::uint8_t>(m[v] + e);
      }
      any = true;
      if (i < s.size() && s[i] == '*') ++i;
    }
    if (!any) fail("empty term");
    out.add_term(m, sign * coef);
  }
  return out;
}

}  // namespace ptb
