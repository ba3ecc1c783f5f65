#include "ptb/univariate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ptb {

UPoly::UPoly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat UPoly::eval(const Rat& v) const {
  Rat r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * v + *it;
  return r;
}

UPoly UPoly::derivative() const {
  std::vector<Rat> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rat(static_cast<long>(i)));
  return UPoly(d);
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  UPoly r = *this;
  Rat l = lead();
  for (auto& x : r.c_) x /= l;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UPoly(c);
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return UPoly(c);
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(c);
}

Poly UPoly::to_poly(int var) const {
  Poly p;
  for (std::size_t i = 0; i < c_.size(); ++i) p.add_term(Mono::var(var, static_cast<int>(i)), c_[i]);
  return p;
}

std::string UPoly::str(const std::string& var) const {
  return to_string(to_poly(0), {var});
}

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw std::domain_error("UPoly division by zero");
  std::vector<Rat> rem = a.coeffs();
  const int db = b.degree();
  std::vector<Rat> quo(static_cast<std::size_t>(std::max(0, a.degree() - db + 1)), Rat(0));
  for (int k = a.degree(); k >= db; --k) {
    Rat f = rem[static_cast<std::size_t>(k)] / b.lead();
    if (f == 0) continue;
    quo[static_cast<std::size_t>(k - db)] = f;
    for (int i = 0; i <= db; ++i)
      rem[static_cast<std::size_t>(k - db + i)] -= f * b.coeffs()[static_cast<std::size_t>(i)];
  }
  q = UPoly(quo);
  r = UPoly(rem);
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = b;
    b = r;
  }
  return a.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.monic();
  UPoly g = gcd(p, p.derivative());
  UPoly q, r;
  divmod(p, g, q, r);
  return q.monic();
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rat> rational_roots(const UPoly& p) {
  std::set<Rat> roots;
  if (p.degree() <= 0) return {};
  // Strip the factor x^k, then clear denominators.
  std::size_t low = 0;
  while (p.coeffs()[low] == 0) ++low;
  if (low > 0) roots.insert(Rat(0));
  std::vector<Rat> c(p.coeffs().begin() + static_cast<long>(low), p.coeffs().end());
  if (c.size() > 1) {
    mpz_class l = 1;
    for (const auto& x : c) l = lcm(l, mpz_class(x.get_den()));
    std::vector<mpz_class> z;
    for (const auto& x : c) z.push_back(mpz_class(x.get_num() * (l / x.get_den())));
    UPoly q(c);
    for (const auto& a : divisors(z.front()))
      for (const auto& b : divisors(z.back())) {
        for (int s : {1, -1}) {
          Rat r(a * s, b);
          r.canonicalize();
          if (q.eval(r) == 0) roots.insert(r);
        }
      }
  }
  return {roots.begin(), roots.end()};
}

}  // namespace ptb
