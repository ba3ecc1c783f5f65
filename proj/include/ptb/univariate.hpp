#pragma once

#include <string>
#include <vector>

#include "ptb/poly.hpp"

namespace ptb {

// Dense univariate polynomial over Q, coefficient i multiplies x^i.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> c);
  static UPoly x() { return UPoly({Rat(0), Rat(1)}); }

  const std::vector<Rat>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Rat& lead() const { return c_.back(); }
  Rat eval(const Rat& v) const;
  UPoly derivative() const;
  UPoly monic() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  // Embed as a multivariate polynomial in variable `var`.
  Poly to_poly(int var) const;
  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly gcd(UPoly a, UPoly b);  // monic
UPoly squarefree_part(const UPoly& p);  // monic
// Distinct rational roots in increasing order.
std::vector<Rat> rational_roots(const UPoly& p);

}  // namespace ptb
