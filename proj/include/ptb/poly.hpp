#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptb {

using Rat = mpq_class;

inline constexpr int kMaxVars = 16;

struct Mono {
  std::array<std::uint8_t, kMaxVars> e{};

  int operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
  std::uint8_t& at(int i) { return e[static_cast<std::size_t>(i)]; }
  int total() const;
  int weighted(const std::vector<int>& weights) const;
  bool divides(const Mono& o) const;
  bool is_one() const { return total() == 0; }
  static Mono var(int i, int power = 1);

  friend Mono operator*(const Mono& a, const Mono& b);
  friend Mono operator/(const Mono& a, const Mono& b);  // requires b | a
  friend auto operator<=>(const Mono&, const Mono&) = default;
  friend bool operator==(const Mono&, const Mono&) = default;
};

Mono lcm(const Mono& a, const Mono& b);

struct MonoHash {
  std::size_t operator()(const Mono& m) const noexcept;
};

// Sparse polynomial over Q. The map order is plain lexicographic on exponent
// arrays; callers that need a monomial order sort explicitly.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rat& c);
  static Poly monomial(const Mono& m, const Rat& c = 1);
  static Poly var(int i) { return monomial(Mono::var(i)); }

  const std::map<Mono, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rat coeff(const Mono& m) const;
  void add_term(const Mono& m, const Rat& c);

  int total_degree() const;
  // Weighted degree of a homogeneous polynomial; -1 for zero, throws if not homogeneous.
  int weighted_degree(const std::vector<int>& weights) const;
  bool is_homogeneous(const std::vector<int>& weights) const;
  int max_var() const;  // highest variable index present, -1 if constant

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rat& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rat(-1); }
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly pow(int k) const;
  Poly mul_mono(const Mono& m, const Rat& c) const;

  // Replace variable i by images[i] (images.size() must cover all variables present).
  Poly substitute(const std::vector<Poly>& images) const;
  // Rename variables: variable i becomes variable map[i].
  Poly remap(const std::vector<int>& map) const;

 private:
  std::map<Mono, Rat> terms_;
};

// Rational coefficients -> primitive integer polynomial, sign chosen by `sign_of`.
Poly primitive_part(const Poly& p, const Mono& sign_of);

// Human readable: "x1^2*x3 + 2*x1*x3^2". Terms sorted by weighted degree then lex, descending.
std::string to_string(const Poly& p, const std::vector<std::string>& names,
                      const std::vector<int>& weights = {});
// Interchange form with explicit coefficients: "1*x1^3 + -2/3*x2".
std::string to_text(const Poly& p, const std::vector<std::string>& names,
                    const std::vector<int>& weights = {});
std::string mono_string(const Mono& m, const std::vector<std::string>& names);
Poly parse_poly(const std::string& s, const std::vector<std::string>& names);

// Descending weighted-degree-then-lex comparison used for printing and bases.
bool deglex_greater(const Mono& a, const Mono& b, const std::vector<int>& weights, int nvars);

// All monomials in `vars` (subset of indices) of weighted degree d, deglex descending.
std::vector<Mono> monomials_of_degree(const std::vector<int>& vars, const std::vector<int>& weights,
                                      int d);

std::string rat_string(const Rat& q);

}  // namespace ptb
