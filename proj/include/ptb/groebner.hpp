#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptb/poly.hpp"
#include "ptb/univariate.hpp"

namespace ptb {

enum class MonoOrder { grevlex, lex };

// Returns >0 if a > b in the order, <0 if a < b, 0 if equal.
int compare(const Mono& a, const Mono& b, MonoOrder order, int nvars);
Mono leading_monomial(const Poly& p, MonoOrder order, int nvars);

struct GroebnerBasis {
  MonoOrder order = MonoOrder::grevlex;
  int nvars = 0;
  std::vector<Poly> g;  // reduced, monic; {1} for the unit ideal
  bool unit = false;
  // When requested and the ideal is the unit ideal: sum_i certificate[i] * input[i] == 1.
  std::vector<Poly> certificate;
};

struct GroebnerOptions {
  MonoOrder order = MonoOrder::grevlex;
  bool track_cofactors = false;
  std::size_t max_basis = 4000;  // guards runaway inputs
};

GroebnerBasis groebner(const std::vector<Poly>& input, int nvars, const GroebnerOptions& opt = {});

Poly reduce(const Poly& f, const GroebnerBasis& G);
bool in_ideal(const Poly& f, const GroebnerBasis& G);

bool is_zero_dimensional(const GroebnerBasis& G);
// Standard monomials (basis of Q[x]/I), ascending in the basis order. Zero-dimensional only.
std::vector<Mono> standard_monomials(const GroebnerBasis& G);
// Greedy maximal independent variable set modulo the leading ideal, trying `prefer` first.
std::vector<int> independent_variables(const GroebnerBasis& G, const std::vector<int>& prefer);

// Minimal polynomial of f acting on Q[x]/I (zero-dimensional I).
UPoly minimal_polynomial(const Poly& f, const GroebnerBasis& G);
// Radical of a zero-dimensional ideal (Seidenberg: adjoin squarefree parts of the
// variables' minimal polynomials).
GroebnerBasis zero_dim_radical(const GroebnerBasis& G);
// Rational points of a zero-dimensional ideal, lexicographically sorted.
std::vector<std::vector<Rat>> rational_points(const GroebnerBasis& G);

std::string poly_list_string(const std::vector<Poly>& ps, const std::vector<std::string>& names);

}  // namespace ptb
