#pragma once

#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ptb/errors.hpp"
#include "ptb/linalg.hpp"
#include "ptb/poly.hpp"

namespace ptb {

struct Generator {
  std::string name;
  int degree = 2;
};

inline constexpr int kUnbounded = std::numeric_limits<int>::max();

// Where the odd cohomology of the space behind a presentation first fails to vanish.
struct OddObstruction {
  int stage = 0;
  int degree = 0;       // source degree of the non-injective Euler multiplication
  RatVec kernel;        // kernel vector in the base's degree basis
};

class GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

struct RingClass {
  RingPtr ring;
  int degree = 0;
  RatVec coords;

  bool is_zero() const;
};

class NotInjective : public Error {
 public:
  NotInjective(int stage, int degree, RatVec kernel, const std::string& what)
      : Error("NotInjective", what), stage(stage), degree(degree), kernel(std::move(kernel)) {}
  int stage;
  int degree;
  RatVec kernel;
};

// Quotient of a free graded-commutative algebra on the generators by homogeneous
// relations, computed degree by degree up to the truncation. Immutable once built.
class GradedRing : public std::enable_shared_from_this<GradedRing> {
 public:
  // `odd_zero_through`: odd cohomology of the modelled space is known to vanish in
  // all odd degrees <= this value.
  static RingPtr create(std::vector<Generator> gens, std::vector<Poly> relations, int truncation,
                        int odd_zero_through = kUnbounded,
                        std::optional<OddObstruction> obstruction = std::nullopt);

  const std::vector<Generator>& generators() const { return gens_; }
  int ngens() const { return static_cast<int>(gens_.size()); }
  std::vector<std::string> names() const;
  const std::vector<int>& weights() const { return weights_; }
  int generator_index(const std::string& name) const;
  const std::vector<Poly>& relations() const { return relations_; }
  int truncation() const { return truncation_; }
  int odd_zero_through() const { return odd_zero_through_; }
  const std::optional<OddObstruction>& obstruction() const { return obstruction_; }

  const std::vector<Mono>& degree_basis(int d) const;
  int betti(int d) const { return static_cast<int>(degree_basis(d).size()); }
  std::vector<int> betti_table() const;  // degrees 0..truncation
  // All free monomials of degree d, deglex descending (columns of the slice).
  const std::vector<Mono>& monomials(int d) const;
  // Coordinates of a free monomial in degree_basis.
  const RatVec& monomial_coords(const Mono& m) const;

  RingClass normal_form(const Poly& p) const;
  RingClass zero(int d) const;
  RingClass unit() const;
  RingClass generator(int i) const;
  Poly lift(const RingClass& c) const;  // sum of coords times basis monomials
  bool is_zero(const Poly& p) const { return normal_form(p).is_zero(); }

  // Basis of degree-d polynomials in the given generator subset vanishing in the ring.
  // Echelonized with leading coefficient 1 on the deglex-first monomial.
  std::vector<Poly> find_relations(const std::vector<int>& gens, int d) const;
  // RREF (trailing pivots) rows of the ideal slice in degree d, as polynomials.
  std::vector<Poly> ideal_slice(int d) const;

  std::string serialize() const;

 private:
  GradedRing() = default;
  void build();

  struct Piece {
    std::vector<Mono> monomials;
    std::unordered_map<Mono, int, MonoHash> column;
    std::vector<Mono> basis;
    std::vector<RatVec> nf;  // per monomial column
    RatMat slice;            // trailing-pivot RREF rows
  };
  const Piece& piece(int d) const;

  std::vector<Generator> gens_;
  std::vector<int> weights_;
  std::vector<Poly> relations_;
  int truncation_ = 0;
  int odd_zero_through_ = kUnbounded;
  std::optional<OddObstruction> obstruction_;
  std::vector<Piece> pieces_;
};

RingClass multiply(const RingClass& a, const RingClass& b);
RingClass add(const RingClass& a, const RingClass& b);
RingClass scale(const RingClass& a, const Rat& c);

RingPtr parse_ring(const std::string& text);

// Adjoin a sphere class z of degree n with z^2 = 0 (Kuenneth product with S^n).
// The z^2 relation is kept only when its degree fits the truncation.
RingPtr tensor_with_sphere(const RingPtr& ring, int n, const std::string& name = "z");

}  // namespace ptb
