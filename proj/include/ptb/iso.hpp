#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptb/exec.hpp"
#include "ptb/graded_ring.hpp"
#include "ptb/groebner.hpp"
#include "ptb/univariate.hpp"

namespace ptb {

// A polynomial in ring generators whose coefficients are polynomials in unknowns.
using CoeffPoly = std::map<Mono, Poly>;

// Conjugate algebraic points of one chart: coords[i](θ) for each root θ of minpoly.
struct LocusFamily {
  int chart = 0;
  UPoly minpoly;               // squarefree, no rational roots in the chart's count
  std::vector<UPoly> coords;   // one per generator, reduced modulo minpoly
  int count = 0;               // number of points = deg minpoly
  std::string describe(const std::vector<std::string>& names) const;
};

struct CubeZeroLocus {
  int ngens = 0;
  std::vector<std::string> names;
  std::vector<Poly> equations;   // coefficients of ω³ in the degree-6 basis, in c_0..c_{g-1}
  std::vector<int> linear;       // dimensions of coordinate components span(x_0..x_{d-1})
  std::vector<RatVec> points;    // rational points, primitive integral, first nonzero > 0
  std::vector<LocusFamily> families;
  bool decomposed = true;        // false if some chart is positive-dimensional but not a linear component

  bool finite() const { return decomposed && linear.empty(); }
  int point_count() const;       // rational points plus conjugate family points
  std::vector<std::string> describe() const;
};

CubeZeroLocus cube_zero_locus(const RingPtr& ring);
// ω³ as a class; true iff ω lies on the locus.
bool cube_vanishes(const RingPtr& ring, const RatVec& omega);
// Whether ω is proportional to some listed point or lies in a listed component.
bool on_locus(const CubeZeroLocus& locus, const RatVec& omega);

struct RelationCheck {
  std::string relation;
  std::string image;
  bool vanishes = false;
};

struct WellformedReport {
  bool ok = false;
  Rat det;
  std::vector<RelationCheck> checks;
  std::string failure;  // first failing relation, or "singular"
};

// Column i of `matrix` is the image of source generator i in target degree-2 coordinates.
WellformedReport induced_map_wellformed(const RingPtr& source, const RingPtr& target,
                                        const RatMat& matrix);

struct SystemResult {
  bool consistent = false;
  int nvars = 0;                        // including the saturation variable, if any
  std::vector<Poly> system;             // input polynomials plus h*s - 1
  std::vector<Poly> certificate;        // inconsistent: sum certificate[i]*system[i] == 1
  std::optional<std::vector<Rat>> witness;  // consistent: a rational point (original unknowns)
  std::vector<Poly> description;        // consistent: Groebner basis of the saturated system
};

struct SolveBudget {
  int max_unknowns = 12;
  int max_degree = 16;
};

SystemResult solve_small_system(const std::vector<Poly>& polys, const std::vector<Poly>& nonvanishing,
                                int nunknowns, const SolveBudget& budget = {});
bool verify_inconsistency(const SystemResult& r);

struct ShapeRecord {
  std::vector<int> components;  // target locus component per source generator
  std::string description;
  int unknowns = 0;
  bool consistent = false;
  bool verified = false;        // inconsistency certificate re-checked
  std::size_t certificate_terms = 0;
};

struct IsoCertificate {
  std::vector<int> components;
  bool rational = false;
  RatMat matrix;                          // when rational
  std::vector<std::string> unknown_names;
  std::vector<std::string> description;   // algebraic solution data otherwise
  WellformedReport verification;
};

enum class IsoResult { iso, not_iso, unknown };
std::string to_string(IsoResult r);

struct IsoDecision {
  IsoResult result = IsoResult::unknown;
  std::string reason;
  CubeZeroLocus source_locus, target_locus;
  std::vector<ShapeRecord> shapes;  // every shape evaluated (refutation) or up to the winner
  std::optional<IsoCertificate> certificate;
};


IsoDecision iso_decide(const RingPtr& source, const RingPtr& target,
                       Exec mode = Exec::openmp);

// Expand p(images) with images[i] a CoeffPoly, then reduce in `ring`:
// one polynomial in the unknowns per coordinate of the degree piece.
std::vector<Poly> pushforward_equations(const RingPtr& ring, const Poly& p,
                                        const std::vector<CoeffPoly>& images);

}  // namespace ptb
