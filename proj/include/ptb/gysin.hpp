#pragma once

#include <string>
#include <vector>

#include "ptb/graded_ring.hpp"

namespace ptb {

struct MultMap {
  int degree = 0;  // source degree d; target d + 2
  RatMat matrix;   // betti(d+2) x betti(d)
  int rank = 0;
  bool injective = false;
  std::vector<RatVec> kernel;
};

MultMap mult_map(const RingPtr& ring, const RingClass& e, int d);

struct QuotientOptions {
  int truncation = -1;                     // output truncation; -1 keeps the base's
  std::vector<std::string> rename;         // names of surviving generators, in order
  int stage = 1;
};

struct QuotientReport {
  RingPtr ring;
  std::string eliminated;
  std::vector<Poly> substitution;  // image of each input generator in the output ring
  std::vector<MultMap> maps;       // every computable even-degree multiplication map
};

// Even cohomology of the circle bundle with Euler class e, as B/(e) with one
// generator eliminated by substitution.
QuotientReport circle_quotient_report(const RingPtr& ring, const RingClass& e,
                                      const QuotientOptions& opt = {});
RingPtr circle_quotient(const RingPtr& ring, const RingClass& e, const QuotientOptions& opt = {});

struct BundleSpec {
  RingPtr base;
  // Euler classes as integer vectors over the base's degree-2 generators; later
  // classes are read through the substitutions of earlier stages.
  std::vector<std::vector<long>> euler;
  std::vector<std::vector<std::string>> stage_names;  // optional renames per stage
  std::vector<int> stage_truncation;                  // optional per stage
};

struct TorusQuotient {
  RingPtr ring;
  std::vector<QuotientReport> stages;
};

TorusQuotient torus_quotient(const BundleSpec& spec);

// Canonical minimal relations of an ideal given by its generators: per degree,
// the RREF rows (trailing pivots) not already produced by lower-degree relations,
// scaled to primitive integer polynomials with positive pivot coefficient.
std::vector<Poly> minimal_relations(const std::vector<Generator>& gens, const std::vector<Poly>& ideal,
                                    int truncation);

// Primitivity of e in Z^n modulo the row lattice of `lattice_relations`.
bool check_primitive(const std::vector<std::vector<long>>& lattice_relations,
                     const std::vector<long>& e);

}  // namespace ptb
