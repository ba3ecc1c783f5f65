#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptb/gysin.hpp"
#include "ptb/homgeo.hpp"

namespace ptb {

enum class Family { E, M };

// Euler-class vectors; the geometry constructors reuse them as ρ weights.
std::vector<std::vector<long>> E_euler(long alpha);  // over z1..z5
std::vector<std::vector<long>> M_euler(long a);      // over x1, y1, x2, y2

RingPtr cp2_power(int k, int truncation);
// H*(SU(3)/T² × SU(3)/T²) in Borel's presentation.
RingPtr flag_pair(int truncation);

BundleSpec build_E_topology(long alpha);
BundleSpec build_M_topology(long a);
GeometrySpec build_E_geometry(long alpha);
GeometrySpec build_M_geometry(long a);

struct FamilySpec {
  Family family = Family::E;
  long param = 1;
  BundleSpec bundle;
  GeometrySpec geometry;     // of the homogeneous factor only
  std::optional<int> sphere;

  std::string name() const;  // "E_2", "M_3 x S^2"
  // Lattice relations on H² of each stage's base, paired with that stage's Euler class.
  std::vector<std::pair<std::vector<std::vector<long>>, std::vector<long>>> primitivity_inputs() const;
};

FamilySpec make_family(Family f, long param);
FamilySpec with_sphere(const FamilySpec& spec, int n);

// Cohomology ring of the family (with the sphere factor, if any).
RingPtr family_ring(const FamilySpec& spec);
TorusQuotient family_quotient(const FamilySpec& spec);

}  // namespace ptb
