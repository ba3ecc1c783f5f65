#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ptb/exec.hpp"
#include "ptb/lie.hpp"

namespace ptb {

// ρ_* on the isotropy algebra: fiber coordinate f receives Σ_k weights[f][k] χ_k,
// where χ_k are linear functionals on g supported on h.
struct RhoSpec {
  std::vector<Vec> characters;
  std::vector<std::vector<double>> weights;  // must be integers
};

struct GeometrySpec {
  std::string name;
  LieAlgebra g;
  std::vector<Vec> h_basis;  // isotropy algebra h inside the semisimple part
  std::vector<int> fiber;    // basis indices of the fiber torus
  RhoSpec rho;
};

struct InclusionResiduals {
  double m1_m2_in_m1 = 0;  // [m1, m2] ⊆ m1
  double k_k_in_k = 0;     // [k, k] ⊆ k
  double m2_m2_zero = 0;   // [m2, m2] = 0
  double m1_m1_in_k = 0;   // [m1, m1] ⊆ k
  double max() const;
};

struct Decomposition {
  std::string name;
  LieAlgebra g;
  Mat m1, m2, h;          // orthonormal columns for <,>
  Mat P_m1, P_m2, P_h, P_k, P_m;  // orthogonal projections; m = m1 ⊕ m2, k = m2 ⊕ h
  Mat rho;                // ρ_* as fiber-dim x dim g (zero off h)
  InclusionResiduals residuals;

  int n1() const { return static_cast<int>(m1.cols()); }
  int n2() const { return static_cast<int>(m2.cols()); }
  int tangent_dim() const { return n1() + n2(); }
};

Decomposition build_decomposition(const GeometrySpec& spec);

// ---- metric family <X,Y>_t -------------------------------------------------

// f_r: identity on m1, multiplication by r on m2 ⊕ h.
Vec f_r(const Decomposition& D, double r, const Vec& x);
Mat metric_t(const Decomposition& D, double t);
double inner_t(const Decomposition& D, double t, const Vec& x, const Vec& y);
// Matrix of the <,>_t-adjoint of ad_X.
Mat ad_star_t(const Decomposition& D, double t, const Vec& x);
Vec ad_star_apply(const Decomposition& D, double t, const Vec& x, const Vec& y);

// Weight on ‖ad*_X Y + ad*_Y X‖²_t. `koszul` (1/4) is the curvature of the quotient
// metric; `unit` (1) is the displayed combination the closed forms expand.
enum class SymmetricWeight { koszul, unit };
double weight_value(SymmetricWeight w);

struct SecTerms {
  double a = 0, b = 0, c = 0, d = 0;
  double value = 0;  // w·a − b − ¾c + d
};

SecTerms sec_terms(const Decomposition& D, double t, const Vec& x, const Vec& y,
                   SymmetricWeight w = SymmetricWeight::koszul);
// Unnormalized <R(X,Y)Y,X>_t for X, Y in m1 ⊕ m2.
double sec_quadrilinear(const Decomposition& D, double t, const Vec& x, const Vec& y,
                        SymmetricWeight w = SymmetricWeight::koszul);

struct AdmissiblePair {
  Vec x1, x2, y1, y2;  // x1, y1 ∈ m1; x2, y2 ∈ m2
  Vec xt(double t) const { return x1 + x2 / t; }
  Vec yt(double t) const { return y1 + y2 / t; }
};

// Closed forms of the four terms for X^t = X1 + X2/t, Y^t = Y1 + Y2/t.
SecTerms lemma41_terms(const Decomposition& D, double t, const AdmissiblePair& p);

struct ClosedForm {
  double displayed = 0;              // expands the unit-weight combination
  double displayed_lower_bound = 0;
  double corrected = 0;              // expands the koszul-weight combination
  double corrected_lower_bound = 0;  // (1 − t²)‖[X1,Y1]‖²
};
ClosedForm sec_closed_form(const Decomposition& D, double t, const AdmissiblePair& p);

// ---- curvature tensor and operator ----------------------------------------

// R(X,Y,Z,W) by polarization of sec_quadrilinear, with R(X,Y,Y,X) = sec.
double curvature_tensor(const Decomposition& D, double t, const Vec& x, const Vec& y, const Vec& z,
                        const Vec& w, SymmetricWeight wt = SymmetricWeight::koszul);
// Independent oracle: Levi-Civita connection of (G, <,>_t) plus O'Neill's A-tensor terms.
double koszul_oneill_tensor(const Decomposition& D, double t, const Vec& x, const Vec& y, const Vec& z,
                            const Vec& w);

// <,>_t-orthonormal basis of m1 ⊕ m2 (columns in g coordinates).
Mat tangent_basis(const Decomposition& D, double t);

struct CurvatureOperator {
  double t = 1;
  Mat basis;                 // tangent basis used
  std::vector<double> R;     // full tensor R[((i*n + j)*n + k)*n + l]
  Mat M;                     // Λ² matrix: M[(ij),(kl)] = R(e_i,e_j,e_l,e_k), i<j, k<l
  int n = 0;
  double r(int i, int j, int k, int l) const {
    return R[static_cast<std::size_t>(((i * n + j) * n + k) * n + l)];
  }
  // Λ² vector of u ∧ v.
  Vec wedge(const Vec& u, const Vec& v) const;
};

CurvatureOperator assemble_curvature_operator(const Decomposition& D, double t, Exec mode = Exec::openmp);

struct EigenResult {
  double value = 0;
  Vec vector;
  double residual = 0;
};
EigenResult curvature_operator_min_eig(const CurvatureOperator& op);

struct RicciResult {
  double min = 0;
  Vec direction;   // g coordinates
  Mat matrix;      // in the tangent basis
  double trace = 0;
};
RicciResult ricci_min(const Decomposition& D, double t);

// ---- extremization --------------------------------------------------------

struct PlaneWitness {
  Vec x, y;  // <,>_t-orthonormal, g coordinates
  double value = 0;
};

struct SecBounds {
  double min = 0, max = 0;
  PlaneWitness argmin, argmax;
  std::vector<double> sampled;  // every starting-plane value
};

// Haar-random orthonormal frames, refined by alternating eigen-ascent/descent on
// the Grassmannian (each step solves the optimal u for fixed v exactly).
SecBounds sec_bounds(const Decomposition& D, double t, int samples, int refine_steps, std::uint64_t seed,
                     Exec mode = Exec::openmp);
SecBounds sec_bounds(const CurvatureOperator& op, const Decomposition& D, int samples, int refine_steps,
                     std::uint64_t seed, Exec mode = Exec::openmp);

// max ‖[X,Y]‖² over <,>-orthonormal X, Y in g.
PlaneWitness bracket_norm_max(const LieAlgebra& g, int samples, int refine_steps, std::uint64_t seed);

// Random admissible (X1, X2, Y1, Y2) for lemma41 / closed forms.
AdmissiblePair random_admissible(const Decomposition& D, std::uint64_t seed, std::uint64_t index);

// ---- diameter ------------------------------------------------------------

struct DiameterFactor {
  std::string name;
  double covering_radius = 0;
};

struct DiameterBound {
  std::vector<DiameterFactor> factors;
  double D = 0;
};

DiameterBound diameter_upper_bound(const LieAlgebra& g);
// Covering radius of the lattice with the given Gram matrix (rank 1 or 2).
double covering_radius_exact(const Mat& gram);
// Grid search over the fundamental parallelogram: max distance to the nearest lattice point.
double covering_radius_brute(const Mat& gram, int grid);
// Gram matrix of the integer lattice of the maximal torus of su(n).
Mat su_torus_gram(int n);

}  // namespace ptb
