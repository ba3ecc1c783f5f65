#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace ptb {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// [e_i, e_j] = c e_k for i < j. The basis is orthonormal for the bi-invariant
// inner product, so c is totally antisymmetric.
struct StructureConstant {
  int i, j, k;
  double c;
};

struct LieBlock {
  enum Kind { su, torus } kind;
  int n = 0;       // su(n), or torus rank
  int offset = 0;  // first basis index
  int dim = 0;
};

class LieAlgebra {
 public:
  int dim() const { return dim_; }
  const std::vector<LieBlock>& blocks() const { return blocks_; }
  const std::vector<StructureConstant>& constants() const { return sc_; }

  Vec bracket(const Vec& x, const Vec& y) const;
  Mat ad(const Vec& x) const;  // matrix of y -> [x, y]
  // Bi-invariant inner product; the identity in the chosen basis.
  double inner(const Vec& x, const Vec& y) const { return x.dot(y); }

  double jacobi_residual() const;
  double ad_invariance_residual() const;
  double antisymmetry_residual() const;

  static LieAlgebra su(int n);
  static LieAlgebra torus(int rank);
  static LieAlgebra direct_sum(const std::vector<LieAlgebra>& parts);

 private:
  int dim_ = 0;
  std::vector<StructureConstant> sc_;
  std::vector<LieBlock> blocks_;
};

// Orthonormal basis of su(n) for <X,Y> = -Re tr(XY): for each p < q the pair
// i(E_pq + E_qp)/√2, (E_pq - E_qp)/√2, then the diagonal elements
// i·diag(1,..,1,-k,0,..)/√(k(k+1)).
std::vector<Eigen::MatrixXcd> su_matrices(int n);
// Coordinates of a trace-free anti-hermitian matrix in that basis.
Vec su_coords(int n, const Eigen::MatrixXcd& m);

// Alias matching the operation name: the su(n) algebra with its orthonormal basis.
inline LieAlgebra su_basis(int n) { return LieAlgebra::su(n); }

}  // namespace ptb
