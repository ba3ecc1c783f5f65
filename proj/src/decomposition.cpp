#include <cmath>

#include "ptb/errors.hpp"
#include "ptb/homgeo.hpp"

namespace ptb {

namespace {

// Orthonormal basis of the column span (modified Gram-Schmidt, drops dependent columns).
Mat orthonormalize(const Mat& a) {
  std::vector<Vec> out;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    Vec v = a.col(j);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : out) v -= q.dot(v) * q;
    const double n = v.norm();
    if (n > 1e-12 * std::max(1.0, a.col(j).norm())) out.push_back(v / n);
  }
  Mat m(a.rows(), static_cast<Eigen::Index>(out.size()));
  for (std::size_t j = 0; j < out.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = out[j];
  return m;
}

double inclusion(const LieAlgebra& g, const Mat& a, const Mat& b, const Mat& complement_proj) {
  double r = 0;
  for (Eigen::Index i = 0; i < a.cols(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      r = std::max(r, (complement_proj * g.bracket(a.col(i), b.col(j))).norm());
  return r;
}

}  // namespace

double InclusionResiduals::max() const {
  return std::max({m1_m2_in_m1, k_k_in_k, m2_m2_zero, m1_m1_in_k});
}

Decomposition build_decomposition(const GeometrySpec& spec) {
  const LieAlgebra& g = spec.g;
  const int n = g.dim();
  const int nf = static_cast<int>(spec.fiber.size());
  if (static_cast<int>(spec.rho.weights.size()) != nf)
    throw std::invalid_argument("one weight row per fiber coordinate expected");
  for (const auto& row : spec.rho.weights) {
    if (row.size() != spec.rho.characters.size()) throw std::invalid_argument("weight row length mismatch");
    for (double w : row)
      if (w != std::round(w)) throw WeightNotIntegral("ρ weight " + std::to_string(w) + " is not an integer");
  }

  Decomposition D;
  D.name = spec.name;
  D.g = g;
  Mat H0(n, static_cast<Eigen::Index>(spec.h_basis.size()));
  for (std::size_t j = 0; j < spec.h_basis.size(); ++j) H0.col(static_cast<Eigen::Index>(j)) = spec.h_basis[j];
  H0 = orthonormalize(H0);
  Mat Fib = Mat::Zero(n, nf);
  for (int f = 0; f < nf; ++f) Fib(spec.fiber[static_cast<std::size_t>(f)], f) = 1;
  if ((Fib.transpose() * H0).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("isotropy algebra must lie in the semisimple part");

  // ρ_*: g -> fiber coordinates, restricted to h.
  D.rho = Mat::Zero(nf, n);
  for (int f = 0; f < nf; ++f)
    for (std::size_t k = 0; k < spec.rho.characters.size(); ++k)
      D.rho.row(f) += spec.rho.weights[static_cast<std::size_t>(f)][k] * spec.rho.characters[k].transpose();
  D.rho = D.rho * (H0 * H0.transpose());

  // h_ρ = {(X, ρ_* X)}, m_2 = {(-ρ_*^* v, v)}.
  D.h = orthonormalize(H0 + Fib * D.rho * H0);
  D.m2 = orthonormalize(Fib - D.rho.transpose());
  D.P_k = H0 * H0.transpose() + Fib * Fib.transpose();
  Eigen::SelfAdjointEigenSolver<Mat> es(D.P_k);
  std::vector<Eigen::Index> free;
  for (Eigen::Index i = 0; i < n; ++i)
    if (es.eigenvalues()(i) < 0.5) free.push_back(i);
  D.m1 = Mat(n, static_cast<Eigen::Index>(free.size()));
  for (std::size_t j = 0; j < free.size(); ++j) D.m1.col(static_cast<Eigen::Index>(j)) = es.eigenvectors().col(free[j]);
  // Sign-normalize each m1 vector (largest-magnitude entry positive) for reproducible bases.
  for (Eigen::Index j = 0; j < D.m1.cols(); ++j) {
    Eigen::Index arg;
    D.m1.col(j).cwiseAbs().maxCoeff(&arg);
    if (D.m1(arg, j) < 0) D.m1.col(j) *= -1;
  }
  if (D.h.cols() + D.m2.cols() + D.m1.cols() != n) throw std::logic_error("decomposition dimensions do not add up");

  D.P_m1 = D.m1 * D.m1.transpose();
  D.P_m2 = D.m2 * D.m2.transpose();
  D.P_h = D.h * D.h.transpose();
  D.P_m = D.P_m1 + D.P_m2;

  const Mat I = Mat::Identity(n, n);
  Mat K(n, H0.cols() + nf);
  K << H0, Fib;
  D.residuals.m1_m2_in_m1 = inclusion(g, D.m1, D.m2, I - D.P_m1);
  D.residuals.k_k_in_k = inclusion(g, K, K, I - D.P_k);
  D.residuals.m2_m2_zero = inclusion(g, D.m2, D.m2, I);
  D.residuals.m1_m1_in_k = inclusion(g, D.m1, D.m1, I - D.P_k);
  return D;
}

Vec f_r(const Decomposition& D, double r, const Vec& x) { return x + (r - 1) * (D.P_k * x); }

Mat metric_t(const Decomposition& D, double t) {
  if (!(t > 0)) throw NonpositiveT("t must be positive");
  return D.P_m1 + t * t * D.P_k;
}

double inner_t(const Decomposition& D, double t, const Vec& x, const Vec& y) {
  return x.dot(y) + (t * t - 1) * x.dot(D.P_k * y);
}

Mat ad_star_t(const Decomposition& D, double t, const Vec& x) {
  if (!(t > 0)) throw NonpositiveT("t must be positive");
  const double r = t * t;
  const Mat F = D.P_m1 + r * D.P_k;
  const Mat Finv = D.P_m1 + (1 / r) * D.P_k;
  return -Finv * D.g.ad(x) * F;
}

Vec ad_star_apply(const Decomposition& D, double t, const Vec& x, const Vec& y) {
  const double r = t * t;
  return -f_r(D, 1 / r, D.g.bracket(x, f_r(D, r, y)));
}

}  // namespace ptb
