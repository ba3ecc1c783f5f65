#include "ptb/lie.hpp"

#include <cmath>
#include <stdexcept>

namespace ptb {

std::vector<Eigen::MatrixXcd> su_matrices(int n) {
  using C = std::complex<double>;
  const C I(0, 1);
  const double s = 1 / std::sqrt(2.0);
  std::vector<Eigen::MatrixXcd> out;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n), b = a;
      a(p, q) = a(q, p) = I * s;
      b(p, q) = s;
      b(q, p) = -s;
      out.push_back(a);
      out.push_back(b);
    }
  for (int k = 1; k < n; ++k) {
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(n, n);
    const double norm = 1 / std::sqrt(static_cast<double>(k * (k + 1)));
    for (int i = 0; i < k; ++i) d(i, i) = I * norm;
    d(k, k) = -I * (k * norm);
    out.push_back(d);
  }
  return out;
}

Vec su_coords(int n, const Eigen::MatrixXcd& m) {
  auto basis = su_matrices(n);
  Vec v(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t a = 0; a < basis.size(); ++a) v(static_cast<Eigen::Index>(a)) = -(m * basis[a]).trace().real();
  return v;
}

LieAlgebra LieAlgebra::su(int n) {
  if (n < 2) throw std::invalid_argument("su(n) needs n >= 2");
  auto B = su_matrices(n);
  LieAlgebra g;
  g.dim_ = static_cast<int>(B.size());
  g.blocks_.push_back({LieBlock::su, n, 0, g.dim_});
  for (int i = 0; i < g.dim_; ++i)
    for (int j = i + 1; j < g.dim_; ++j) {
      Eigen::MatrixXcd c = B[static_cast<std::size_t>(i)] * B[static_cast<std::size_t>(j)] -
                           B[static_cast<std::size_t>(j)] * B[static_cast<std::size_t>(i)];
      for (int k = 0; k < g.dim_; ++k) {
        double v = -(c * B[static_cast<std::size_t>(k)]).trace().real();
        if (std::abs(v) > 1e-14) g.sc_.push_back({i, j, k, v});
      }
    }
  return g;
}

LieAlgebra LieAlgebra::torus(int rank) {
  LieAlgebra g;
  g.dim_ = rank;
  g.blocks_.push_back({LieBlock::torus, rank, 0, rank});
  return g;
}

LieAlgebra LieAlgebra::direct_sum(const std::vector<LieAlgebra>& parts) {
  LieAlgebra g;
  for (const auto& p : parts) {
    for (auto b : p.blocks_) {
      b.offset += g.dim_;
      g.blocks_.push_back(b);
    }
    for (auto s : p.sc_) g.sc_.push_back({s.i + g.dim_, s.j + g.dim_, s.k + g.dim_, s.c});
    g.dim_ += p.dim_;
  }
  return g;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  Vec r = Vec::Zero(dim_);
  for (const auto& s : sc_) r(s.k) += s.c * (x(s.i) * y(s.j) - x(s.j) * y(s.i));
  return r;
}

Mat LieAlgebra::ad(const Vec& x) const {
  Mat m = Mat::Zero(dim_, dim_);
  for (const auto& s : sc_) {
    m(s.k, s.j) += s.c * x(s.i);
    m(s.k, s.i) -= s.c * x(s.j);
  }
  return m;
}

double LieAlgebra::jacobi_residual() const {
  double r = 0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        Vec a = Vec::Unit(dim_, i), b = Vec::Unit(dim_, j), c = Vec::Unit(dim_, k);
        Vec s = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
        r = std::max(r, s.cwiseAbs().maxCoeff());
      }
  return r;
}

double LieAlgebra::ad_invariance_residual() const {
  double r = 0;
  for (int i = 0; i < dim_; ++i) {
    Mat A = ad(Vec::Unit(dim_, i));
    r = std::max(r, (A + A.transpose()).cwiseAbs().maxCoeff());
  }
  return r;
}

double LieAlgebra::antisymmetry_residual() const {
  double r = 0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      Vec a = Vec::Unit(dim_, i), b = Vec::Unit(dim_, j);
      r = std::max(r, (bracket(a, b) + bracket(b, a)).cwiseAbs().maxCoeff());
    }
  return r;
}

}  // namespace ptb
