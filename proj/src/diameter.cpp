#include <cmath>
#include <numbers>

#include "ptb/errors.hpp"
#include "ptb/homgeo.hpp"

namespace ptb {

Mat su_torus_gram(int n) {
  // Coroot lattice 2πi·(E_kk − E_{k+1,k+1}): Gram = 4π² times the Cartan matrix of A_{n-1}.
  const double s = 4 * std::numbers::pi * std::numbers::pi;
  Mat g = Mat::Zero(n - 1, n - 1);
  for (int i = 0; i < n - 1; ++i) {
    g(i, i) = 2 * s;
    if (i + 1 < n - 1) g(i, i + 1) = g(i + 1, i) = -s;
  }
  return g;
}

double covering_radius_exact(const Mat& gram) {
  if (gram.rows() == 1) return std::sqrt(gram(0, 0)) / 2;
  if (gram.rows() != 2) throw UnsupportedFactor("covering radius implemented for rank 1 and 2 only");
  // Gauss reduction, then the reduced basis spans a non-obtuse Delaunay triangle.
  double a = gram(0, 0), b = gram(0, 1), c = gram(1, 1);
  for (int guard = 0; guard < 1000; ++guard) {
    if (a > c) std::swap(a, c);
    const double mu = std::round(b / a);
    if (mu == 0) break;
    c = c - 2 * mu * b + mu * mu * a;
    b = b - mu * a;
  }
  b = std::abs(b);
  const double s1 = std::sqrt(a), s2 = std::sqrt(c), s3 = std::sqrt(a + c - 2 * b);
  const double area = 0.5 * std::sqrt(a * c - b * b);
  return s1 * s2 * s3 / (4 * area);
}

double covering_radius_brute(const Mat& gram, int grid) {
  const int r = static_cast<int>(gram.rows());
  if (r < 1 || r > 2) throw UnsupportedFactor("covering radius implemented for rank 1 and 2 only");
  const Mat L = Eigen::LLT<Mat>(gram).matrixL();  // rows are basis vectors in R^r
  const int window = 4;
  auto nearest = [&](const Vec& p) {
    double best = INFINITY;
    for (int i = -window; i <= window; ++i)
      for (int j = (r == 2 ? -window : 0); j <= (r == 2 ? window : 0); ++j) {
        Vec q = i * L.row(0).transpose();
        if (r == 2) q += j * L.row(1).transpose();
        best = std::min(best, (p - q).norm());
      }
    return best;
  };
  auto point = [&](double s, double u) {
    Vec p = s * L.row(0).transpose();
    if (r == 2) p += u * L.row(1).transpose();
    return p;
  };
  // Full grid over the fundamental domain, then repeated zooms around the best cell.
  double cs = 0.5, cu = 0.5, half = 0.5, best = -1;
  for (int level = 0; level < 12; ++level) {
    const double step = 2 * half / grid;
    double bs = cs, bu = cu;
    for (int i = 0; i <= grid; ++i)
      for (int j = 0; j <= (r == 2 ? grid : 0); ++j) {
        const double s = cs - half + i * step, u = (r == 2 ? cu - half + j * step : 0);
        const double d = nearest(point(s, u));
        if (d > best) {
          best = d;
          bs = s;
          bu = u;
        }
      }
    cs = bs;
    cu = bu;
    half = 2 * step;
  }
  return best;
}

DiameterBound diameter_upper_bound(const LieAlgebra& g) {
  DiameterBound out;
  int su_count = 0;
  double sum = 0;
  for (const auto& b : g.blocks()) {
    DiameterFactor f;
    if (b.kind == LieBlock::su) {
      if (b.n > 3) throw UnsupportedFactor("diameter bound implemented for su(2) and su(3) only");
      f.name = "su(" + std::to_string(b.n) + ")#" + std::to_string(++su_count);
      f.covering_radius = covering_radius_exact(su_torus_gram(b.n));
    } else {
      if (b.n > 2) throw UnsupportedFactor("diameter bound implemented for tori of rank <= 2");
      f.name = "T^" + std::to_string(b.n);
      const double c = 2 * std::numbers::pi;
      f.covering_radius = covering_radius_exact(c * c * Mat::Identity(b.n, b.n));
    }
    sum += f.covering_radius * f.covering_radius;
    out.factors.push_back(f);
  }
  out.D = std::sqrt(sum);
  return out;
}

}  // namespace ptb
