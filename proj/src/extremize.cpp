#include <cmath>
#include <random>

#include "ptb/homgeo.hpp"

namespace ptb {

namespace {

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

Vec gaussian(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> nd;
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = nd(rng);
  return v;
}

// Haar-random orthonormal pair in R^n.
std::pair<Vec, Vec> random_frame(std::mt19937_64& rng, int n) {
  Vec u = gaussian(rng, n).normalized();
  Vec v = gaussian(rng, n);
  v -= u.dot(v) * u;
  return {u, v.normalized()};
}

// Orthonormal basis of v^⊥ (v unit).
Mat complement(const Vec& v) {
  Eigen::HouseholderQR<Mat> qr(v);
  Mat q = qr.householderQ();
  return q.rightCols(v.size() - 1);
}

// Unit u ⊥ v extremizing u^T B u; returns the extremal value.
double extreme_on_complement(const Mat& B, const Vec& v, bool maximize, Vec& u) {
  const Mat W = complement(v);
  Eigen::SelfAdjointEigenSolver<Mat> es(W.transpose() * B * W);
  const Eigen::Index k = maximize ? W.cols() - 1 : 0;
  u = W * es.eigenvectors().col(k);
  return es.eigenvalues()(k);
}

// B_v[a][d] = Σ_bc R_abcd v_b v_c, so that u^T B_v u = R(u,v,v,u).
Mat plane_form(const CurvatureOperator& op, const Vec& v) {
  const int n = op.n;
  Mat B = Mat::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (v(b) == 0) continue;
      for (int c = 0; c < n; ++c) {
        const double w = v(b) * v(c);
        const double* row = &op.R[static_cast<std::size_t>(((a * n + b) * n + c) * n)];
        for (int d = 0; d < n; ++d) B(a, d) += w * row[d];
      }
    }
  return 0.5 * (B + B.transpose());
}

double plane_value(const CurvatureOperator& op, const Vec& u, const Vec& v) {
  return u.dot(plane_form(op, v) * u);
}

struct Refined {
  Vec u, v;
  double start = 0, value = 0;
};

Refined refine(const CurvatureOperator& op, Vec u, Vec v, int steps, bool maximize) {
  Refined r;
  r.start = plane_value(op, u, v);
  double val = r.start;
  for (int s = 0; s < steps; ++s) {
    Vec nu;
    extreme_on_complement(plane_form(op, v), v, maximize, nu);
    Vec nv;
    const double nval = extreme_on_complement(plane_form(op, nu), nu, maximize, nv);
    const bool better = maximize ? nval > val : nval < val;
    if (!better) break;
    const double gain = std::abs(nval - val);
    u = nu;
    v = nv;
    val = nval;
    if (gain < 1e-14 * std::max(1.0, std::abs(val))) break;
  }
  r.u = u;
  r.v = v;
  r.value = val;
  return r;
}

}  // namespace

SecBounds sec_bounds(const CurvatureOperator& op, const Decomposition& D, int samples, int refine_steps,
                     std::uint64_t seed, Exec mode) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  const int n = op.n;
  std::vector<Refined> lo(static_cast<std::size_t>(samples)), hi(static_cast<std::size_t>(samples));
  auto run = [&](int s) {
    auto rng = sample_rng(seed, static_cast<std::uint64_t>(s));
    auto [u, v] = random_frame(rng, n);
    lo[static_cast<std::size_t>(s)] = refine(op, u, v, refine_steps, false);
    hi[static_cast<std::size_t>(s)] = refine(op, u, v, refine_steps, true);
  };
  if (mode == Exec::openmp) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int s = 0; s < samples; ++s) run(s);
  } else {
    for (int s = 0; s < samples; ++s) run(s);
  }
  SecBounds out;
  std::size_t best_lo = 0, best_hi = 0;
  for (std::size_t s = 0; s < lo.size(); ++s) {
    out.sampled.push_back(lo[s].start);
    if (lo[s].value < lo[best_lo].value) best_lo = s;
    if (hi[s].value > hi[best_hi].value) best_hi = s;
  }
  // Witnesses are re-evaluated directly from the bracket formula.
  auto witness = [&](const Refined& r) {
    PlaneWitness w;
    w.x = op.basis * r.u;
    w.y = op.basis * r.v;
    w.value = sec_quadrilinear(D, op.t, w.x, w.y);
    return w;
  };
  out.argmin = witness(lo[best_lo]);
  out.argmax = witness(hi[best_hi]);
  out.min = out.argmin.value;
  out.max = out.argmax.value;
  return out;
}

SecBounds sec_bounds(const Decomposition& D, double t, int samples, int refine_steps, std::uint64_t seed,
                     Exec mode) {
  return sec_bounds(assemble_curvature_operator(D, t, mode), D, samples, refine_steps, seed, mode);
}

PlaneWitness bracket_norm_max(const LieAlgebra& g, int samples, int refine_steps, std::uint64_t seed) {
  const int n = g.dim();
  PlaneWitness best;
  best.value = -1;
  for (int s = 0; s < samples; ++s) {
    auto rng = sample_rng(seed, static_cast<std::uint64_t>(s));
    auto [x, y] = random_frame(rng, n);
    double val = g.bracket(x, y).squaredNorm();
    for (int k = 0; k < refine_steps; ++k) {
      const Mat ay = g.ad(y);
      Vec nx;
      extreme_on_complement(ay.transpose() * ay, y, true, nx);
      const Mat ax = g.ad(nx);
      Vec ny;
      const double nval = extreme_on_complement(ax.transpose() * ax, nx, true, ny);
      if (nval <= val * (1 + 1e-15)) break;
      x = nx;
      y = ny;
      val = nval;
    }
    if (val > best.value) {
      best.x = x;
      best.y = y;
      best.value = val;
    }
  }
  return best;
}

AdmissiblePair random_admissible(const Decomposition& D, std::uint64_t seed, std::uint64_t index) {
  auto rng = sample_rng(seed, index);
  auto [u, v] = random_frame(rng, D.tangent_dim());
  const int n1 = D.n1(), n2 = D.n2();
  AdmissiblePair p;
  p.x1 = D.m1 * u.head(n1);
  p.x2 = D.m2 * u.tail(n2);
  p.y1 = D.m1 * v.head(n1);
  p.y2 = D.m2 * v.tail(n2);
  return p;
}

}  // namespace ptb
