#include <cmath>

#include "ptb/errors.hpp"
#include "ptb/homgeo.hpp"

namespace ptb {

namespace {

constexpr double kTangentTol = 1e-10;

void require_t(double t) {
  if (!(t > 0)) throw NonpositiveT("t must be positive, got " + std::to_string(t));
}

void require_tangent(const Decomposition& D, const Vec& x, const char* what) {
  if ((D.P_h * x).norm() > kTangentTol * std::max(1.0, x.norm()))
    throw NotTangent(std::string(what) + " has a component in h");
}

double norm_t(const Decomposition& D, double t, const Vec& x) { return inner_t(D, t, x, x); }

}  // namespace

double weight_value(SymmetricWeight w) { return w == SymmetricWeight::koszul ? 0.25 : 1.0; }

SecTerms sec_terms(const Decomposition& D, double t, const Vec& x, const Vec& y, SymmetricWeight w) {
  require_t(t);
  require_tangent(D, x, "X");
  require_tangent(D, y, "Y");
  const LieAlgebra& g = D.g;
  SecTerms s;
  const Vec u = ad_star_apply(D, t, x, y) + ad_star_apply(D, t, y, x);
  s.a = norm_t(D, t, u);
  s.b = inner_t(D, t, ad_star_apply(D, t, x, x), ad_star_apply(D, t, y, y));
  const Vec xy = g.bracket(x, y);
  s.c = norm_t(D, t, D.P_m * xy);
  s.d = -0.5 * (inner_t(D, t, g.bracket(xy, y), x) + inner_t(D, t, g.bracket(-xy, x), y));
  s.value = weight_value(w) * s.a - s.b - 0.75 * s.c + s.d;
  return s;
}

double sec_quadrilinear(const Decomposition& D, double t, const Vec& x, const Vec& y, SymmetricWeight w) {
  return sec_terms(D, t, x, y, w).value;
}

namespace {

void require_admissible(const Decomposition& D, const AdmissiblePair& p) {
  auto off = [](const Mat& P, const Vec& v) { return (v - P * v).norm(); };
  if (off(D.P_m1, p.x1) > kTangentTol || off(D.P_m1, p.y1) > kTangentTol || off(D.P_m2, p.x2) > kTangentTol ||
      off(D.P_m2, p.y2) > kTangentTol)
    throw NotTangent("X1, Y1 must lie in m1 and X2, Y2 in m2");
  const double nx = p.x1.squaredNorm() + p.x2.squaredNorm();
  const double ny = p.y1.squaredNorm() + p.y2.squaredNorm();
  const double cross = p.x1.dot(p.y1) + p.x2.dot(p.y2);
  if (std::abs(nx - 1) > kTangentTol || std::abs(ny - 1) > kTangentTol || std::abs(cross) > kTangentTol)
    throw NotOrthonormal("admissible pair is not orthonormal");
}

struct Brackets {
  double P, Q, C, N, N2, Dd;
};

Brackets brackets(const Decomposition& D, const AdmissiblePair& p) {
  const Vec a = D.g.bracket(p.x1, p.y2);
  const Vec b = D.g.bracket(p.x2, p.y1);
  const Vec n = D.g.bracket(p.x1, p.y1);
  return {a.squaredNorm(), b.squaredNorm(), a.dot(b), n.squaredNorm(), (D.P_m2 * n).squaredNorm(),
          (a - b).squaredNorm()};
}

}  // namespace

SecTerms lemma41_terms(const Decomposition& D, double t, const AdmissiblePair& p) {
  require_t(t);
  require_admissible(D, p);
  const Brackets k = brackets(D, p);
  const double s = (t - 1 / t) * (t - 1 / t);
  const double plus = k.P + k.Q + 2 * k.C;
  SecTerms r;
  r.a = s * (k.P + k.Q - 2 * k.C);
  r.b = -s * k.C;
  r.c = t * t * k.N2 + plus / (t * t);
  r.d = k.N + 0.5 * (1 + 1 / (t * t)) * plus;
  r.value = r.a - r.b - 0.75 * r.c + r.d;
  return r;
}

ClosedForm sec_closed_form(const Decomposition& D, double t, const AdmissiblePair& p) {
  require_t(t);
  require_admissible(D, p);
  const Brackets k = brackets(D, p);
  const double t2 = t * t;
  ClosedForm f;
  f.displayed = k.N - 0.75 * t2 * k.N2 + (t2 + 0.75 / t2 - 1.5) * k.Dd + t2 * k.C;
  f.displayed_lower_bound = (1 - t2) * k.N + (0.75 * (t2 + 1 / t2) - 1.5) * k.Dd;
  f.corrected = k.N - 0.75 * t2 * k.N2 + 0.25 * t2 * k.Dd + t2 * k.C;
  f.corrected_lower_bound = (1 - t2) * k.N;
  return f;
}

// The st-coefficient of k(X + sA, Y + tB), which is symmetric in the pairs.
static double mixed(const Decomposition& D, double t, const Vec& x, const Vec& a, const Vec& y, const Vec& b,
                    SymmetricWeight w) {
  auto k = [&](const Vec& u, const Vec& v) { return sec_quadrilinear(D, t, u, v, w); };
  return (k(x + a, y + b) - k(x + a, y - b) - k(x - a, y + b) + k(x - a, y - b)) / 4;
}

double curvature_tensor(const Decomposition& D, double t, const Vec& x, const Vec& y, const Vec& z, const Vec& w,
                        SymmetricWeight wt) {
  return (mixed(D, t, x, w, y, z, wt) - mixed(D, t, x, z, y, w, wt)) / 6;
}

double koszul_oneill_tensor(const Decomposition& D, double t, const Vec& x, const Vec& y, const Vec& z,
                            const Vec& w) {
  require_t(t);
  const LieAlgebra& g = D.g;
  // Levi-Civita connection of the left-invariant metric <,>_t on G.
  auto nabla = [&](const Vec& u, const Vec& v) -> Vec {
    return 0.5 * g.bracket(u, v) - 0.5 * (ad_star_apply(D, t, u, v) + ad_star_apply(D, t, v, u));
  };
  const Vec rz = nabla(x, nabla(y, z)) - nabla(y, nabla(x, z)) - nabla(g.bracket(x, y), z);
  const double rg = inner_t(D, t, rz, w);
  auto A = [&](const Vec& u, const Vec& v) -> Vec { return 0.5 * (D.P_h * g.bracket(u, v)); };
  return rg - 2 * inner_t(D, t, A(x, y), A(z, w)) + inner_t(D, t, A(y, z), A(x, w)) -
         inner_t(D, t, A(x, z), A(y, w));
}

Mat tangent_basis(const Decomposition& D, double t) {
  require_t(t);
  Mat e(D.g.dim(), D.tangent_dim());
  e << D.m1, D.m2 / t;
  return e;
}

Vec CurvatureOperator::wedge(const Vec& u, const Vec& v) const {
  Vec out(n * (n - 1) / 2);
  int p = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out(p++) = u(i) * v(j) - u(j) * v(i);
  return out;
}

CurvatureOperator assemble_curvature_operator(const Decomposition& D, double t, Exec mode) {
  require_t(t);
  CurvatureOperator op;
  op.t = t;
  op.basis = tangent_basis(D, t);
  const int n = D.tangent_dim();
  op.n = n;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const long np = static_cast<long>(pairs.size());
  // Upper triangle of the pair-symmetric Λ² block, flattened.
  std::vector<std::pair<long, long>> jobs;
  jobs.reserve(static_cast<std::size_t>(np * (np + 1) / 2));
  for (long p = 0; p < np; ++p)
    for (long q = p; q < np; ++q) jobs.emplace_back(p, q);
  std::vector<double> vals(jobs.size());
  const long nj = static_cast<long>(jobs.size());
  auto eval = [&](long s) {
    const auto [i, j] = pairs[static_cast<std::size_t>(jobs[static_cast<std::size_t>(s)].first)];
    const auto [k, l] = pairs[static_cast<std::size_t>(jobs[static_cast<std::size_t>(s)].second)];
    vals[static_cast<std::size_t>(s)] =
        curvature_tensor(D, t, op.basis.col(i), op.basis.col(j), op.basis.col(k), op.basis.col(l));
  };
  if (mode == Exec::openmp) {
#pragma omp parallel for schedule(dynamic, 64)
    for (long s = 0; s < nj; ++s) eval(s);
  } else {
    for (long s = 0; s < nj; ++s) eval(s);
  }

  op.R.assign(static_cast<std::size_t>(n) * n * n * n, 0.0);
  op.M = Mat::Zero(np, np);
  auto put = [&](int a, int b, int c, int d, double v) {
    op.R[static_cast<std::size_t>(((a * n + b) * n + c) * n + d)] = v;
  };
  for (long s = 0; s < nj; ++s) {
    const auto [p, q] = jobs[static_cast<std::size_t>(s)];
    const auto [i, j] = pairs[static_cast<std::size_t>(p)];
    const auto [k, l] = pairs[static_cast<std::size_t>(q)];
    const double v = vals[static_cast<std::size_t>(s)];
    for (int sym = 0; sym < 2; ++sym) {
      const int a = sym ? k : i, b = sym ? l : j, c = sym ? i : k, d = sym ? j : l;
      put(a, b, c, d, v);
      put(b, a, c, d, -v);
      put(a, b, d, c, -v);
      put(b, a, d, c, v);
    }
    // M[(ij),(kl)] = R(e_i, e_j, e_l, e_k)
    op.M(p, q) = op.M(q, p) = -v;
  }
  return op;
}

EigenResult curvature_operator_min_eig(const CurvatureOperator& op) {
  Eigen::SelfAdjointEigenSolver<Mat> es(op.M);
  if (es.info() != Eigen::Success) throw EigenFailure("curvature operator eigensolver did not converge");
  EigenResult r;
  r.value = es.eigenvalues()(0);
  r.vector = es.eigenvectors().col(0);
  r.residual = (op.M * r.vector - r.value * r.vector).norm();
  return r;
}

RicciResult ricci_min(const Decomposition& D, double t) {
  require_t(t);
  const Mat e = tangent_basis(D, t);
  const int n = static_cast<int>(e.cols());
  auto ric = [&](const Vec& v) {
    double s = 0;
    for (int i = 0; i < n; ++i) s += sec_quadrilinear(D, t, v, e.col(i));
    return s;
  };
  RicciResult r;
  r.matrix = Mat::Zero(n, n);
  for (int a = 0; a < n; ++a) r.matrix(a, a) = ric(e.col(a));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      r.matrix(a, b) = r.matrix(b, a) = (ric(e.col(a) + e.col(b)) - r.matrix(a, a) - r.matrix(b, b)) / 2;
  Eigen::SelfAdjointEigenSolver<Mat> es(r.matrix);
  if (es.info() != Eigen::Success) throw EigenFailure("Ricci eigensolver did not converge");
  r.min = es.eigenvalues()(0);
  r.direction = e * es.eigenvectors().col(0);
  r.trace = r.matrix.trace();
  return r;
}

}  // namespace ptb
