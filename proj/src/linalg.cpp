#include "ptb/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptb {

namespace {

std::vector<int> rref_leading(RatMat& m, int ncols) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][static_cast<std::size_t>(c)] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Rat inv = 1 / m[r][static_cast<std::size_t>(c)];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r) continue;
      Rat f = m[i][static_cast<std::size_t>(c)];
      if (f == 0) continue;
      for (int j = c; j < ncols; ++j)
        m[i][static_cast<std::size_t>(j)] -= f * m[r][static_cast<std::size_t>(j)];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

}  // namespace

std::vector<int> rref(RatMat& m, int ncols, PivotSide side) {
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != ncols) throw std::invalid_argument("rref: ragged matrix");
  if (side == PivotSide::leading) return rref_leading(m, ncols);
  for (auto& row : m) std::reverse(row.begin(), row.end());
  auto piv = rref_leading(m, ncols);
  for (auto& row : m) std::reverse(row.begin(), row.end());
  for (auto& p : piv) p = ncols - 1 - p;
  return piv;
}

int rank(RatMat m, int ncols) { return static_cast<int>(rref(m, ncols).size()); }

std::vector<RatVec> kernel(const RatMat& m, int ncols) {
  RatMat a = m;
  auto piv = rref(a, ncols);
  std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
  for (int p : piv) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<RatVec> out;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    RatVec v(static_cast<std::size_t>(ncols), Rat(0));
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i)
      v[static_cast<std::size_t>(piv[i])] = -a[i][static_cast<std::size_t>(f)];
    out.push_back(std::move(v));
  }
  return out;
}

bool solve(const RatMat& m, int ncols, const RatVec& b, RatVec& x) {
  RatMat a = m;
  for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b.at(i));
  auto piv = rref(a, ncols + 1);
  if (!piv.empty() && piv.back() == ncols) return false;
  x.assign(static_cast<std::size_t>(ncols), Rat(0));
  for (std::size_t i = 0; i < piv.size(); ++i)
    x[static_cast<std::size_t>(piv[i])] = a[i][static_cast<std::size_t>(ncols)];
  return true;
}

RatVec mat_vec(const RatMat& m, const RatVec& v) {
  RatVec out(m.size(), Rat(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

Rat det(RatMat m) {
  const std::size_t n = m.size();
  Rat d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      Rat f = m[i][c] / m[c][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

}  // namespace ptb
