#pragma once

#include <vector>

#include "ptb/poly.hpp"

namespace ptb {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row major

enum class PivotSide { leading, trailing };

// In-place reduced row echelon form. With `trailing`, each pivot is the last
// nonzero entry of its row and pivots are eliminated from all other rows.
// Zero rows are removed; returns pivot columns, one per remaining row.
std::vector<int> rref(RatMat& m, int ncols, PivotSide side = PivotSide::leading);

int rank(RatMat m, int ncols);

// Basis of {v : M v = 0}, one vector per free column, in RREF-derived order.
std::vector<RatVec> kernel(const RatMat& m, int ncols);

// Solve M x = b; returns false if inconsistent.
bool solve(const RatMat& m, int ncols, const RatVec& b, RatVec& x);

RatVec mat_vec(const RatMat& m, const RatVec& v);
Rat det(RatMat m);

}  // namespace ptb
