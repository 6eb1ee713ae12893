#include "qpkit/linalg.hpp"

namespace qpkit {

Rref rref(RatMat a) {
  const int m = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  Rref out;
  out.pivots.clear();
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int piv = -1;
    for (int r = row; r < m; ++r) {
      if (a(r, col) != 0) { piv = r; break; }
    }
    if (piv < 0) continue;
    if (piv != row) a.row(piv).swap(a.row(row));
    const Rational inv = Rational(1) / a(row, col);
    a.row(row) *= inv;
    for (int r = 0; r < m; ++r) {
      if (r == row || a(r, col) == 0) continue;
      a.row(r) -= a(r, col) * a.row(row);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  out.mat = std::move(a);
  return out;
}

int rank(const RatMat& a) { return rref(a).rank; }

RatMat kernel_basis(const RatMat& a) {
  const int n = static_cast<int>(a.cols());
  Rref r = rref(a);
  std::vector<bool> is_pivot(n, false);
  for (int c : r.pivots) is_pivot[c] = true;
  const int k = n - r.rank;
  RatMat basis = RatMat::Zero(n, k);
  int idx = 0;
  for (int free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    basis(free_col, idx) = 1;
    for (int pr = 0; pr < r.rank; ++pr) basis(r.pivots[pr], idx) = -r.mat(pr, free_col);
    ++idx;
  }
  return basis;
}

std::optional<RatVec> solve(const RatMat& a, const RatVec& b) {
  auto sol = solve_many(a, b);
  if (!sol) return std::nullopt;
  return RatVec(sol->col(0));
}

std::optional<RatMat> solve_many(const RatMat& a, const RatMat& b) {
  const int m = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  RatMat aug(m, n + b.cols());
  aug << a, b;
  Rref r = rref(aug);
  RatMat x = RatMat::Zero(n, b.cols());
  for (int pr = 0; pr < r.rank; ++pr) {
    if (r.pivots[pr] >= n) return std::nullopt;  // pivot in rhs: inconsistent
    x.row(r.pivots[pr]) = r.mat.block(pr, n, 1, b.cols());
  }
  return x;
}

RatMat row_space(const RatMat& a) {
  Rref r = rref(a);
  return r.mat.topRows(r.rank);
}

RatMat identity(int n) { return RatMat::Identity(n, n); }

QuotientSpace::QuotientSpace(long ambient, const RatMat& spanning_rows) : ambient_(ambient) {
  RatMat rows = spanning_rows.cols() == ambient ? spanning_rows : RatMat::Zero(0, ambient);
  rows_ = rref(rows);
  std::vector<bool> is_pivot(ambient, false);
  for (int c : rows_.pivots) is_pivot[c] = true;
  for (long c = 0; c < ambient; ++c)
    if (!is_pivot[c]) free_coords_.push_back(static_cast<int>(c));
}

RatVec QuotientSpace::project(RatVec v) const {
  for (int r = 0; r < rows_.rank; ++r) {
    const int pc = rows_.pivots[r];
    if (v(pc) != 0) v -= v(pc) * rows_.mat.row(r).transpose();
  }
  RatVec out(dim());
  for (long i = 0; i < dim(); ++i) out(i) = v(free_coords_[i]);
  return out;
}

RatVec QuotientSpace::lift(long basis_index) const {
  RatVec v = RatVec::Zero(ambient_);
  v(free_coords_[basis_index]) = 1;
  return v;
}

}  // namespace qpkit
