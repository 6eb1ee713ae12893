#pragma once

#include "qpkit/numeric.hpp"

#include <optional>

namespace qpkit {

// Exact dense linear algebra over the rationals. Everything below runs plain
// Gauss-Jordan with first-nonzero pivoting; exactness makes thresholds moot.

struct Rref {
  RatMat mat;                 // reduced row echelon form
  std::vector<int> pivots;    // pivot column per nonzero row
  int rank = 0;
};

Rref rref(RatMat a);

int rank(const RatMat& a);

// Basis of the right kernel {x : a x = 0}, as columns.
RatMat kernel_basis(const RatMat& a);

// One solution of a x = b, or nullopt if inconsistent.
std::optional<RatVec> solve(const RatMat& a, const RatVec& b);

// Row space basis (as rows, in rref).
RatMat row_space(const RatMat& a);

// dim(coker) = cols(a) ... for a map written as x -> a x it is rows - rank.
inline int coker_dim(const RatMat& a) { return static_cast<int>(a.rows()) - rank(a); }

// Expresses each column of b in the column span of a; nullopt if any fails.
std::optional<RatMat> solve_many(const RatMat& a, const RatMat& b);

RatMat identity(int n);

// Quotient of k^ambient by the row span of a matrix; the complement of the
// pivot coordinates serves as the quotient basis.
class QuotientSpace {
 public:
  QuotientSpace() = default;
  QuotientSpace(long ambient, const RatMat& spanning_rows);

  long ambient() const { return ambient_; }
  long dim() const { return static_cast<long>(free_coords_.size()); }
  const std::vector<int>& free_coords() const { return free_coords_; }

  RatVec project(RatVec v) const;        // quotient coordinates
  RatVec lift(long basis_index) const;   // representative in the ambient space

 private:
  long ambient_ = 0;
  Rref rows_;
  std::vector<int> free_coords_;
};

}  // namespace qpkit
