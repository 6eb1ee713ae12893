#pragma once

#include "qpkit/linalg.hpp"
#include "qpkit/quiver.hpp"

namespace qpkit {

// Coxeter group of the underlying graph of a quiver: generators are the
// vertices; the exponent m_ij is 2, 3 or "infinity" according to whether
// zero, one, or at least two arrows join i and j. Words act exactly in the
// geometric representation, with the form entries 0, -1/2, -1 for those
// exponents, so all root coordinates stay rational.
class CoxeterSystem {
 public:
  explicit CoxeterSystem(const Quiver& q);

  int rank() const { return rank_; }

  // m_ij in {1, 2, 3, 0} with 0 standing for infinity.
  long exponent(int i, int j) const;

  // Matrix of the simple reflection s_i on the root space.
  const RatMat& reflection(int i) const { return reflections_[i]; }

  // Product of reflections along the word (letters are 0-based generators).
  RatMat word_matrix(const std::vector<int>& word) const;

  bool is_reduced(const std::vector<int>& word) const;
  long length(const std::vector<int>& word) const;
  bool equal_elements(const std::vector<int>& w1, const std::vector<int>& w2) const;

 private:
  int rank_;
  std::vector<std::vector<long>> m_;  // 0 encodes infinity
  std::vector<RatMat> reflections_;
};

// Letters "1".."9" (or separated by any non-digit) mapped to 0-based indices.
std::vector<int> parse_word(const std::string& s, int rank);

}  // namespace qpkit
