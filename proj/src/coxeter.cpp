#include "qpkit/coxeter.hpp"

namespace qpkit {

CoxeterSystem::CoxeterSystem(const Quiver& q) : rank_(q.num_vertices()) {
  m_.assign(rank_, std::vector<long>(rank_, 2));
  auto adj = q.adjacency();
  for (int i = 0; i < rank_; ++i) {
    m_[i][i] = 1;
    for (int j = 0; j < rank_; ++j) {
      if (i == j) continue;
      long edges = adj[i][j] + adj[j][i];
      m_[i][j] = edges == 0 ? 2 : (edges == 1 ? 3 : 0);
    }
  }
  // Bilinear form B(alpha_i, alpha_j) = -cos(pi/m): 1 on the diagonal, 0 for
  // m=2, -1/2 for m=3, -1 for m=infinity. s_i(v) = v - 2 B(alpha_i, v) alpha_i.
  RatMat b = RatMat::Zero(rank_, rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      if (i == j)
        b(i, j) = 1;
      else if (m_[i][j] == 2)
        b(i, j) = 0;
      else if (m_[i][j] == 3)
        b(i, j) = Rational(-1, 2);
      else
        b(i, j) = -1;
    }
  for (int i = 0; i < rank_; ++i) {
    RatMat s = identity(rank_);
    for (int j = 0; j < rank_; ++j) s(i, j) -= 2 * b(i, j);
    reflections_.push_back(std::move(s));
  }
}

long CoxeterSystem::exponent(int i, int j) const { return m_[i][j]; }

RatMat CoxeterSystem::word_matrix(const std::vector<int>& word) const {
  RatMat m = identity(rank_);
  for (int letter : word) {
    if (letter < 0 || letter >= rank_) throw Error("coxeter word letter out of range");
    m = m * reflections_[letter];
  }
  return m;
}

bool CoxeterSystem::is_reduced(const std::vector<int>& word) const {
  return length(word) == static_cast<long>(word.size());
}

long CoxeterSystem::length(const std::vector<int>& word) const {
  // l(w s_i) = l(w) + 1 exactly when w(alpha_i) is a positive root.
  RatMat w = identity(rank_);
  long len = 0;
  for (int letter : word) {
    if (letter < 0 || letter >= rank_) throw Error("coxeter word letter out of range");
    RatVec root = w.col(letter);
    bool positive = true;
    for (int i = 0; i < rank_; ++i) positive = positive && root(i) >= 0;
    len += positive ? 1 : -1;
    w = w * reflections_[letter];
  }
  return len;
}

bool CoxeterSystem::equal_elements(const std::vector<int>& w1, const std::vector<int>& w2) const {
  return word_matrix(w1) == word_matrix(w2);
}

std::vector<int> parse_word(const std::string& s, int rank) {
  std::vector<int> word;
  long current = -1;
  auto flush = [&]() {
    if (current < 0) return;
    if (current < 1 || current > rank) throw Error("word letter out of range");
    word.push_back(static_cast<int>(current - 1));
    current = -1;
  };
  for (char c : s) {
    if (c >= '0' && c <= '9') {
      if (rank <= 9) {
        word.push_back(c - '0' - 1);
        if (word.back() < 0 || word.back() >= rank) throw Error("word letter out of range");
      } else {
        current = (current < 0 ? 0 : current * 10) + (c - '0');
      }
    } else {
      flush();
    }
  }
  flush();
  return word;
}

}  // namespace qpkit
