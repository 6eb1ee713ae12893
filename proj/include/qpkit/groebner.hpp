#pragma once

#include "qpkit/path_algebra.hpp"

namespace qpkit {

enum class Verdict { Finite, Infinite, Inconclusive };

// Two-sided quotient kQ/<gens>, presented by a reduced Groebner basis under
// the length-lex order, computed with all overlaps of degree <= d_max
// resolved. `complete` certifies the finite-dimensional case: the basis is
// saturated (no overlap was clipped by the degree bound) and the normal words
// die out, so `normal_words` and the dimensions are exact.
struct QuotientPresentation {
  Quiver quiver;
  std::vector<PathVector> generators;
  std::vector<PathVector> groebner;
  long d_max = 0;
  bool saturated = false;
  bool complete = false;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<Path> normal_words;  // exact iff complete
};

struct QuotientDims {
  Verdict verdict = Verdict::Inconclusive;
  long total = -1;                                // valid iff Finite
  std::vector<std::vector<long>> by_vertex_pair;  // dims of e_i A e_j, iff Finite
  long d_max = 0;
};

// Full reduction of f modulo the leading words of basis; deterministic
// (largest reducible term first, leftmost occurrence).
PathVector normal_form(const Quiver& q, const std::vector<PathVector>& basis, PathVector f);

QuotientPresentation groebner(const Quiver& q, std::vector<PathVector> gens, long d_max);

QuotientDims quotient_dims(const QuotientPresentation& p);

// Brute-force oracle used by tests and cross-checks: all composable paths of
// length < max_len avoiding every leading word as a subword.
std::vector<Path> enumerate_normal_words(const Quiver& q, const std::vector<PathVector>& basis,
                                         long max_len);

}  // namespace qpkit
