#pragma once

#include "qpkit/quiver.hpp"

#include <map>
#include <optional>

namespace qpkit {

// A composable path: `source` is the start vertex, `arrows` the arrow indices
// in composition order. Composition is left-to-right: for a:i->j, b:j->k the
// word {a,b} is the length-2 path i->k. Length 0 encodes the idempotent e_i.
struct Path {
  int source = -1;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  bool is_vertex() const { return arrows.empty(); }
};

// Length-first, then lexicographic by global arrow index. Degree-compatible,
// which the truncated Groebner machinery relies on.
struct PathOrder {
  bool operator()(const Path& a, const Path& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.length() == 0) return a.source < b.source;
    return a.arrows < b.arrows;
  }
};

inline bool operator==(const Path& a, const Path& b) {
  return a.length() == b.length() && (a.length() ? a.arrows == b.arrows : a.source == b.source);
}
inline bool operator!=(const Path& a, const Path& b) { return !(a == b); }

int path_target(const Quiver& q, const Path& p);
int path_source(const Quiver& q, const Path& p);
bool path_composable(const Quiver& q, const Path& p);
std::string path_to_string(const Quiver& q, const Path& p);

// Concatenation p.q, or nullopt when endpoints do not match.
std::optional<Path> concat(const Quiver& q, const Path& a, const Path& b);

// Formal rational linear combination of composable paths of one quiver.
// Zero coefficients are never stored.
class PathVector {
 public:
  using Terms = std::map<Path, Rational, PathOrder>;

  PathVector() = default;

  static PathVector zero() { return PathVector(); }
  static PathVector idempotent(const Quiver& q, int vertex);
  static PathVector arrow(const Quiver& q, int arrow);
  static PathVector monomial(const Quiver& q, Path p, Rational c = 1);

  void add_term(Path p, const Rational& c);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int max_length() const;

  // Largest term in the monomial order.
  const Path& leading_path() const;
  const Rational& leading_coeff() const;

  PathVector& operator+=(const PathVector& o);
  PathVector& operator-=(const PathVector& o);
  PathVector& operator*=(const Rational& c);
  friend PathVector operator+(PathVector a, const PathVector& b) { return a += b; }
  friend PathVector operator-(PathVector a, const PathVector& b) { return a -= b; }
  friend PathVector operator*(Rational c, PathVector a) { return a *= c; }
  friend PathVector operator*(PathVector a, const Rational& c) { return a *= c; }

  bool operator==(const PathVector& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

// Bilinear extension of concatenation; incomposable products vanish.
PathVector multiply(const Quiver& q, const PathVector& u, const PathVector& v);
PathVector multiply(const Quiver& q, const Path& a, const Path& b);

std::string to_string(const Quiver& q, const PathVector& v);

// Vertex components e_i c e_i of the preprojective relation
// c = sum_a (a* a + a a*) on the double quiver of q; zero components omitted.
// Returned over double_quiver(q), paired with that quiver for convenience.
std::vector<PathVector> preprojective_relations(const Quiver& q, Quiver* doubled_out = nullptr);

}  // namespace qpkit
