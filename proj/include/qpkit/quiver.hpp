#pragma once

#include "qpkit/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace qpkit {

struct Arrow {
  std::string id;
  std::string source;
  std::string target;
  long degree = 0;
};

// A finite quiver. Vertices and arrows are kept sorted by id; every
// downstream canonicalization (monomial orders, report ordering) ties back to
// this order, so construction is the single place that fixes it.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }

  int vertex_index(const std::string& id) const;
  int arrow_index(const std::string& id) const;
  const Arrow& arrow(int i) const { return arrows_[i]; }
  const std::string& vertex(int i) const { return vertices_[i]; }

  int source_of(int arrow) const { return src_[arrow]; }
  int target_of(int arrow) const { return tgt_[arrow]; }

  bool is_graded() const;   // any arrow of nonzero degree
  bool is_acyclic() const;  // no directed cycle through degree-0 arrows

  // Number of arrows i->j, as a dense matrix.
  std::vector<std::vector<long>> adjacency() const;

  bool operator==(const Quiver& o) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<int> src_, tgt_;
  std::map<std::string, int> vindex_, aindex_;
};

Quiver opposite_quiver(const Quiver& q);
Quiver double_quiver(const Quiver& q);

// Path counts: entry (i,j) is the number of paths i -> j (including the
// trivial ones on the diagonal). Throws for cyclic quivers.
std::vector<std::vector<Integer>> path_count_matrix(const Quiver& q);

}  // namespace qpkit
