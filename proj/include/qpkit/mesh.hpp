#pragma once

#include "qpkit/linalg.hpp"
#include "qpkit/quiver.hpp"

#include <map>

namespace qpkit {

// Euler form <x,y> = sum_i x_i y_i - sum_{a:i->j} x_i y_j of an acyclic quiver.
long euler_form(const Quiver& q, const std::vector<long>& x, const std::vector<long>& y);

// Dimension vector of the injective at j in the knitted component: the number
// of paths from j to each vertex (the dimensions of D(e_j kQ)).
std::vector<long> injective_dims(const Quiver& q, int j);

// Dimension vector of tau X (resp. tau^{-1} X) from the Coxeter transformation
// derived from the Cartan matrix; meaningful for non-projective
// (resp. non-injective) inputs only, which the callers filter.
std::vector<long> coxeter_translate_dims(const Quiver& q, const std::vector<long>& x);
std::vector<long> coxeter_translate_inv_dims(const Quiver& q, const std::vector<long>& x);

// Knitted preinjective component: vertices (j,p) mean tau^p I_j. Arrows come
// in level arrows (i,p)->(j,p) for a:i->j and translate arrows
// (j,p+1)->(i,p) for a:i->j. For Dynkin quivers the knitting terminates on
// its own and yields the full AR quiver.
struct TranslationQuiver {
  struct Vertex {
    int j = -1;  // injective index (vertex of the base quiver)
    int p = 0;   // tau power
    std::vector<long> dim;
  };
  struct Edge {
    int from = -1, to = -1;
    int base_arrow = -1;
    bool translate = false;  // true for (j,p+1) -> (i,p) edges
  };

  Quiver base;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  bool complete = false;  // all orbits terminated (Dynkin)

  int index_of(int j, int p) const;  // -1 when absent
  int tau(int v) const;              // vertex of tau, -1 when absent
  int tau_inv(int v) const;
  std::vector<int> edges_from(int v) const;
  std::vector<int> edges_into(int v) const;
};

TranslationQuiver knit_preinjective(const Quiver& q, int depth);

// Hom spaces of the mesh category of a knitted window: paths modulo the mesh
// ideal, by exact linear algebra on the finite path space. Compositions are
// concatenation followed by reduction.
class MeshHoms {
 public:
  explicit MeshHoms(const TranslationQuiver& t) : t_(&t) {}

  long dim(int x, int y);

  // Paths from x to y as edge-index sequences, in a fixed enumeration order.
  const std::vector<std::vector<int>>& paths(int x, int y);

  // Quotient of the path space at (x,y) by the mesh relations.
  const QuotientSpace& space(int x, int y);

  // Coordinates of the class of a single path.
  RatVec path_class(int x, int y, const std::vector<int>& path);

  // Composition on quotient coordinates: f then g.
  RatVec compose(int x, int y, int z, const RatVec& f, const RatVec& g);

  const TranslationQuiver& window() const { return *t_; }

 private:
  const TranslationQuiver* t_;
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> paths_;
  std::map<std::pair<int, int>, QuotientSpace> spaces_;
};

}  // namespace qpkit
