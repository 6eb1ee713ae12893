#pragma once

#include "qpkit/groebner.hpp"
#include "qpkit/linalg.hpp"

namespace qpkit {

// A finite-dimensional quotient of a path algebra by an admissible ideal,
// carrying its certified normal-word basis. Multiplication is Groebner
// reduction. The path convention makes modules covariant: a representation
// assigns a space to each vertex and a matrix M_i -> M_j to each arrow i->j.
class BoundAlgebra {
 public:
  static BoundAlgebra build(const Quiver& q, std::vector<PathVector> relations, long d_max);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<PathVector>& relations() const { return relations_; }
  const std::vector<PathVector>& groebner_basis() const { return pres_.groebner; }
  const std::vector<Path>& basis() const { return basis_; }

  long dim() const { return static_cast<long>(basis_.size()); }
  int num_vertices() const { return quiver_.num_vertices(); }

  // Indices of basis words from u to v.
  const std::vector<int>& basis_at(int u, int v) const { return basis_by_pair_[u][v]; }
  int basis_index(const Path& p) const;

  PathVector reduce(PathVector f) const { return normal_form(quiver_, pres_.groebner, std::move(f)); }

  // Loewy-style bound: all words of this length reduce away.
  long nilpotency_degree() const { return max_basis_length_ + 1; }

 private:
  Quiver quiver_;
  std::vector<PathVector> relations_;
  QuotientPresentation pres_;
  std::vector<Path> basis_;
  std::vector<std::vector<std::vector<int>>> basis_by_pair_;
  std::map<Path, int, PathOrder> basis_index_;
  long max_basis_length_ = 0;
};

// Right module over a BoundAlgebra as a representation of its quiver: x in
// M_i is mapped along arrow a:i->j by the matrix map(a) of shape dim_j x dim_i.
struct Representation {
  std::vector<long> dims;
  std::vector<RatMat> maps;  // indexed by arrow

  long total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
};

Representation zero_representation(const BoundAlgebra& A);
Representation simple_representation(const BoundAlgebra& A, int vertex);
Representation direct_sum(const BoundAlgebra& A, const std::vector<Representation>& parts);

// Action of a path (resp. path vector with endpoints (u,v)): matrix M_u -> M_v.
RatMat act(const BoundAlgebra& A, const Representation& M, const Path& p);
RatMat act(const BoundAlgebra& A, const Representation& M, const PathVector& f, int u, int v);

// All relations evaluate to zero on M, and shapes are consistent.
void validate_representation(const BoundAlgebra& A, const Representation& M);

// A morphism of representations: one matrix per vertex.
struct RepMorphism {
  std::vector<RatMat> blocks;  // blocks[v]: M_v -> N_v
};

// Basis of Hom(M, N).
std::vector<RepMorphism> rep_hom(const BoundAlgebra& A, const Representation& M,
                                 const Representation& N);
long hom_dim(const BoundAlgebra& A, const Representation& M, const Representation& N);

// Kernel of a morphism, with the inclusion into M.
std::pair<Representation, RepMorphism> rep_kernel(const BoundAlgebra& A, const Representation& M,
                                                  const Representation& N, const RepMorphism& f);

bool is_iso(const BoundAlgebra& A, const Representation& M, const Representation& N,
            const RepMorphism& f);

// Indecomposables in a directed family: equal dims plus nonzero Homs both
// ways. Sound for the module families this toolkit produces.
bool directed_iso(const BoundAlgebra& A, const Representation& M, const Representation& N);

}  // namespace qpkit
