#pragma once

#include "qpkit/bound_algebra.hpp"

namespace qpkit {

// An explicit direct sum of indecomposable projectives P_u = e_u A, with the
// generator positions recorded: generator k sits at gen_vertex[k], and its
// canonical basis vector inside the representation is remembered so that
// morphisms out of the projective can be specified on generators.
struct ProjectiveRep {
  Representation rep;
  std::vector<int> gen_vertex;
  // basis_word[v][i]: (generator, normal word) labelling basis vector i of rep at v.
  std::vector<std::vector<std::pair<int, Path>>> basis_word;

  long num_gens() const { return static_cast<long>(gen_vertex.size()); }
  // Index of the basis vector (k, e_{gen_vertex[k]}).
  long gen_position(const BoundAlgebra& A, int k) const;
};

ProjectiveRep projective_rep(const BoundAlgebra& A, const std::vector<int>& gen_vertices);
Representation injective_rep(const BoundAlgebra& A, int vertex);

// Morphism out of a projective determined by generator images.
RepMorphism morphism_from_gens(const BoundAlgebra& A, const ProjectiveRep& P,
                               const Representation& N, const std::vector<RatVec>& images);

// dims of top(M) = M/rad M per vertex, plus a lifted basis per vertex.
std::pair<std::vector<long>, std::vector<RatMat>> top_of(const BoundAlgebra& A,
                                                         const Representation& M);

struct CoverStep {
  ProjectiveRep cover;
  RepMorphism onto;        // cover -> M, surjective
  Representation kernel;   // ker(onto)
  RepMorphism include;     // kernel -> cover
};

CoverStep projective_cover(const BoundAlgebra& A, const Representation& M);

struct Resolution {
  // P[len] -> ... -> P[1] -> P[0] -> M -> 0 with maps[k] : P[k] -> P[k-1]
  // given on generators (each generator image is a vector in P[k-1]).
  std::vector<ProjectiveRep> projectives;
  std::vector<std::vector<RatVec>> maps;  // maps[k][g]: image of generator g of P[k] in P[k-1]
  bool terminated = false;                // the last kernel vanished
};

Resolution minimal_projective_resolution(const BoundAlgebra& A, const Representation& M, long len);

struct GlobalDimension {
  bool bounded = false;  // false means AboveBound
  long value = -1;
};

GlobalDimension global_dimension(const BoundAlgebra& A, long bound);

long projective_dimension(const BoundAlgebra& A, const Representation& M, long bound);  // -1: above

// Ext^k(M, N) dimension via Hom(P_., N).
long ext_dim(const BoundAlgebra& A, const Representation& M, const Representation& N, int k,
             long resolution_len = 8);

// AR translate: kernel of nu(P1) -> nu(P0) for a minimal presentation of M.
Representation ar_translate(const BoundAlgebra& A, const Representation& M);

// A-A-bimodule with vertex-pair components and arrow actions. For an arrow
// a:u->u' the left action maps component (u',v) to (u,v); for a:v->v' the
// right action maps (u,v) to (u,v').
struct Bimodule {
  int n = 0;
  std::vector<std::vector<long>> dims;                    // [u][v]
  std::map<std::pair<int, std::pair<int, int>>, RatMat> left;   // (arrow,(u',v)) -> matrix to (u,v)
  std::map<std::pair<int, std::pair<int, int>>, RatMat> right;  // (arrow,(u,v)) -> matrix to (u,v')

  long total() const;
  bool is_zero() const { return total() == 0; }
};

// Ext^2(DA, A) with both actions; requires gldim <= 2.
Bimodule ext2_bimodule(const BoundAlgebra& A);

// Checks the bimodule axioms on the action matrices: relations of A act as
// zero on either side, and the two actions commute. Throws on violation.
void validate_bimodule(const BoundAlgebra& A, const Bimodule& X);

Bimodule bimodule_tensor(const BoundAlgebra& A, const Bimodule& X, const Bimodule& Y);

struct NilpotencyReport {
  bool nilpotent = false;  // false with index=-1 means AboveBound
  long index = -1;         // least n with the n-th power zero
};

// Criterion (2): powers of the bimodule Ext^2(DA,A).
NilpotencyReport tensor_power_nilpotency(const BoundAlgebra& A, const Bimodule& X, long bound);

// Criterion (3): iterates of Tor_2(?, DA) on the injective cogenerator.
NilpotencyReport tor2_nilpotency(const BoundAlgebra& A, long bound);

struct TensorAlgebraDims {
  bool finite = false;
  long total = -1;
  std::vector<std::vector<long>> by_pair;  // e_u (T_A X) e_v
  long powers_used = 0;
};

TensorAlgebraDims tensor_algebra_dims(const BoundAlgebra& A, const Bimodule& X, long bound);

// Number of minimal relations from u to v: the (u,v) block of I/(IJ+JI).
std::vector<std::vector<long>> minimal_relation_counts(const BoundAlgebra& A);

// Quiver of the tensor algebra T_A Ext^2(DA,A): the quiver of A plus one new
// arrow t(r) -> s(r) per minimal relation r.
Quiver tilde_quiver(const BoundAlgebra& A, long bound = 64);

}  // namespace qpkit
