#pragma once

#include "qpkit/coxeter.hpp"
#include "qpkit/homological.hpp"
#include "qpkit/mesh.hpp"

#include <memory>

namespace qpkit {

// Input of the slice pipeline: an acyclic quiver and the coordinates of the
// preinjective tilting summands, (vertex j, tau power p) meaning tau^p I_j.
struct TiltingInput {
  Quiver quiver;
  std::vector<std::pair<int, int>> summands;
};

// An endomorphism algebra presented on a quiver. Algebra vertices are named
// "1".."k" in reverse admissible order of the objects, so that arrows run
// from low to high names; `vertex_object[u]` is the pipeline object realized
// by vertex u. Modules over it are covariant representations; the arrow u->v
// corresponds to an irreducible map object(v) -> object(u).
struct EndoPresentation {
  BoundAlgebra algebra;
  std::vector<int> vertex_object;
  std::vector<std::vector<std::vector<RatVec>>> arrow_classes;  // [u][v] mesh classes
};

struct SequenceCheck {
  int object = -1;
  std::vector<long> h0_mult, h1_mult;  // multiplicities of the H_k
  std::vector<long> f_x, f_h0, f_h1, f_x_vee;
  bool exact = false;
};

struct PipelineData {
  Quiver q0;
  TranslationQuiver window;
  std::unique_ptr<MeshHoms> homs;

  struct Obj {
    int knit = -1;               // window vertex
    std::vector<long> dim;       // knit dimension vector
    Representation rep;          // as a module over B
    bool projective = false;     // a T summand
    int phi = -1;                // slice index (Q0 vertex)
    int q = -1;                  // tau_B power from the slice
  };
  std::vector<Obj> objects;      // admissible order X_1 .. X_N
  std::vector<int> t_objects;    // indices of the T summands
  std::vector<int> h_objects;    // h_objects[j]: the transported injective I_j
  std::vector<std::vector<int>> orbits;  // orbits[j][q] object index of tau_B^q H_j
  std::vector<int> word;         // 0-based letters phi(1)..phi(N)

  EndoPresentation B;
  bool hereditary_b = false;     // no relations: the GLS setting

  std::vector<int> mbar;         // objects not in add(H)
  std::unique_ptr<EndoPresentation> A;  // End of the Mbar sum; absent when Mbar is empty

  PipelineData() = default;
  PipelineData(const PipelineData&) = delete;
  PipelineData& operator=(const PipelineData&) = delete;

  long hom(int x_obj, int y_obj) const;  // Hom dimension between objects
  int tau_b(int obj) const;              // object index of tau_B, -1 when zero

  // F dimensions per slice vertex.
  std::vector<long> f_wedge(int obj) const;
  std::vector<long> f_simple(int obj) const;
  std::vector<long> f_vee_mod_proj(int obj) const;  // requires obj in Mbar

  SequenceCheck fundamental_sequence(int obj) const;  // requires obj in Mbar

  // Hom_{C_A}(U^, V^): sum over p of M(tau^p U, V) modulo factorizations
  // through add(tau^p H); per-power breakdown in `parts`.
  long tilde_endo_dim(int u_obj, int v_obj, std::vector<long>* parts = nullptr) const;

  long birs_hom_dim(int j_obj, int i_obj) const;

  // New arrows of the tensor algebra between Mbar objects, from the mesh side.
  std::vector<std::vector<long>> tilde_arrow_counts() const;

  // tau acting on mesh classes: Hom(x,y) -> Hom(tau x, tau y).
  RatMat tau_shift_matrix(int x_obj, int y_obj) const;
};

std::unique_ptr<PipelineData> run_pipeline(const TiltingInput& input, long d_max = 12,
                                           long bound = 64);

// Present End(sum of the listed window objects) as a bound quiver algebra;
// used for the concealed algebra B, for End of the Mbar sum, and for
// Auslander algebras of Dynkin quivers (all knitted vertices at once).
EndoPresentation present_endomorphism_algebra(MeshHoms& homs,
                                              const std::vector<int>& object_knits, long d_max);

// The word as 1-based letters; dash-separated when the rank (or any letter)
// needs more than one digit.
std::string word_to_string(const std::vector<int>& word, int rank = 0);

}  // namespace qpkit
