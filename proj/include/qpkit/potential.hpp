#pragma once

#include "qpkit/groebner.hpp"

namespace qpkit {

// Linear combination of cyclic-equivalence classes of cycles. Each class is
// keyed by its rotation-minimal representative under the monomial order;
// coefficients merge after canonicalization.
class Potential {
 public:
  Potential() = default;

  static Path canonical_rotation(const Quiver& q, const Path& cycle);

  // Adds c * (class of `cycle`); the path must be a cycle of length >= 1.
  void add_cycle(const Quiver& q, const Path& cycle, const Rational& c);

  const PathVector::Terms& cycles() const { return cycles_.terms(); }
  bool is_zero() const { return cycles_.is_zero(); }

 private:
  PathVector cycles_;  // keys are rotation-minimal cycles
};

struct QuiverWithPotential {
  Quiver quiver;
  Potential potential;
};

// Sum over all decompositions p = u a v of v u, extended linearly.
PathVector cyclic_derivative(const Quiver& q, const Potential& w, int arrow);

QuotientPresentation jacobian(const QuiverWithPotential& qp, long d_max);

struct FinitenessVerdict {
  Verdict verdict = Verdict::Inconclusive;
  long dim = -1;  // valid iff Finite
  long d_max = 0;
};

FinitenessVerdict is_jacobi_finite(const QuiverWithPotential& qp, long d_max);

struct ConnectingArrow {
  std::string id;
  std::string source;  // vertex of qp.quiver
  std::string target;  // vertex of qp2.quiver
};

// Union of two quivers with potential joined by arrows from the first to the
// second; the potential is W + W'.
QuiverWithPotential triangular_extension(const QuiverWithPotential& qp,
                                         const QuiverWithPotential& qp2,
                                         const std::vector<ConnectingArrow>& connecting);

// Compares dim J(Qbar,Wbar) with the dimension of
// J' (x)_{R'} (R' + kF + R) (x)_R J, expanded vertex-pair-wise.
bool verify_triangular_dim(const QuiverWithPotential& qpbar, const QuiverWithPotential& qp,
                           const QuiverWithPotential& qp2,
                           const std::vector<ConnectingArrow>& connecting, long d_max);

}  // namespace qpkit
