#pragma once

#include "qpkit/potential.hpp"

#include <map>

namespace qpkit {

// The graded quiver of (Q,W) together with the values of the differential on
// generators: original arrows in degree 0 (d a = 0), reversed arrows a* in
// degree -1 (d a* = the cyclic derivative), loops t_i in degree -2
// (d t_i = e_i (sum_a [a,a*]) e_i). d extends by the signed Leibniz rule.
struct GinzburgPresentation {
  Quiver graded_quiver;                    // arrows carry their degrees
  std::map<std::string, PathVector> diff;  // arrow id of the graded quiver -> d(arrow)
};

GinzburgPresentation ginzburg(const QuiverWithPotential& qp);

// Extends d to an arbitrary homogeneous combination by the Leibniz rule
// d(uv) = (du)v + (-1)^p u (dv).
PathVector apply_differential(const GinzburgPresentation& g, const PathVector& v);

long path_degree(const Quiver& graded, const Path& p);

// d(d(x)) == 0 for every generator x.
bool verify_differential(const GinzburgPresentation& g);

}  // namespace qpkit
