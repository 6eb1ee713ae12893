#include "qpkit/potential.hpp"

#include <algorithm>

namespace qpkit {

Path Potential::canonical_rotation(const Quiver& q, const Path& cycle) {
  if (cycle.is_vertex() || path_source(q, cycle) != path_target(q, cycle))
    throw Error("potential term must be a cycle of length >= 1");
  PathOrder less;
  Path best = cycle;
  Path rot = cycle;
  for (int k = 1; k < cycle.length(); ++k) {
    std::rotate(rot.arrows.begin(), rot.arrows.begin() + 1, rot.arrows.end());
    rot.source = q.source_of(rot.arrows.front());
    if (less(rot, best)) best = rot;
  }
  return best;
}

void Potential::add_cycle(const Quiver& q, const Path& cycle, const Rational& c) {
  if (!path_composable(q, cycle)) throw Error("potential term is not a composable path");
  cycles_.add_term(canonical_rotation(q, cycle), c);
}

PathVector cyclic_derivative(const Quiver& q, const Potential& w, int arrow) {
  if (arrow < 0 || arrow >= q.num_arrows()) throw Error("cyclic_derivative: unknown arrow");
  PathVector out;
  for (const auto& [cycle, coeff] : w.cycles()) {
    for (int k = 0; k < cycle.length(); ++k) {
      if (cycle.arrows[k] != arrow) continue;
      // cycle = u a v with a at position k; contribute v u.
      Path vu;
      vu.source = q.target_of(arrow);
      vu.arrows.assign(cycle.arrows.begin() + k + 1, cycle.arrows.end());
      vu.arrows.insert(vu.arrows.end(), cycle.arrows.begin(), cycle.arrows.begin() + k);
      out.add_term(vu, coeff);
    }
  }
  return out;
}

QuotientPresentation jacobian(const QuiverWithPotential& qp, long d_max) {
  std::vector<PathVector> gens;
  for (int a = 0; a < qp.quiver.num_arrows(); ++a) {
    PathVector d = cyclic_derivative(qp.quiver, qp.potential, a);
    if (!d.is_zero()) gens.push_back(std::move(d));
  }
  return groebner(qp.quiver, std::move(gens), d_max);
}

FinitenessVerdict is_jacobi_finite(const QuiverWithPotential& qp, long d_max) {
  QuotientDims d = quotient_dims(jacobian(qp, d_max));
  FinitenessVerdict v;
  v.verdict = d.verdict;
  v.dim = d.total;
  v.d_max = d_max;
  return v;
}

QuiverWithPotential triangular_extension(const QuiverWithPotential& qp,
                                         const QuiverWithPotential& qp2,
                                         const std::vector<ConnectingArrow>& connecting) {
  for (const auto& v : qp.quiver.vertices())
    for (const auto& w : qp2.quiver.vertices())
      if (v == w) throw Error("triangular_extension: vertex sets overlap at '" + v + "'");

  std::vector<std::string> vertices = qp.quiver.vertices();
  vertices.insert(vertices.end(), qp2.quiver.vertices().begin(), qp2.quiver.vertices().end());
  std::vector<Arrow> arrows = qp.quiver.arrows();
  arrows.insert(arrows.end(), qp2.quiver.arrows().begin(), qp2.quiver.arrows().end());

  auto in = [](const Quiver& q, const std::string& v) {
    for (const auto& u : q.vertices())
      if (u == v) return true;
    return false;
  };
  for (const auto& c : connecting) {
    if (!in(qp.quiver, c.source) || !in(qp2.quiver, c.target))
      throw Error("triangular_extension: connector '" + c.id +
                  "' must run from the first quiver to the second");
    arrows.push_back({c.id, c.source, c.target, 0});
  }

  Quiver qbar(std::move(vertices), std::move(arrows));
  QuiverWithPotential out{qbar, {}};
  auto transport = [&](const Quiver& from, const Potential& w) {
    for (const auto& [cycle, coeff] : w.cycles()) {
      Path p;
      p.source = qbar.vertex_index(from.vertex(cycle.source));
      for (int a : cycle.arrows) p.arrows.push_back(qbar.arrow_index(from.arrow(a).id));
      out.potential.add_cycle(qbar, p, coeff);
    }
  };
  transport(qp.quiver, qp.potential);
  transport(qp2.quiver, qp2.potential);
  return out;
}

bool verify_triangular_dim(const QuiverWithPotential& qpbar, const QuiverWithPotential& qp,
                           const QuiverWithPotential& qp2,
                           const std::vector<ConnectingArrow>& connecting, long d_max) {
  QuotientDims dbar = quotient_dims(jacobian(qpbar, d_max));
  QuotientDims d1 = quotient_dims(jacobian(qp, d_max));
  QuotientDims d2 = quotient_dims(jacobian(qp2, d_max));
  if (dbar.verdict != Verdict::Finite || d1.verdict != Verdict::Finite ||
      d2.verdict != Verdict::Finite)
    throw Error("verify_triangular_dim: all three Jacobian algebras must be certified finite");

  const Quiver &Q = qp.quiver, &Q2 = qp2.quiver, &Qb = qpbar.quiver;
  auto bar_index = [&](const Quiver& from, int v) { return Qb.vertex_index(from.vertex(v)); };

  // Expected dims of e_u Jbar e_v from the tensor decomposition over the
  // semisimple vertex rings: paths stay in one factor or cross one connector.
  const int nb = Qb.num_vertices();
  std::vector<std::vector<long>> expected(nb, std::vector<long>(nb, 0));
  for (int u = 0; u < Q.num_vertices(); ++u)
    for (int v = 0; v < Q.num_vertices(); ++v)
      expected[bar_index(Q, u)][bar_index(Q, v)] = d1.by_vertex_pair[u][v];
  for (int u = 0; u < Q2.num_vertices(); ++u)
    for (int v = 0; v < Q2.num_vertices(); ++v)
      expected[bar_index(Q2, u)][bar_index(Q2, v)] = d2.by_vertex_pair[u][v];
  for (int u = 0; u < Q.num_vertices(); ++u)
    for (int v = 0; v < Q2.num_vertices(); ++v) {
      long total = 0;
      for (const auto& c : connecting)
        total += d1.by_vertex_pair[u][Q.vertex_index(c.source)] *
                 d2.by_vertex_pair[Q2.vertex_index(c.target)][v];
      expected[bar_index(Q, u)][bar_index(Q2, v)] = total;
    }

  return dbar.by_vertex_pair == expected;
}

}  // namespace qpkit
