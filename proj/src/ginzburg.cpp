#include "qpkit/ginzburg.hpp"

namespace qpkit {

GinzburgPresentation ginzburg(const QuiverWithPotential& qp) {
  const Quiver& q = qp.quiver;
  if (q.is_graded()) throw Error("ginzburg: input quiver must be ungraded");

  std::vector<Arrow> arrows = q.arrows();
  for (const Arrow& a : q.arrows()) arrows.push_back({a.id + "*", a.target, a.source, -1});
  for (const auto& v : q.vertices()) arrows.push_back({"t_" + v, v, v, -2});
  Quiver ghat(q.vertices(), std::move(arrows));

  GinzburgPresentation out;
  out.graded_quiver = ghat;

  auto lift = [&](const PathVector& v) {
    PathVector w;
    for (const auto& [p, c] : v.terms()) {
      Path lifted;
      lifted.source = ghat.vertex_index(q.vertex(p.source));
      for (int a : p.arrows) lifted.arrows.push_back(ghat.arrow_index(q.arrow(a).id));
      w.add_term(lifted, c);
    }
    return w;
  };

  for (const Arrow& a : q.arrows()) {
    out.diff[a.id] = PathVector::zero();
    out.diff[a.id + "*"] = lift(cyclic_derivative(q, qp.potential, q.arrow_index(a.id)));
  }
  for (int v = 0; v < q.num_vertices(); ++v) {
    PathVector dt;
    for (const Arrow& a : q.arrows()) {
      int ai = ghat.arrow_index(a.id);
      int si = ghat.arrow_index(a.id + "*");
      // e_v [a, a*] e_v keeps a a* when v = s(a) and -a* a when v = t(a).
      if (q.vertex_index(a.source) == v) dt.add_term(Path{ghat.source_of(ai), {ai, si}}, 1);
      if (q.vertex_index(a.target) == v) dt.add_term(Path{ghat.source_of(si), {si, ai}}, -1);
    }
    out.diff["t_" + q.vertex(v)] = std::move(dt);
  }
  return out;
}

long path_degree(const Quiver& graded, const Path& p) {
  long d = 0;
  for (int a : p.arrows) d += graded.arrow(a).degree;
  return d;
}

PathVector apply_differential(const GinzburgPresentation& g, const PathVector& v) {
  const Quiver& ghat = g.graded_quiver;
  PathVector out;
  for (const auto& [p, c] : v.terms()) {
    long sign_deg = 0;
    for (int k = 0; k < p.length(); ++k) {
      const Arrow& ak = ghat.arrow(p.arrows[k]);
      auto it = g.diff.find(ak.id);
      if (it == g.diff.end()) throw Error("apply_differential: unknown generator " + ak.id);
      if (!it->second.is_zero()) {
        Path u = {p.source, std::vector<int>(p.arrows.begin(), p.arrows.begin() + k)};
        Path w = {ghat.target_of(p.arrows[k]),
                  std::vector<int>(p.arrows.begin() + k + 1, p.arrows.end())};
        Rational s = (sign_deg % 2 == 0) ? c : -c;
        PathVector term = multiply(ghat, PathVector::monomial(ghat, u),
                                   multiply(ghat, it->second, PathVector::monomial(ghat, w)));
        out += s * term;
      }
      sign_deg += ak.degree;
    }
  }
  return out;
}

bool verify_differential(const GinzburgPresentation& g) {
  for (const auto& [id, dv] : g.diff) {
    // d raises degree by one on every generator.
    const Quiver& ghat = g.graded_quiver;
    long gen_deg = ghat.arrow(ghat.arrow_index(id)).degree;
    for (const auto& [p, c] : dv.terms()) {
      (void)c;
      if (path_degree(ghat, p) != gen_deg + 1) return false;
    }
    if (!apply_differential(g, dv).is_zero()) return false;
  }
  return true;
}

}  // namespace qpkit
