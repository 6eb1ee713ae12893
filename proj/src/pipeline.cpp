#include "qpkit/pipeline.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace qpkit {

namespace {

long hom_window(MeshHoms& homs, int x, int y) { return homs.dim(x, y); }

// Precomposition matrix: Hom(y, z) -> Hom(x, z), f -> f o g for g: x -> y.
RatMat precompose_matrix(MeshHoms& homs, int x, int y, int z, const RatVec& g) {
  const long dyz = homs.dim(y, z), dxz = homs.dim(x, z);
  RatMat m = RatMat::Zero(dxz, dyz);
  for (long i = 0; i < dyz; ++i) {
    RatVec unit = RatVec::Zero(dyz);
    unit(i) = 1;
    m.col(i) = homs.compose(x, y, z, g, unit);
  }
  return m;
}

// Rank of the span of all composites x -> w -> y over the listed midpoints.
long factor_rank(MeshHoms& homs, int x, int y, const std::vector<int>& mids) {
  std::vector<RatVec> span;
  for (int w : mids) {
    const long dxw = homs.dim(x, w), dwy = homs.dim(w, y);
    for (long i = 0; i < dxw; ++i)
      for (long j = 0; j < dwy; ++j) {
        RatVec f = RatVec::Zero(dxw), g = RatVec::Zero(dwy);
        f(i) = 1;
        g(j) = 1;
        RatVec c = homs.compose(x, w, y, f, g);
        if (!c.isZero()) span.push_back(std::move(c));
      }
  }
  if (span.empty()) return 0;
  RatMat m(static_cast<long>(span.size()), span[0].size());
  for (size_t i = 0; i < span.size(); ++i) m.row(static_cast<long>(i)) = span[i].transpose();
  return rank(m);
}


}  // namespace

// Present End(sum of the listed objects) on a quiver: vertices are named in
// reverse admissible order, the arrow u->v realizes an irreducible map
// object(v) -> object(u), and the relations are the kernel of the evaluation
// of paths in the mesh category.
EndoPresentation present_endomorphism_algebra(MeshHoms& homs,
                                              const std::vector<int>& object_knits,
                                              long d_max) {
  const int k = static_cast<int>(object_knits.size());
  // Reverse admissible order: receivers first, so that quiver arrows run from
  // low to high vertex names. Kahn with a stable tie-break on the given order.
  std::vector<int> order;
  {
    std::vector<std::set<int>> preds(k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        if (a != b && hom_window(homs, object_knits[a], object_knits[b]) > 0) preds[a].insert(b);
    std::vector<bool> used(k, false);
    for (int step = 0; step < k; ++step) {
      int pick = -1;
      for (int a = 0; a < k; ++a) {
        if (used[a]) continue;
        bool ready = true;
        for (int b : preds[a]) ready = ready && used[b];
        if (ready) { pick = a; break; }
      }
      if (pick < 0) throw Error("endomorphism presentation: Hom relation has a cycle");
      used[pick] = true;
      order.push_back(pick);
    }
  }

  EndoPresentation out;
  out.vertex_object = order;
  out.arrow_classes.assign(k, std::vector<std::vector<RatVec>>(k));

  // Vertex names are zero-padded so the lexicographic order the Quiver
  // constructor enforces agrees with the numeric one.
  const size_t name_width = std::to_string(k).size();
  auto vertex_name = [&](int u) {
    std::string s = std::to_string(u + 1);
    return std::string(name_width - s.size(), '0') + s;
  };
  std::vector<std::string> vnames;
  for (int u = 0; u < k; ++u) vnames.push_back(vertex_name(u));
  std::vector<Arrow> arrows;
  auto knit_of = [&](int u) { return object_knits[order[u]]; };

  for (int u = 0; u < k; ++u)
    for (int v = 0; v < k; ++v) {
      if (u == v) continue;
      const long d = hom_window(homs, knit_of(v), knit_of(u));
      if (d == 0) continue;
      // rad^2: composites through any third object.
      std::vector<RatVec> span;
      for (int w = 0; w < k; ++w) {
        if (w == u || w == v) continue;
        const long dvw = hom_window(homs, knit_of(v), knit_of(w));
        const long dwu = hom_window(homs, knit_of(w), knit_of(u));
        for (long i = 0; i < dvw; ++i)
          for (long j = 0; j < dwu; ++j) {
            RatVec f = RatVec::Zero(dvw), g = RatVec::Zero(dwu);
            f(i) = 1;
            g(j) = 1;
            RatVec c = homs.compose(knit_of(v), knit_of(w), knit_of(u), f, g);
            if (!c.isZero()) span.push_back(std::move(c));
          }
      }
      RatMat span_m(static_cast<long>(span.size()), d);
      for (size_t i = 0; i < span.size(); ++i) span_m.row(static_cast<long>(i)) = span[i].transpose();
      QuotientSpace rad2(d, span_m);
      for (long t = 0; t < rad2.dim(); ++t) {
        out.arrow_classes[u][v].push_back(rad2.lift(t));
        std::string suffix = std::to_string(t);
        if (suffix.size() < 2) suffix = "0" + suffix;
        arrows.push_back({"a" + vnames[u] + "_" + vnames[v] + "_" + suffix,
                          vnames[u], vnames[v], 0});
      }
    }

  Quiver qb(vnames, arrows);

  // Kernel of the path evaluation: relations of the algebra.
  // eval(path u -> v) lives in Hom(object(v), object(u)).
  struct Eval {
    Path path;
    RatVec value;
  };
  std::vector<PathVector> relations;
  // Class index of an arrow within its (u,v) group; quiver arrows are sorted
  // by id and the padded suffix keeps that order aligned with push order.
  auto class_of = [&](int a) {
    long cls = 0;
    for (int a2 = 0; a2 < a; ++a2)
      if (qb.source_of(a2) == qb.source_of(a) && qb.target_of(a2) == qb.target_of(a)) ++cls;
    return cls;
  };
  auto arrow_value = [&](int a) {
    const int u = qb.source_of(a), v = qb.target_of(a);
    return homs.space(knit_of(v), knit_of(u)).project(out.arrow_classes[u][v][class_of(a)]);
  };
  for (int u = 0; u < k; ++u) {
    // Grow paths from u by length; evaluation by mesh composition.
    std::vector<Eval> frontier;
    for (int a = 0; a < qb.num_arrows(); ++a) {
      if (qb.source_of(a) != u) continue;
      frontier.push_back({Path{u, {a}}, arrow_value(a)});
    }
    std::vector<Eval> all = frontier;
    int guard = 0;
    while (!frontier.empty()) {
      if (++guard > 64) throw Error("endomorphism presentation: path growth did not stop");
      std::vector<Eval> next;
      for (const Eval& e : frontier) {
        if (e.value.isZero()) continue;  // longer composites stay zero
        int w = qb.target_of(e.path.arrows.back());
        for (int a = 0; a < qb.num_arrows(); ++a) {
          if (qb.source_of(a) != w) continue;
          int v = qb.target_of(a);
          // composite object(v) -> object(w) -> ... -> object(u)
          RatVec val = homs.compose(knit_of(v), knit_of(w), knit_of(u), arrow_value(a), e.value);
          Eval e2{e.path, val};
          e2.path.arrows.push_back(a);
          next.push_back(e2);
        }
      }
      for (const Eval& e : next) all.push_back(e);
      frontier = std::move(next);
    }
    // Kernel per target vertex v.
    for (int v = 0; v < k; ++v) {
      std::vector<const Eval*> here;
      for (const Eval& e : all)
        if (qb.target_of(e.path.arrows.back()) == v && e.path.arrows.size() >= 1)
          here.push_back(&e);
      if (here.empty()) continue;
      const long hdim = hom_window(homs, knit_of(v), knit_of(u));
      RatMat m(hdim, static_cast<long>(here.size()));
      for (size_t i = 0; i < here.size(); ++i) m.col(static_cast<long>(i)) = here[i]->value;
      RatMat ker = kernel_basis(m);
      for (long c = 0; c < ker.cols(); ++c) {
        PathVector rel;
        for (long i = 0; i < ker.rows(); ++i)
          if (ker(i, c) != 0) rel.add_term(here[i]->path, ker(i, c));
        if (!rel.is_zero()) relations.push_back(std::move(rel));
      }
    }
  }

  out.algebra = BoundAlgebra::build(qb, relations, d_max);

  // Oracle: dimensions of the presented algebra match the mesh Hom spaces.
  for (int u = 0; u < k; ++u)
    for (int v = 0; v < k; ++v) {
      long expect = u == v ? 1 : hom_window(homs, knit_of(v), knit_of(u));
      if (static_cast<long>(out.algebra.basis_at(u, v).size()) != expect)
        throw Error("endomorphism presentation: dimension mismatch against mesh Homs");
    }
  return out;
}

long PipelineData::hom(int x_obj, int y_obj) const {
  return homs->dim(objects[x_obj].knit, objects[y_obj].knit);
}

int PipelineData::tau_b(int obj) const {
  if (objects[obj].projective) return -1;
  const int j = objects[obj].phi, q = objects[obj].q;
  return orbits[j][q + 1];
}

std::vector<long> PipelineData::f_wedge(int obj) const {
  const int n = q0.num_vertices();
  std::vector<long> f(n, 0);
  for (int j = 0; j < n; ++j)
    for (int y : orbits[j]) f[j] += homs->dim(objects[y].knit, objects[obj].knit);
  return f;
}

std::vector<long> PipelineData::f_simple(int obj) const {
  std::vector<long> f(q0.num_vertices(), 0);
  f[objects[obj].phi] = 1;
  return f;
}

std::vector<long> PipelineData::f_vee_mod_proj(int obj) const {
  const int n = q0.num_vertices();
  std::vector<long> f(n, 0);
  std::vector<int> h_knits;
  for (int j = 0; j < n; ++j) h_knits.push_back(objects[h_objects[j]].knit);
  for (int j = 0; j < n; ++j)
    for (size_t q = 1; q < orbits[j].size(); ++q) {
      int y = orbits[j][q];
      long d = homs->dim(objects[obj].knit, objects[y].knit);
      d -= factor_rank(*homs, objects[obj].knit, objects[y].knit, h_knits);
      f[j] += d;
    }
  return f;
}

SequenceCheck PipelineData::fundamental_sequence(int obj) const {
  const int n = q0.num_vertices();
  SequenceCheck s;
  s.object = obj;
  if (objects[obj].q == 0) throw Error("fundamental_sequence: object lies in add(H)");

  // Minimal left add(H)-approximation: multiplicity of H_k is the corank of
  // the composites through the other slice summands.
  s.h0_mult.assign(n, 0);
  for (int k = 0; k < n; ++k) {
    std::vector<int> others;
    for (int k2 = 0; k2 < n; ++k2)
      if (k2 != k) others.push_back(objects[h_objects[k2]].knit);
    long d = homs->dim(objects[obj].knit, objects[h_objects[k]].knit);
    s.h0_mult[k] = d - factor_rank(*homs, objects[obj].knit, objects[h_objects[k]].knit, others);
  }
  // dim H1 = dim H0 - dim X, solved against the slice dimension vectors.
  RatMat hdims(n, n);
  RatVec rhs(n);
  for (int i = 0; i < n; ++i) {
    for (int kk = 0; kk < n; ++kk) hdims(i, kk) = objects[h_objects[kk]].dim[i];
    long h0 = 0;
    for (int kk = 0; kk < n; ++kk) h0 += s.h0_mult[kk] * objects[h_objects[kk]].dim[i];
    rhs(i) = h0 - objects[obj].dim[i];
  }
  auto b = solve(hdims, rhs);
  if (!b) throw Error("fundamental_sequence: cokernel is not a slice module");
  s.h1_mult.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    if ((*b)(i).get_den() != 1 || (*b)(i) < 0)
      throw Error("fundamental_sequence: non-integral slice multiplicity");
    s.h1_mult[i] = to_long((*b)(i).get_num());
  }

  s.f_x = f_wedge(obj);
  s.f_h0.assign(n, 0);
  s.f_h1.assign(n, 0);
  for (int k = 0; k < n; ++k) {
    std::vector<long> fh = f_wedge(h_objects[k]);
    for (int i = 0; i < n; ++i) {
      s.f_h0[i] += s.h0_mult[k] * fh[i];
      s.f_h1[i] += s.h1_mult[k] * fh[i];
    }
  }
  s.f_x_vee = f_vee_mod_proj(obj);
  s.exact = true;
  for (int i = 0; i < n; ++i)
    s.exact = s.exact && (s.f_x[i] - s.f_h0[i] + s.f_h1[i] - s.f_x_vee[i] == 0);
  return s;
}

long PipelineData::tilde_endo_dim(int u_obj, int v_obj, std::vector<long>* parts) const {
  const int n = q0.num_vertices();
  long total = 0;
  if (parts) parts->clear();
  int current = u_obj;
  for (int p = 0;; ++p) {
    std::vector<int> through;
    for (int k = 0; k < n; ++k)
      if (p < static_cast<int>(orbits[k].size())) through.push_back(objects[orbits[k][p]].knit);
    long d = homs->dim(objects[current].knit, objects[v_obj].knit) -
             factor_rank(*homs, objects[current].knit, objects[v_obj].knit, through);
    total += d;
    if (parts) parts->push_back(d);
    int next = tau_b(current);
    if (next < 0) break;
    current = next;
  }
  return total;
}

long PipelineData::birs_hom_dim(int j_obj, int i_obj) const {
  long total = 0;
  int current = j_obj;
  for (;;) {
    total += homs->dim(objects[current].knit, objects[i_obj].knit);
    int next = tau_b(current);
    if (next < 0) break;
    current = next;
  }
  return total;
}

RatMat PipelineData::tau_shift_matrix(int x_obj, int y_obj) const {
  const int x = objects[x_obj].knit, y = objects[y_obj].knit;
  const int tx = window.tau(x), ty = window.tau(y);
  if (tx < 0 || ty < 0) throw Error("tau_shift_matrix: translate leaves the window");
  auto shift_edge = [&](int e) {
    const auto& ed = window.edges[e];
    int from = window.tau(ed.from), to = window.tau(ed.to);
    if (from < 0 || to < 0) throw Error("tau_shift_matrix: edge translate leaves the window");
    for (size_t e2 = 0; e2 < window.edges.size(); ++e2) {
      const auto& cand = window.edges[e2];
      if (cand.from == from && cand.to == to && cand.base_arrow == ed.base_arrow &&
          cand.translate == ed.translate)
        return static_cast<int>(e2);
    }
    throw Error("tau_shift_matrix: shifted edge not found");
  };
  const auto& ps = homs->paths(x, y);
  const QuotientSpace& src = homs->space(x, y);
  RatMat m = RatMat::Zero(homs->dim(tx, ty), src.dim());
  for (long c = 0; c < src.dim(); ++c) {
    RatVec lifted = src.lift(c);
    RatVec out;
    bool first = true;
    for (long pi = 0; pi < lifted.size(); ++pi) {
      if (lifted(pi) == 0) continue;
      std::vector<int> shifted;
      for (int e : ps[pi]) shifted.push_back(shift_edge(e));
      RatVec cls = homs->path_class(tx, ty, shifted);
      if (first) {
        out = lifted(pi) * cls;
        first = false;
      } else {
        out += lifted(pi) * cls;
      }
    }
    if (first) out = RatVec::Zero(homs->dim(tx, ty));
    m.col(c) = out;
  }
  return m;
}

std::vector<std::vector<long>> PipelineData::tilde_arrow_counts() const {
  const int nbar = static_cast<int>(mbar.size());
  const int n = q0.num_vertices();
  // The degree-one layer X(U,V) = M(tau U, V)/[add tau H] with its quotient
  // structure, then generators modulo rad A . X + X . rad A.
  std::vector<int> tau_h_knits;
  for (int k = 0; k < n; ++k)
    if (orbits[k].size() > 1) tau_h_knits.push_back(objects[orbits[k][1]].knit);

  struct Layer {
    bool alive = false;
    QuotientSpace q;  // quotient of Hom(tau U, V) coords by the factor span
  };
  std::vector<std::vector<Layer>> layer(nbar, std::vector<Layer>(nbar));
  auto factor_span_rows = [&](int x, int y) {
    std::vector<RatVec> span;
    for (int w : tau_h_knits) {
      const long dxw = homs->dim(x, w), dwy = homs->dim(w, y);
      for (long i = 0; i < dxw; ++i)
        for (long j = 0; j < dwy; ++j) {
          RatVec f = RatVec::Zero(dxw), g = RatVec::Zero(dwy);
          f(i) = 1;
          g(j) = 1;
          RatVec c = homs->compose(x, w, y, f, g);
          if (!c.isZero()) span.push_back(std::move(c));
        }
    }
    RatMat m(static_cast<long>(span.size()), homs->dim(x, y));
    for (size_t i = 0; i < span.size(); ++i) m.row(static_cast<long>(i)) = span[i].transpose();
    return m;
  };
  for (int a = 0; a < nbar; ++a) {
    int ta = tau_b(mbar[a]);
    if (ta < 0) continue;
    for (int b = 0; b < nbar; ++b) {
      int x = objects[ta].knit, y = objects[mbar[b]].knit;
      layer[a][b].alive = true;
      layer[a][b].q = QuotientSpace(homs->dim(x, y), factor_span_rows(x, y));
    }
  }

  // Note: the layer quotients live on mesh Hom coordinates, so composition
  // results can be projected into them directly.
  std::vector<std::vector<long>> counts(nbar, std::vector<long>(nbar, 0));
  for (int a = 0; a < nbar; ++a) {
    const int ta = tau_b(mbar[a]);
    if (ta < 0) continue;
    for (int b = 0; b < nbar; ++b) {
      const QuotientSpace& quo = layer[a][b].q;
      if (quo.dim() == 0) continue;
      std::vector<RatVec> span;
      for (int w = 0; w < nbar; ++w) {
        // rad A . X: f in Hom(U, W) with U != W, xi in X(W, V): xi o tau(f).
        if (w != a) {
          const int tw = tau_b(mbar[w]);
          if (tw >= 0 && layer[w][b].alive &&
              homs->dim(objects[mbar[a]].knit, objects[mbar[w]].knit) > 0) {
            RatMat shift = tau_shift_matrix(mbar[a], mbar[w]);
            for (long i = 0; i < shift.cols(); ++i) {
              RatVec tf = shift.col(i);  // class in Hom(tau U, tau W)
              for (long j = 0; j < layer[w][b].q.dim(); ++j) {
                RatVec xi = layer[w][b].q.lift(j);  // class in Hom(tau W, V)
                RatVec comp = homs->compose(objects[ta].knit, objects[tw].knit,
                                            objects[mbar[b]].knit, tf, xi);
                RatVec proj = quo.project(comp);
                if (!proj.isZero()) span.push_back(std::move(proj));
              }
            }
          }
        }
        // X . rad A: xi in X(U, W), g in Hom(W, V) with W != V.
        if (w != b && layer[a][w].alive && layer[a][w].q.dim() > 0) {
          const long dg = homs->dim(objects[mbar[w]].knit, objects[mbar[b]].knit);
          for (long j = 0; j < layer[a][w].q.dim(); ++j) {
            RatVec xi = layer[a][w].q.lift(j);  // class in Hom(tau U, W)
            for (long i = 0; i < dg; ++i) {
              RatVec g = RatVec::Zero(dg);
              g(i) = 1;
              RatVec comp = homs->compose(objects[ta].knit, objects[mbar[w]].knit,
                                          objects[mbar[b]].knit, xi, g);
              RatVec proj = quo.project(comp);
              if (!proj.isZero()) span.push_back(std::move(proj));
            }
          }
        }
      }
      RatMat m(static_cast<long>(span.size()), quo.dim());
      for (size_t i = 0; i < span.size(); ++i) m.row(static_cast<long>(i)) = span[i].transpose();
      counts[a][b] = quo.dim() - rank(m);
    }
  }
  return counts;
}

std::string word_to_string(const std::vector<int>& word, int rank) {
  std::string s;
  bool wide = rank > 9;
  for (int l : word) wide = wide || l > 8;
  for (size_t i = 0; i < word.size(); ++i) {
    if (wide && i) s += "-";
    s += std::to_string(word[i] + 1);
  }
  return s;
}

std::unique_ptr<PipelineData> run_pipeline(const TiltingInput& input, long d_max, long bound) {
  auto data = std::make_unique<PipelineData>();
  PipelineData& P = *data;
  P.q0 = input.quiver;
  const Quiver& q = P.q0;
  const int n = q.num_vertices();

  if (static_cast<int>(input.summands.size()) != n)
    throw Error("pipeline: a tilting module needs exactly one summand per vertex");
  int max_p = 0;
  {
    std::set<std::pair<int, int>> seen;
    for (auto [j, p] : input.summands) {
      if (j < 0 || j >= n || p < 0) throw Error("pipeline: bad summand coordinates");
      if (!seen.insert({j, p}).second) throw Error("pipeline: repeated summand");
      max_p = std::max(max_p, p);
    }
  }

  P.window = knit_preinjective(q, max_p + 1);
  P.homs = std::make_unique<MeshHoms>(P.window);

  std::vector<int> t_knits;
  for (auto [j, p] : input.summands) {
    int v = P.window.index_of(j, p);
    if (v < 0) throw Error("pipeline: summand tau power beyond the end of its orbit");
    t_knits.push_back(v);
  }

  // The summand dimension vectors must be linearly independent; with rigidity
  // this pins the enumeration horizon.
  {
    RatMat dims(n, n);
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < n; ++c) dims(i, c) = P.window.vertices[t_knits[c]].dim[i];
    if (rank(dims) != n) throw Error("pipeline: summand dimension vectors are dependent");
  }

  auto hom_dims_rule = [&](int x, int y) -> long {
    // Hom(X, Y) by the direction rule and Euler pairing on knit coordinates.
    const auto& vx = P.window.vertices[x];
    const auto& vy = P.window.vertices[y];
    if (vy.p > vx.p) return 0;
    return euler_form(q, vy.dim, vx.dim);
  };
  auto ext1 = [&](int tx, int y) -> long {
    // Ext^1(T, Y) = dim Hom(Y, tau T).
    const auto& vt = P.window.vertices[tx];
    int tau_t = P.window.index_of(vt.j, vt.p + 1);
    if (tau_t < 0) return 0;  // tau T = 0
    return hom_dims_rule(y, tau_t);
  };

  for (int a : t_knits)
    for (int b : t_knits)
      if (ext1(a, b) != 0) throw Error("pipeline: the given module is not rigid");

  // Enumerate M: all preinjectives up to level max_p with Ext^1(T, X) = 0,
  // and check the level above is empty.
  std::vector<int> m_knits;
  for (int v = 0; v < static_cast<int>(P.window.vertices.size()); ++v) {
    bool in = true;
    for (int t : t_knits) in = in && ext1(t, v) == 0;
    if (!in) continue;
    if (P.window.vertices[v].p <= max_p)
      m_knits.push_back(v);
    else
      throw Error("pipeline: enumeration horizon violated (object beyond max power)");
  }

  // Provisional order for the construction of B and the modules.
  std::sort(m_knits.begin(), m_knits.end(), [&](int a, int b) {
    const auto& va = P.window.vertices[a];
    const auto& vb = P.window.vertices[b];
    if (va.p != vb.p) return va.p > vb.p;
    return va.j < vb.j;
  });

  P.B = present_endomorphism_algebra(*P.homs, t_knits, d_max);
  P.hereditary_b = P.B.algebra.relations().empty();
  const BoundAlgebra& B = P.B.algebra;
  const int nb = B.num_vertices();

  // Modules Hom(T, X) as covariant representations of the B quiver.
  auto b_module = [&](int x_knit) {
    Representation M;
    M.dims.assign(nb, 0);
    auto knit_of = [&](int u) { return t_knits[P.B.vertex_object[u]]; };
    for (int u = 0; u < nb; ++u) M.dims[u] = P.homs->dim(knit_of(u), x_knit);
    for (int a = 0; a < B.quiver().num_arrows(); ++a) {
      const int u = B.quiver().source_of(a), v = B.quiver().target_of(a);
      long cls = 0;
      for (int a2 = 0; a2 < a; ++a2)
        if (B.quiver().source_of(a2) == u && B.quiver().target_of(a2) == v) ++cls;
      RatVec g = P.homs->space(knit_of(v), knit_of(u)).project(P.B.arrow_classes[u][v][cls]);
      M.maps.push_back(precompose_matrix(*P.homs, knit_of(v), knit_of(u), x_knit, g));
    }

    return M;
  };

  std::vector<PipelineData::Obj> objs;
  for (int v : m_knits) {
    PipelineData::Obj o;
    o.knit = v;
    o.dim = P.window.vertices[v].dim;
    o.rep = b_module(v);
    validate_representation(B, o.rep);
    o.projective = std::find(t_knits.begin(), t_knits.end(), v) != t_knits.end();
    objs.push_back(std::move(o));
  }

  // tau_B module-theoretically, matched back into M.
  auto find_object = [&](const Representation& R) -> int {
    for (size_t i = 0; i < objs.size(); ++i) {
      if (objs[i].rep.dims != R.dims) continue;
      if (directed_iso(B, objs[i].rep, R)) return static_cast<int>(i);
    }
    return -1;
  };
  std::vector<int> tau_of(objs.size(), -1);
  for (size_t i = 0; i < objs.size(); ++i) {
    if (objs[i].projective) continue;
    Representation t = ar_translate(B, objs[i].rep);
    int target = find_object(t);
    if (target < 0)
      throw Error("pipeline: tau_B left the subcategory M (closure violated)");
    tau_of[i] = target;
  }

  // H: the transported injective slice, orbit intervals, phi and q.
  std::vector<int> h_idx(n, -1);
  for (int j = 0; j < n; ++j) {
    int knit = P.window.index_of(j, 0);
    for (size_t i = 0; i < objs.size(); ++i)
      if (objs[i].knit == knit) h_idx[j] = static_cast<int>(i);
    if (h_idx[j] < 0) throw Error("pipeline: transported injective missing from M");
  }
  std::vector<std::vector<int>> orbits(n);
  std::vector<bool> seen(objs.size(), false);
  for (int j = 0; j < n; ++j) {
    int cur = h_idx[j];
    for (;;) {
      if (seen[cur]) throw Error("pipeline: orbit structure violated");
      seen[cur] = true;
      objs[cur].phi = j;
      objs[cur].q = static_cast<int>(orbits[j].size());
      orbits[j].push_back(cur);
      if (tau_of[cur] < 0) break;
      cur = tau_of[cur];
    }
  }
  for (bool s : seen)
    if (!s) throw Error("pipeline: an object of M lies on no tau_B orbit of the slice");

  // Final admissible order: Hom-reachability topological sort with the
  // tie-break (q descending, slice index ascending).
  const int N = static_cast<int>(objs.size());
  std::vector<std::set<int>> preds(N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      if (a != b && P.homs->dim(objs[a].knit, objs[b].knit) > 0) preds[b].insert(a);
  std::vector<int> order;
  std::vector<bool> used(N, false);
  for (int step = 0; step < N; ++step) {
    int pick = -1;
    for (int cand = 0; cand < N; ++cand) {
      if (used[cand]) continue;
      bool ready = true;
      for (int b : preds[cand]) ready = ready && used[b];
      if (!ready) continue;
      if (pick < 0 || objs[cand].q > objs[pick].q ||
          (objs[cand].q == objs[pick].q && objs[cand].phi < objs[pick].phi))
        pick = cand;
    }
    if (pick < 0) throw Error("pipeline: Hom relation between objects is cyclic");
    used[pick] = true;
    order.push_back(pick);
  }
  std::vector<int> new_index(N);
  for (int i = 0; i < N; ++i) new_index[order[i]] = i;
  std::vector<PipelineData::Obj> reordered;
  for (int i = 0; i < N; ++i) reordered.push_back(std::move(objs[order[i]]));
  P.objects = std::move(reordered);
  for (int j = 0; j < n; ++j) {
    P.h_objects.push_back(new_index[h_idx[j]]);
    std::vector<int> orbit;
    for (int o : orbits[j]) orbit.push_back(new_index[o]);
    P.orbits.push_back(std::move(orbit));
  }
  for (int t : t_knits)
    for (int i = 0; i < N; ++i)
      if (P.objects[i].knit == t) P.t_objects.push_back(i);

  for (int i = 0; i < N; ++i) P.word.push_back(P.objects[i].phi);

  for (int i = 0; i < N; ++i)
    if (P.objects[i].q > 0) P.mbar.push_back(i);

  if (!P.mbar.empty()) {
    std::vector<int> mbar_knits;
    for (int i : P.mbar) mbar_knits.push_back(P.objects[i].knit);
    P.A = std::make_unique<EndoPresentation>(
        present_endomorphism_algebra(*P.homs, mbar_knits, d_max));
  }
  (void)bound;
  return data;
}

}  // namespace qpkit
