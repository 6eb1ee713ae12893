#include "qpkit/mesh.hpp"

#include <algorithm>

namespace qpkit {

long euler_form(const Quiver& q, const std::vector<long>& x, const std::vector<long>& y) {
  if (static_cast<int>(x.size()) != q.num_vertices() ||
      static_cast<int>(y.size()) != q.num_vertices())
    throw Error("euler_form: dimension vector size mismatch");
  long v = 0;
  for (int i = 0; i < q.num_vertices(); ++i) v += x[i] * y[i];
  for (int a = 0; a < q.num_arrows(); ++a) v -= x[q.source_of(a)] * y[q.target_of(a)];
  return v;
}

std::vector<long> injective_dims(const Quiver& q, int j) {
  auto counts = path_count_matrix(q);
  std::vector<long> d(q.num_vertices());
  for (int i = 0; i < q.num_vertices(); ++i) d[i] = to_long(counts[j][i]);
  return d;
}

namespace {

RatMat euler_matrix(const Quiver& q) {
  const int n = q.num_vertices();
  RatMat e = RatMat::Identity(n, n);
  for (int a = 0; a < q.num_arrows(); ++a) e(q.source_of(a), q.target_of(a)) -= 1;
  return e;
}

std::vector<long> apply_integer_matrix(const RatMat& m, const std::vector<long>& x) {
  RatVec v(x.size());
  for (size_t i = 0; i < x.size(); ++i) v(static_cast<long>(i)) = x[i];
  RatVec w = m * v;
  std::vector<long> out(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    Rational c = w(static_cast<long>(i));
    if (c.get_den() != 1) throw Error("coxeter translate produced a non-integer entry");
    out[i] = to_long(c.get_num());
  }
  return out;
}

}  // namespace

std::vector<long> coxeter_translate_dims(const Quiver& q, const std::vector<long>& x) {
  if (!q.is_acyclic()) throw Error("coxeter_translate_dims: quiver must be acyclic");
  RatMat e = euler_matrix(q);
  RatMat e_inv = *solve_many(e, identity(q.num_vertices()));
  RatMat phi = -(e_inv.transpose() * e).eval();
  return apply_integer_matrix(phi, x);
}

std::vector<long> coxeter_translate_inv_dims(const Quiver& q, const std::vector<long>& x) {
  if (!q.is_acyclic()) throw Error("coxeter_translate_inv_dims: quiver must be acyclic");
  RatMat e = euler_matrix(q);
  RatMat e_inv = *solve_many(e, identity(q.num_vertices()));
  RatMat phi_inv = -(e_inv * e.transpose()).eval();
  return apply_integer_matrix(phi_inv, x);
}

int TranslationQuiver::index_of(int j, int p) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].j == j && vertices[i].p == p) return static_cast<int>(i);
  return -1;
}

int TranslationQuiver::tau(int v) const { return index_of(vertices[v].j, vertices[v].p + 1); }

int TranslationQuiver::tau_inv(int v) const { return index_of(vertices[v].j, vertices[v].p - 1); }

std::vector<int> TranslationQuiver::edges_from(int v) const {
  std::vector<int> out;
  for (size_t e = 0; e < edges.size(); ++e)
    if (edges[e].from == v) out.push_back(static_cast<int>(e));
  return out;
}

std::vector<int> TranslationQuiver::edges_into(int v) const {
  std::vector<int> out;
  for (size_t e = 0; e < edges.size(); ++e)
    if (edges[e].to == v) out.push_back(static_cast<int>(e));
  return out;
}

TranslationQuiver knit_preinjective(const Quiver& q, int depth) {
  if (depth < 0) throw Error("knit_preinjective: negative depth");
  if (!q.is_acyclic()) throw Error("knit_preinjective: quiver must be acyclic");
  if (q.is_graded()) throw Error("knit_preinjective: quiver must be ungraded");
  {
    // Connected underlying graph.
    const int n = q.num_vertices();
    std::vector<int> seen(n, 0);
    std::vector<int> stack{0};
    if (n > 0) seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int a = 0; a < q.num_arrows(); ++a) {
        int other = -1;
        if (q.source_of(a) == v) other = q.target_of(a);
        if (q.target_of(a) == v) other = q.source_of(a);
        if (other >= 0 && !seen[other]) {
          seen[other] = 1;
          stack.push_back(other);
        }
      }
    }
    for (int v = 0; v < n; ++v)
      if (!seen[v]) throw Error("knit_preinjective: quiver must be connected");
  }

  TranslationQuiver t;
  t.base = q;
  const int n = q.num_vertices();
  bool all_ended = true;
  for (int j = 0; j < n; ++j) {
    std::vector<long> d = injective_dims(q, j);
    bool ended = false;
    for (int p = 0; p <= depth; ++p) {
      t.vertices.push_back({j, p, d});
      std::vector<long> next = coxeter_translate_dims(q, d);
      bool positive = false, nonneg = true;
      for (long c : next) {
        positive = positive || c > 0;
        nonneg = nonneg && c >= 0;
      }
      if (!positive || !nonneg) {
        ended = true;  // left the positive cone: the orbit hits a projective
        break;
      }
      d = std::move(next);
    }
    all_ended = all_ended && ended;
  }
  t.complete = all_ended;

  for (int a = 0; a < q.num_arrows(); ++a) {
    const int i = q.source_of(a), j = q.target_of(a);
    for (int p = 0;; ++p) {
      int level_from = t.index_of(i, p), level_to = t.index_of(j, p);
      int trans_from = t.index_of(j, p + 1), trans_to = t.index_of(i, p);
      bool any = false;
      if (level_from >= 0 && level_to >= 0) {
        t.edges.push_back({level_from, level_to, a, false});
        any = true;
      }
      if (trans_from >= 0 && trans_to >= 0) {
        t.edges.push_back({trans_from, trans_to, a, true});
        any = true;
      }
      if (!any) break;
    }
  }

  // Mesh additivity at every translated vertex: dim z + dim tau z equals the
  // sum over the middle terms of the mesh.
  for (size_t z = 0; z < t.vertices.size(); ++z) {
    int tz = t.tau(static_cast<int>(z));
    if (tz < 0) continue;
    std::vector<long> middle(n, 0);
    for (int e : t.edges_into(static_cast<int>(z)))
      for (int i = 0; i < n; ++i) middle[i] += t.vertices[t.edges[e].from].dim[i];
    for (int i = 0; i < n; ++i)
      if (middle[i] != t.vertices[z].dim[i] + t.vertices[tz].dim[i])
        throw Error("knit_preinjective: mesh additivity failed (internal error)");
  }
  return t;
}

const std::vector<std::vector<int>>& MeshHoms::paths(int x, int y) {
  auto key = std::make_pair(x, y);
  auto it = paths_.find(key);
  if (it != paths_.end()) return it->second;
  std::vector<std::vector<int>> all;
  std::vector<int> current;
  // Depth-first enumeration; the window is a finite directed acyclic graph.
  struct Dfs {
    const TranslationQuiver& t;
    int target;
    std::vector<std::vector<int>>& all;
    std::vector<int>& current;
    void run(int v) {
      if (v == target) all.push_back(current);
      for (size_t e = 0; e < t.edges.size(); ++e) {
        if (t.edges[e].from != v) continue;
        current.push_back(static_cast<int>(e));
        run(t.edges[e].to);
        current.pop_back();
      }
    }
  };
  Dfs dfs{*t_, y, all, current};
  dfs.run(x);
  return paths_.emplace(key, std::move(all)).first->second;
}

const QuotientSpace& MeshHoms::space(int x, int y) {
  auto key = std::make_pair(x, y);
  auto it = spaces_.find(key);
  if (it != spaces_.end()) return it->second;

  const auto& ps = paths(x, y);
  auto path_index = [&](const std::vector<int>& p) -> long {
    for (size_t i = 0; i < ps.size(); ++i)
      if (ps[i] == p) return static_cast<long>(i);
    throw Error("mesh path indexing failure");
  };

  // Relation rows: u . (mesh at z) . v for every translated vertex z and
  // every pair of paths u: x -> tau z, v: z -> y.
  std::vector<RatVec> rows;
  const TranslationQuiver& t = *t_;
  for (int z = 0; z < static_cast<int>(t.vertices.size()); ++z) {
    int tz = t.tau(z);
    if (tz < 0) continue;
    // sigma matching: edge alpha (m -> z) pairs with the edge tau z -> m
    // carrying the same base arrow and the other type.
    std::vector<std::pair<int, int>> mesh_terms;  // (first edge tau z -> m, then m -> z)
    for (int e_in : t.edges_into(z)) {
      const auto& alpha = t.edges[e_in];
      int matched = -1;
      for (int e_out : t.edges_from(tz)) {
        const auto& sigma = t.edges[e_out];
        if (sigma.to == alpha.from && sigma.base_arrow == alpha.base_arrow &&
            sigma.translate != alpha.translate)
          matched = e_out;
      }
      if (matched < 0) continue;  // middle term truncated away at the boundary
      mesh_terms.push_back({matched, e_in});
    }
    if (mesh_terms.empty()) continue;
    for (const auto& u : paths(x, tz)) {
      for (const auto& v : paths(z, y)) {
        RatVec row = RatVec::Zero(static_cast<long>(ps.size()));
        for (const auto& [sigma, alpha] : mesh_terms) {
          std::vector<int> full = u;
          full.push_back(sigma);
          full.push_back(alpha);
          full.insert(full.end(), v.begin(), v.end());
          row(path_index(full)) += 1;
        }
        if (!row.isZero()) rows.push_back(std::move(row));
      }
    }
  }
  RatMat span(static_cast<long>(rows.size()), static_cast<long>(ps.size()));
  for (size_t i = 0; i < rows.size(); ++i) span.row(static_cast<long>(i)) = rows[i].transpose();
  return spaces_.emplace(key, QuotientSpace(static_cast<long>(ps.size()), span)).first->second;
}

long MeshHoms::dim(int x, int y) { return space(x, y).dim(); }

RatVec MeshHoms::path_class(int x, int y, const std::vector<int>& path) {
  const auto& ps = paths(x, y);
  RatVec v = RatVec::Zero(static_cast<long>(ps.size()));
  for (size_t i = 0; i < ps.size(); ++i)
    if (ps[i] == path) {
      v(static_cast<long>(i)) = 1;
      return space(x, y).project(v);
    }
  throw Error("path_class: not a path of the window");
}

RatVec MeshHoms::compose(int x, int y, int z, const RatVec& f, const RatVec& g) {
  const auto& pxy = paths(x, y);
  const auto& pyz = paths(y, z);
  const auto& pxz = paths(x, z);
  auto index_xz = [&](const std::vector<int>& p) -> long {
    for (size_t i = 0; i < pxz.size(); ++i)
      if (pxz[i] == p) return static_cast<long>(i);
    throw Error("compose: concatenation left the window");
  };
  // Lift both classes to path-space representatives, concatenate, project.
  RatVec big = RatVec::Zero(static_cast<long>(pxz.size()));
  const QuotientSpace& sxy = space(x, y);
  const QuotientSpace& syz = space(y, z);
  for (long i = 0; i < f.size(); ++i) {
    if (f(i) == 0) continue;
    RatVec fu = sxy.lift(i);
    for (long j = 0; j < g.size(); ++j) {
      if (g(j) == 0) continue;
      RatVec gv = syz.lift(j);
      for (long pi = 0; pi < fu.size(); ++pi) {
        if (fu(pi) == 0) continue;
        for (long pj = 0; pj < gv.size(); ++pj) {
          if (gv(pj) == 0) continue;
          std::vector<int> cat = pxy[pi];
          cat.insert(cat.end(), pyz[pj].begin(), pyz[pj].end());
          big(index_xz(cat)) += f(i) * g(j) * fu(pi) * gv(pj);
        }
      }
    }
  }
  return space(x, z).project(big);
}

}  // namespace qpkit
