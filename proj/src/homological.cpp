#include "qpkit/homological.hpp"

#include <algorithm>

namespace qpkit {

namespace {

// Coordinates of Hom(P, A) for an explicit projective P: one normal word
// w -> u_g per generator g; the grade of a coordinate is the word's source.
struct HomCoords {
  struct Entry {
    int gen;
    Path word;
  };
  std::vector<Entry> entries;
  std::vector<std::vector<int>> by_grade;  // ambient indices per source vertex

  long dim() const { return static_cast<long>(entries.size()); }
};

HomCoords hom_to_algebra_coords(const BoundAlgebra& A, const ProjectiveRep& P) {
  HomCoords hc;
  hc.by_grade.assign(A.num_vertices(), {});
  for (long g = 0; g < P.num_gens(); ++g) {
    const int ug = P.gen_vertex[g];
    for (int w = 0; w < A.num_vertices(); ++w)
      for (int idx : A.basis_at(w, ug)) {
        hc.by_grade[w].push_back(static_cast<int>(hc.entries.size()));
        hc.entries.push_back({static_cast<int>(g), A.basis()[idx]});
      }
  }
  return hc;
}

long find_coord(const HomCoords& hc, int gen, const Path& word) {
  for (long i = 0; i < hc.dim(); ++i)
    if (hc.entries[i].gen == gen && hc.entries[i].word == word) return i;
  throw Error("hom coordinate lookup failed");
}

// Decode a vector in P at vertex v into (generator, word) terms.
std::vector<std::tuple<int, Path, Rational>> decode(const ProjectiveRep& P, int v,
                                                    const RatVec& x) {
  std::vector<std::tuple<int, Path, Rational>> out;
  for (long i = 0; i < x.size(); ++i)
    if (x(i) != 0) out.push_back({P.basis_word[v][i].first, P.basis_word[v][i].second, x(i)});
  return out;
}

}  // namespace

long ProjectiveRep::gen_position(const BoundAlgebra&, int k) const {
  const int u = gen_vertex[k];
  for (long i = 0; i < static_cast<long>(basis_word[u].size()); ++i)
    if (basis_word[u][i].first == k && basis_word[u][i].second.is_vertex()) return i;
  throw Error("gen_position: generator basis vector not found");
}

ProjectiveRep projective_rep(const BoundAlgebra& A, const std::vector<int>& gen_vertices) {
  const Quiver& q = A.quiver();
  const int n = q.num_vertices();
  ProjectiveRep P;
  P.gen_vertex = gen_vertices;
  P.basis_word.assign(n, {});
  for (int v = 0; v < n; ++v)
    for (size_t k = 0; k < gen_vertices.size(); ++k)
      for (int idx : A.basis_at(gen_vertices[k], v))
        P.basis_word[v].push_back({static_cast<int>(k), A.basis()[idx]});
  P.rep.dims.assign(n, 0);
  for (int v = 0; v < n; ++v) P.rep.dims[v] = static_cast<long>(P.basis_word[v].size());
  for (int a = 0; a < q.num_arrows(); ++a) {
    const int s = q.source_of(a), t = q.target_of(a);
    RatMat m = RatMat::Zero(P.rep.dims[t], P.rep.dims[s]);
    for (long col = 0; col < P.rep.dims[s]; ++col) {
      const auto& [k, word] = P.basis_word[s][col];
      Path ext = word;
      ext.arrows.push_back(a);
      PathVector red = A.reduce(PathVector::monomial(q, ext));
      for (const auto& [p, c] : red.terms()) {
        // Locate (k, p) in the basis at t.
        for (long row = 0; row < P.rep.dims[t]; ++row)
          if (P.basis_word[t][row].first == k && P.basis_word[t][row].second == p) {
            m(row, col) = c;
            break;
          }
      }
    }
    P.rep.maps.push_back(std::move(m));
  }
  return P;
}

Representation injective_rep(const BoundAlgebra& A, int vertex) {
  const Quiver& q = A.quiver();
  const int n = q.num_vertices();
  Representation I;
  I.dims.assign(n, 0);
  for (int v = 0; v < n; ++v) I.dims[v] = static_cast<long>(A.basis_at(v, vertex).size());
  for (int a = 0; a < q.num_arrows(); ++a) {
    const int s = q.source_of(a), t = q.target_of(a);
    // Transpose of left multiplication: words t->vertex  ->  words s->vertex.
    RatMat left = RatMat::Zero(I.dims[s], I.dims[t]);
    const auto& rows = A.basis_at(s, vertex);
    const auto& cols = A.basis_at(t, vertex);
    for (long j = 0; j < I.dims[t]; ++j) {
      Path y = A.basis()[cols[j]];
      Path ay{s, {a}};
      ay.arrows.insert(ay.arrows.end(), y.arrows.begin(), y.arrows.end());
      PathVector red = A.reduce(PathVector::monomial(q, ay));
      for (const auto& [p, c] : red.terms())
        for (long i = 0; i < I.dims[s]; ++i)
          if (A.basis()[rows[i]] == p) left(i, j) = c;
    }
    I.maps.push_back(left.transpose());
  }
  return I;
}

RepMorphism morphism_from_gens(const BoundAlgebra& A, const ProjectiveRep& P,
                               const Representation& N, const std::vector<RatVec>& images) {
  const Quiver& q = A.quiver();
  const int n = q.num_vertices();
  RepMorphism f;
  for (int v = 0; v < n; ++v) {
    RatMat m = RatMat::Zero(N.dims[v], P.rep.dims[v]);
    for (long col = 0; col < P.rep.dims[v]; ++col) {
      const auto& [k, word] = P.basis_word[v][col];
      m.col(col) = act(A, N, word) * images[k];
    }
    f.blocks.push_back(std::move(m));
  }
  return f;
}

std::pair<std::vector<long>, std::vector<RatMat>> top_of(const BoundAlgebra& A,
                                                         const Representation& M) {
  const Quiver& q = A.quiver();
  const int n = q.num_vertices();
  std::vector<long> top_dims(n, 0);
  std::vector<RatMat> lifts(n);
  for (int v = 0; v < n; ++v) {
    long rad_cols = 0;
    for (int a = 0; a < q.num_arrows(); ++a)
      if (q.target_of(a) == v) rad_cols += M.dims[q.source_of(a)];
    RatMat rad(M.dims[v], rad_cols);
    long off = 0;
    for (int a = 0; a < q.num_arrows(); ++a)
      if (q.target_of(a) == v) {
        rad.block(0, off, M.dims[v], M.dims[q.source_of(a)]) = M.maps[a];
        off += M.dims[q.source_of(a)];
      }
    // Extend the radical column space by unit vectors; the ones that enlarge
    // the rank lift a basis of the top.
    RatMat aug(M.dims[v], rad_cols + M.dims[v]);
    aug << rad, RatMat::Identity(M.dims[v], M.dims[v]);
    Rref rr = rref(aug);
    std::vector<long> lift_cols;
    for (int piv : rr.pivots)
      if (piv >= rad_cols) lift_cols.push_back(piv - rad_cols);
    top_dims[v] = static_cast<long>(lift_cols.size());
    RatMat lift = RatMat::Zero(M.dims[v], top_dims[v]);
    for (long i = 0; i < top_dims[v]; ++i) lift(lift_cols[i], i) = 1;
    lifts[v] = std::move(lift);
  }
  return {top_dims, lifts};
}

CoverStep projective_cover(const BoundAlgebra& A, const Representation& M) {
  auto [top_dims, lifts] = top_of(A, M);
  const int n = A.num_vertices();
  std::vector<int> gens;
  std::vector<RatVec> images;
  for (int v = 0; v < n; ++v)
    for (long i = 0; i < top_dims[v]; ++i) {
      gens.push_back(v);
      images.push_back(lifts[v].col(i));
    }
  CoverStep step;
  step.cover = projective_rep(A, gens);
  step.onto = morphism_from_gens(A, step.cover, M, images);
  for (int v = 0; v < n; ++v)
    if (rank(step.onto.blocks[v]) != M.dims[v])
      throw Error("projective_cover: cover map is not surjective (internal error)");
  auto [K, incl] = rep_kernel(A, step.cover.rep, M, step.onto);
  step.kernel = std::move(K);
  step.include = std::move(incl);
  return step;
}

Resolution minimal_projective_resolution(const BoundAlgebra& A, const Representation& M,
                                         long len) {
  Resolution res;
  res.maps.push_back({});  // placeholder: the augmentation is not stored
  Representation current = M;
  // Inclusion of `current` into the previous cover (empty at step 0).
  RepMorphism prev_include;
  if (current.is_zero()) {
    res.terminated = true;
    return res;
  }
  for (long k = 0; k <= len; ++k) {
    CoverStep step = projective_cover(A, current);
    if (k > 0) {
      // Generator images of P_k inside P_{k-1}: include the kernel.
      std::vector<RatVec> images;
      for (long g = 0; g < step.cover.num_gens(); ++g) {
        const int u = step.cover.gen_vertex[g];
        RatVec in_kernel = step.onto.blocks[u].col(step.cover.gen_position(A, g));
        // gen_position gives the column of the generator basis vector; its
        // image under `onto` is the chosen kernel element, now included.
        images.push_back(prev_include.blocks[u] * in_kernel);
      }
      res.maps.push_back(std::move(images));
    }
    prev_include = step.include;
    res.projectives.push_back(std::move(step.cover));
    const bool done = step.kernel.is_zero();
    current = std::move(step.kernel);
    if (done) {
      res.terminated = true;
      break;
    }
  }
  return res;
}

long projective_dimension(const BoundAlgebra& A, const Representation& M, long bound) {
  if (M.is_zero()) return 0;
  Representation current = M;
  for (long k = 0; k <= bound; ++k) {
    CoverStep step = projective_cover(A, current);
    if (step.kernel.is_zero()) return k;
    current = std::move(step.kernel);
  }
  return -1;
}

GlobalDimension global_dimension(const BoundAlgebra& A, long bound) {
  GlobalDimension g;
  long best = 0;
  for (int v = 0; v < A.num_vertices(); ++v) {
    long pd = projective_dimension(A, simple_representation(A, v), bound);
    if (pd < 0) return g;  // AboveBound
    best = std::max(best, pd);
  }
  g.bounded = true;
  g.value = best;
  return g;
}

namespace {

// Matrix of "precompose with d_k": Hom(P_{k-1}, N) -> Hom(P_k, N), where
// Hom(P, N) is coordinatized as one copy of N_{u_g} per generator g.
RatMat hom_differential(const BoundAlgebra& A, const ProjectiveRep& Pk,
                        const ProjectiveRep& Pprev, const std::vector<RatVec>& dk,
                        const Representation& N) {
  std::vector<long> row_off(Pk.num_gens() + 1, 0);
  for (long g = 0; g < Pk.num_gens(); ++g)
    row_off[g + 1] = row_off[g] + N.dims[Pk.gen_vertex[g]];
  std::vector<long> col_off(Pprev.num_gens() + 1, 0);
  for (long g = 0; g < Pprev.num_gens(); ++g)
    col_off[g + 1] = col_off[g] + N.dims[Pprev.gen_vertex[g]];
  RatMat m = RatMat::Zero(row_off[Pk.num_gens()], col_off[Pprev.num_gens()]);
  for (long g = 0; g < Pk.num_gens(); ++g) {
    const int ug = Pk.gen_vertex[g];
    for (const auto& [l, word, c] : decode(Pprev, ug, dk[g])) {
      // phi(d(g)) += c * act(N, word) * phi(gen l)
      m.block(row_off[g], col_off[l], N.dims[ug], N.dims[Pprev.gen_vertex[l]]) +=
          c * act(A, N, word);
    }
  }
  return m;
}

}  // namespace

long ext_dim(const BoundAlgebra& A, const Representation& M, const Representation& N, int k,
             long resolution_len) {
  if (k == 0) return hom_dim(A, M, N);
  Resolution res = minimal_projective_resolution(A, M, k + 1);
  (void)resolution_len;
  auto hom_space_dim = [&](long j) -> long {
    if (j >= static_cast<long>(res.projectives.size())) return 0;
    long d = 0;
    for (long g = 0; g < res.projectives[j].num_gens(); ++g)
      d += N.dims[res.projectives[j].gen_vertex[g]];
    return d;
  };
  auto delta = [&](long j) -> RatMat {  // Hom(P_{j-1},N) -> Hom(P_j,N)
    if (j >= static_cast<long>(res.projectives.size()))
      return RatMat::Zero(0, std::max<long>(hom_space_dim(j - 1), 0));
    return hom_differential(A, res.projectives[j], res.projectives[j - 1], res.maps[j], N);
  };
  if (hom_space_dim(k) == 0) return 0;
  RatMat dk = delta(k);
  RatMat dk1 = delta(k + 1);
  const long kernel_dim = hom_space_dim(k) - rank(dk1);
  return kernel_dim - rank(dk);
}

Representation ar_translate(const BoundAlgebra& A, const Representation& M) {
  if (M.is_zero()) return zero_representation(A);
  Resolution res = minimal_projective_resolution(A, M, 1);
  if (res.projectives.size() < 2) return zero_representation(A);  // M projective
  const ProjectiveRep& P0 = res.projectives[0];
  const ProjectiveRep& P1 = res.projectives[1];
  const std::vector<RatVec>& d1 = res.maps[1];

  // nu(P) = I_u per generator; nu(d1) is the dual of right multiplication by
  // the presentation matrix.
  std::vector<Representation> nu0_parts, nu1_parts;
  for (long g = 0; g < P0.num_gens(); ++g) nu0_parts.push_back(injective_rep(A, P0.gen_vertex[g]));
  for (long g = 0; g < P1.num_gens(); ++g) nu1_parts.push_back(injective_rep(A, P1.gen_vertex[g]));
  Representation nu0 = direct_sum(A, nu0_parts);
  Representation nu1 = direct_sum(A, nu1_parts);

  const Quiver& q = A.quiver();
  const int n = q.num_vertices();
  RepMorphism nu_d;
  for (int w = 0; w < n; ++w) {
    // Block (l, k): transpose of (words w->u_l) -> (words w->u_k), y -> y * f_{lk}.
    RatMat m = RatMat::Zero(nu0.dims[w], nu1.dims[w]);
    std::vector<long> l_off(P0.num_gens() + 1, 0);
    for (long l = 0; l < P0.num_gens(); ++l)
      l_off[l + 1] = l_off[l] + static_cast<long>(A.basis_at(w, P0.gen_vertex[l]).size());
    std::vector<long> k_off(P1.num_gens() + 1, 0);
    for (long k = 0; k < P1.num_gens(); ++k)
      k_off[k + 1] = k_off[k] + static_cast<long>(A.basis_at(w, P1.gen_vertex[k]).size());
    for (long k = 0; k < P1.num_gens(); ++k) {
      for (const auto& [l, word, c] : decode(P0, P1.gen_vertex[k], d1[k])) {
        // f_{lk} = c * word with word: u_l -> u_k.
        const auto& rows_basis = A.basis_at(w, P0.gen_vertex[l]);
        const auto& cols_basis = A.basis_at(w, P1.gen_vertex[k]);
        // right multiplication: (words w->u_l) -> (words w->u_k)
        RatMat rm = RatMat::Zero(static_cast<long>(cols_basis.size()),
                                 static_cast<long>(rows_basis.size()));
        for (long j = 0; j < static_cast<long>(rows_basis.size()); ++j) {
          Path y = A.basis()[rows_basis[j]];
          auto prod = concat(q, y, word);
          if (!prod) continue;
          PathVector red = A.reduce(PathVector::monomial(q, *prod));
          for (const auto& [p, cc] : red.terms())
            for (long i = 0; i < static_cast<long>(cols_basis.size()); ++i)
              if (A.basis()[cols_basis[i]] == p) rm(i, j) = cc;
        }
        m.block(l_off[l], k_off[k], rm.cols(), rm.rows()) += c * rm.transpose();
      }
    }
    nu_d.blocks.push_back(std::move(m));
  }
  return rep_kernel(A, nu1, nu0, nu_d).first;
}

long Bimodule::total() const {
  long t = 0;
  for (const auto& row : dims)
    for (long d : row) t += d;
  return t;
}

namespace {

// Everything needed to compute Ext^2(I_v, A) with its grading and to lift
// module maps I_{v'} -> I_v to the resolutions.
struct InjResolution {
  Representation injective;
  ProjectiveRep P0, P1, P2;
  std::vector<RatVec> d1, d2;       // generator images
  RepMorphism aug;                  // P0 -> I_v
  RepMorphism d1m, d2m;             // full matrices
  HomCoords h1, h2;                 // coords of Hom(P1,A), Hom(P2,A)
  RatMat delta2;                    // Hom(P1,A) -> Hom(P2,A)
  std::vector<QuotientSpace> coker; // per grade w, quotient of grade-w rows
};

// Matrix of "y -> reduce(y . f)" between graded Hom(?,A) coordinate spaces,
// for f = sum c * word given by decode pairs against Pprev.
RatMat hom_to_algebra_differential(const BoundAlgebra& A, const ProjectiveRep& Pk,
                                   const HomCoords& hk, const ProjectiveRep& Pprev,
                                   const HomCoords& hprev, const std::vector<RatVec>& dk) {
  const Quiver& q = A.quiver();
  RatMat m = RatMat::Zero(hk.dim(), hprev.dim());
  for (long col = 0; col < hprev.dim(); ++col) {
    const auto& [l, y] = hprev.entries[col];
    for (long g = 0; g < Pk.num_gens(); ++g) {
      for (const auto& [l2, word, c] : decode(Pprev, Pk.gen_vertex[g], dk[g])) {
        if (l2 != l) continue;
        auto prod = concat(q, y, word);
        if (!prod) continue;
        PathVector red = A.reduce(PathVector::monomial(q, *prod));
        for (const auto& [p, cc] : red.terms())
          m(find_coord(hk, static_cast<int>(g), p), col) += c * cc;
      }
    }
  }
  return m;
}

RepMorphism full_morphism(const BoundAlgebra& A, const ProjectiveRep& from,
                          const Representation& to, const std::vector<RatVec>& gen_images) {
  return morphism_from_gens(A, from, to, gen_images);
}

InjResolution resolve_injective(const BoundAlgebra& A, int v) {
  InjResolution r;
  r.injective = injective_rep(A, v);
  Resolution res = minimal_projective_resolution(A, r.injective, 2);
  if (!res.terminated || res.projectives.size() > 3)
    throw Error("ext2_bimodule: injective has projective dimension > 2");
  auto cover0 = projective_cover(A, r.injective);
  r.P0 = res.projectives[0];
  r.aug = cover0.onto;
  r.P1 = res.projectives.size() > 1 ? res.projectives[1] : projective_rep(A, {});
  r.P2 = res.projectives.size() > 2 ? res.projectives[2] : projective_rep(A, {});
  r.d1 = res.maps.size() > 1 ? res.maps[1] : std::vector<RatVec>{};
  r.d2 = res.maps.size() > 2 ? res.maps[2] : std::vector<RatVec>{};
  r.d1m = full_morphism(A, r.P1, r.P0.rep, r.d1);
  r.d2m = full_morphism(A, r.P2, r.P1.rep, r.d2);
  r.h1 = hom_to_algebra_coords(A, r.P1);
  r.h2 = hom_to_algebra_coords(A, r.P2);
  r.delta2 = hom_to_algebra_differential(A, r.P2, r.h2, r.P1, r.h1, r.d2);
  // Grade-w cokernels: delta2 preserves the grade, so split by rows/cols.
  for (int w = 0; w < A.num_vertices(); ++w) {
    const auto& rows_w = r.h2.by_grade[w];
    const auto& cols_w = r.h1.by_grade[w];
    RatMat span(static_cast<long>(cols_w.size()), static_cast<long>(rows_w.size()));
    for (size_t i = 0; i < cols_w.size(); ++i)
      for (size_t j = 0; j < rows_w.size(); ++j) span(i, j) = r.delta2(rows_w[j], cols_w[i]);
    r.coker.emplace_back(static_cast<long>(rows_w.size()), span);
  }
  return r;
}

// Chain map P.^{(v')} -> P.^{(v)} lifting the module map I_{v'} -> I_v.
struct ChainMap {
  RepMorphism f0, f1, f2;
};

RepMorphism lift_through(const BoundAlgebra& A, const ProjectiveRep& source,
                         const Representation& mid, const RepMorphism& onto,
                         const RepMorphism& target_of_source) {
  // Solve onto . x = target_of_source on generators; assemble full morphism.
  std::vector<RatVec> images;
  for (long g = 0; g < source.num_gens(); ++g) {
    const int u = source.gen_vertex[g];
    RatVec rhs = target_of_source.blocks[u].col(source.gen_position(A, g));
    auto x = solve(onto.blocks[u], rhs);
    if (!x) throw Error("chain map lifting failed (map does not factor)");
    images.push_back(*x);
  }
  return morphism_from_gens(A, source, mid, images);
}

}  // namespace

Bimodule ext2_bimodule(const BoundAlgebra& A) {
  const Quiver& q = A.quiver();
  const int n = q.num_vertices();
  std::vector<InjResolution> R;
  for (int v = 0; v < n; ++v) R.push_back(resolve_injective(A, v));

  Bimodule X;
  X.n = n;
  X.dims.assign(n, std::vector<long>(n, 0));
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u) X.dims[u][v] = R[v].coker[u].dim();

  // Right action of arrow a: v -> v': precompose with a chain map lifting
  // D(. a): I_{v'} -> I_v.
  for (int a = 0; a < q.num_arrows(); ++a) {
    const int v = q.source_of(a), vp = q.target_of(a);
    // Module map I_{v'} -> I_v at vertex w: transpose of right multiplication
    // (words w->v) -> (words w->v'), y -> reduce(y a).
    RepMorphism mod_map;
    for (int w = 0; w < n; ++w) {
      const auto& rows_b = A.basis_at(w, v);
      const auto& cols_b = A.basis_at(w, vp);
      RatMat rm = RatMat::Zero(static_cast<long>(cols_b.size()),
                               static_cast<long>(rows_b.size()));
      for (long j = 0; j < static_cast<long>(rows_b.size()); ++j) {
        Path y = A.basis()[rows_b[j]];
        Path ya = y;
        ya.arrows.push_back(a);
        if (!path_composable(q, ya)) continue;
        PathVector red = A.reduce(PathVector::monomial(q, ya));
        for (const auto& [p, cc] : red.terms())
          for (long i = 0; i < static_cast<long>(cols_b.size()); ++i)
            if (A.basis()[cols_b[i]] == p) rm(i, j) = cc;
      }
      mod_map.blocks.push_back(rm.transpose());
    }
    // Lift through the resolutions.
    RepMorphism f0 = lift_through(A, R[vp].P0, R[v].P0.rep, R[v].aug, [&] {
      RepMorphism comp;
      for (int w = 0; w < n; ++w) comp.blocks.push_back(mod_map.blocks[w] * R[vp].aug.blocks[w]);
      return comp;
    }());
    RepMorphism f1 = lift_through(A, R[vp].P1, R[v].P1.rep, R[v].d1m, [&] {
      RepMorphism comp;
      for (int w = 0; w < n; ++w) comp.blocks.push_back(f0.blocks[w] * R[vp].d1m.blocks[w]);
      return comp;
    }());
    RepMorphism f2 = lift_through(A, R[vp].P2, R[v].P2.rep, R[v].d2m, [&] {
      RepMorphism comp;
      for (int w = 0; w < n; ++w) comp.blocks.push_back(f1.blocks[w] * R[vp].d2m.blocks[w]);
      return comp;
    }());


    // Induced on Hom(P2, A): psi -> psi . f2, expressed on graded coords.
    for (int u = 0; u < n; ++u) {
      const long du = X.dims[u][v];
      const long dup = X.dims[u][vp];
      RatMat act_m = RatMat::Zero(dup, du);
      for (long b = 0; b < du; ++b) {
        RatVec rep_w = R[v].coker[u].lift(b);  // coords in grade-u rows of Hom(P2^{(v)}, A)
        // Expand to a full Hom(P2^{(v)}, A) vector.
        RatVec full = RatVec::Zero(R[v].h2.dim());
        for (size_t i = 0; i < R[v].h2.by_grade[u].size(); ++i)
          full(R[v].h2.by_grade[u][i]) = rep_w(i);
        // psi . f2 on coordinates of Hom(P2^{(v')}, A):
        RatVec out = RatVec::Zero(R[vp].h2.dim());
        for (long g = 0; g < R[vp].P2.num_gens(); ++g) {
          const int ug = R[vp].P2.gen_vertex[g];
          for (const auto& [l, word, c] :
               decode(R[v].P2, ug, [&] {
                 // f2 on generator g: column vector in P2^{(v)} at ug.
                 return RatVec(f2.blocks[ug].col(R[vp].P2.gen_position(A, g)));
               }())) {
            // psi(gen l) = sum over words x->u_l with coeff full(...): value
            // psi(f2(g)) += c * reduce(psi(gen l) * word)
            for (int w0 = 0; w0 < n; ++w0) {
              for (int idx : A.basis_at(w0, R[v].P2.gen_vertex[l])) {
                long coord = find_coord(R[v].h2, static_cast<int>(l), A.basis()[idx]);
                if (full(coord) == 0) continue;
                auto prod = concat(q, A.basis()[idx], word);
                if (!prod) continue;
                PathVector red = A.reduce(PathVector::monomial(q, *prod));
                for (const auto& [p, cc] : red.terms())
                  out(find_coord(R[vp].h2, static_cast<int>(g), p)) += full(coord) * c * cc;
              }
            }
          }
        }
        // Project to the grade-u cokernel of v'.
        RatVec graded(static_cast<long>(R[vp].h2.by_grade[u].size()));
        for (size_t i = 0; i < R[vp].h2.by_grade[u].size(); ++i)
          graded(i) = out(R[vp].h2.by_grade[u][i]);
        act_m.col(b) = R[vp].coker[u].project(graded);
      }
      X.right[{a, {u, v}}] = std::move(act_m);
    }
  }

  // Left action of arrow b: u -> u': postcompose with left multiplication,
  // moving grade u' to grade u inside each Hom(P2^{(v)}, A).
  for (int b = 0; b < q.num_arrows(); ++b) {
    const int u = q.source_of(b), up = q.target_of(b);
    for (int v = 0; v < n; ++v) {
      const long dsrc = X.dims[up][v];
      const long ddst = X.dims[u][v];
      RatMat act_m = RatMat::Zero(ddst, dsrc);
      for (long col = 0; col < dsrc; ++col) {
        RatVec rep_w = R[v].coker[up].lift(col);
        RatVec out = RatVec::Zero(static_cast<long>(R[v].h2.by_grade[u].size()));
        for (size_t i = 0; i < R[v].h2.by_grade[up].size(); ++i) {
          if (rep_w(i) == 0) continue;
          const auto& entry = R[v].h2.entries[R[v].h2.by_grade[up][i]];
          Path by{u, {b}};
          by.arrows.insert(by.arrows.end(), entry.word.arrows.begin(), entry.word.arrows.end());
          if (!path_composable(q, by)) continue;
          PathVector red = A.reduce(PathVector::monomial(q, by));
          for (const auto& [p, cc] : red.terms()) {
            long coord = find_coord(R[v].h2, entry.gen, p);
            // Locate within grade-u rows.
            for (size_t j = 0; j < R[v].h2.by_grade[u].size(); ++j)
              if (R[v].h2.by_grade[u][j] == coord) out(j) += rep_w(i) * cc;
          }
        }
        act_m.col(col) = R[v].coker[u].project(out);
      }
      X.left[{b, {up, v}}] = std::move(act_m);
    }
  }
  return X;
}

void validate_bimodule(const BoundAlgebra& A, const Bimodule& X) {
  const Quiver& q = A.quiver();
  const int n = X.n;
  // Action of a path on either side, as a matrix between components.
  // Left action of p: s(p) -> t(p) maps X_{t(p), v} -> X_{s(p), v}.
  auto left_act = [&](const Path& p, int v) {
    RatMat acc = RatMat::Identity(X.dims[path_target(q, p)][v], X.dims[path_target(q, p)][v]);
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it)
      acc = (X.left.at({*it, {q.target_of(*it), v}}) * acc).eval();
    return acc;
  };
  auto right_act = [&](const Path& p, int u) {
    RatMat acc = RatMat::Identity(X.dims[u][p.source], X.dims[u][p.source]);
    for (int a : p.arrows) acc = (X.right.at({a, {u, q.source_of(a)}}) * acc).eval();
    return acc;
  };
  // Relations act as zero on both sides.
  for (const auto& r : A.relations()) {
    for (int v = 0; v < n; ++v) {
      std::map<std::pair<int, int>, RatMat> sums;
      for (const auto& [p, c] : r.terms()) {
        auto key = std::make_pair(p.source, path_target(q, p));
        RatMat term = c * left_act(p, v);
        auto it = sums.find(key);
        if (it == sums.end())
          sums.emplace(key, term);
        else
          it->second += term;
      }
      for (const auto& [key, m] : sums)
        if (!m.isZero()) throw Error("bimodule: a relation acts nontrivially on the left");
    }
    for (int u = 0; u < n; ++u) {
      std::map<std::pair<int, int>, RatMat> sums;
      for (const auto& [p, c] : r.terms()) {
        auto key = std::make_pair(p.source, path_target(q, p));
        RatMat term = c * right_act(p, u);
        auto it = sums.find(key);
        if (it == sums.end())
          sums.emplace(key, term);
        else
          it->second += term;
      }
      for (const auto& [key, m] : sums)
        if (!m.isZero()) throw Error("bimodule: a relation acts nontrivially on the right");
    }
  }
  // The two actions commute.
  for (int a = 0; a < q.num_arrows(); ++a)
    for (int b = 0; b < q.num_arrows(); ++b) {
      const int u = q.source_of(a), up = q.target_of(a);
      const int v = q.source_of(b), vp = q.target_of(b);
      RatMat lr = X.left.at({a, {up, vp}}) * X.right.at({b, {up, v}});
      RatMat rl = X.right.at({b, {u, v}}) * X.left.at({a, {up, v}});
      if (lr != rl) throw Error("bimodule: left and right actions do not commute");
    }
}

Bimodule bimodule_tensor(const BoundAlgebra& A, const Bimodule& X, const Bimodule& Y) {
  const Quiver& q = A.quiver();
  const int n = X.n;
  Bimodule Z;
  Z.n = n;
  Z.dims.assign(n, std::vector<long>(n, 0));

  // Ambient spaces and quotients per (u,w).
  std::vector<std::vector<QuotientSpace>> quo(n, std::vector<QuotientSpace>(n));
  std::vector<std::vector<std::vector<long>>> off(n, std::vector<std::vector<long>>(n));
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w) {
      std::vector<long>& offsets = off[u][w];
      offsets.assign(n + 1, 0);
      for (int v = 0; v < n; ++v) offsets[v + 1] = offsets[v] + X.dims[u][v] * Y.dims[v][w];
      const long ambient = offsets[n];
      std::vector<RatVec> rels;
      for (int a = 0; a < q.num_arrows(); ++a) {
        const int v = q.source_of(a), vp = q.target_of(a);
        const RatMat& xa = X.right.at({a, {u, v}});
        const RatMat& ay = Y.left.at({a, {vp, w}});
        for (long i = 0; i < X.dims[u][v]; ++i)
          for (long j = 0; j < Y.dims[vp][w]; ++j) {
            RatVec r = RatVec::Zero(ambient);
            // (x_i . a) (x) y_j  in block v'
            for (long k = 0; k < X.dims[u][vp]; ++k)
              if (xa(k, i) != 0) r(offsets[vp] + k * Y.dims[vp][w] + j) += xa(k, i);
            // - x_i (x) (a . y_j)  in block v
            for (long k = 0; k < Y.dims[v][w]; ++k)
              if (ay(k, j) != 0) r(offsets[v] + i * Y.dims[v][w] + k) -= ay(k, j);
            if (!r.isZero()) rels.push_back(std::move(r));
          }
      }
      RatMat span(static_cast<long>(rels.size()), ambient);
      for (size_t i = 0; i < rels.size(); ++i) span.row(static_cast<long>(i)) = rels[i].transpose();
      quo[u][w] = QuotientSpace(ambient, span);
      Z.dims[u][w] = quo[u][w].dim();
    }

  auto ambient_left_act = [&](int b, int u, int up, int w, const RatVec& vec) {
    // X.left (x) id on the big space: (u',w) ambient -> (u,w) ambient.
    RatVec out = RatVec::Zero(off[u][w][n]);
    for (int v = 0; v < n; ++v) {
      const RatMat& xb = X.left.at({b, {up, v}});
      for (long i = 0; i < X.dims[up][v]; ++i)
        for (long j = 0; j < Y.dims[v][w]; ++j) {
          const Rational& val = vec(off[up][w][v] + i * Y.dims[v][w] + j);
          if (val == 0) continue;
          for (long k = 0; k < X.dims[u][v]; ++k)
            if (xb(k, i) != 0) out(off[u][w][v] + k * Y.dims[v][w] + j) += val * xb(k, i);
        }
    }
    return out;
  };
  auto ambient_right_act = [&](int a, int u, int w, int wp, const RatVec& vec) {
    RatVec out = RatVec::Zero(off[u][wp][n]);
    for (int v = 0; v < n; ++v) {
      const RatMat& ya = Y.right.at({a, {v, w}});
      for (long i = 0; i < X.dims[u][v]; ++i)
        for (long j = 0; j < Y.dims[v][w]; ++j) {
          const Rational& val = vec(off[u][w][v] + i * Y.dims[v][w] + j);
          if (val == 0) continue;
          for (long k = 0; k < Y.dims[v][wp]; ++k)
            if (ya(k, j) != 0) out(off[u][wp][v] + i * Y.dims[v][wp] + k) += val * ya(k, j);
        }
    }
    return out;
  };

  for (int b = 0; b < q.num_arrows(); ++b) {
    const int u = q.source_of(b), up = q.target_of(b);
    for (int w = 0; w < n; ++w) {
      RatMat m = RatMat::Zero(Z.dims[u][w], Z.dims[up][w]);
      for (long col = 0; col < Z.dims[up][w]; ++col)
        m.col(col) = quo[u][w].project(ambient_left_act(b, u, up, w, quo[up][w].lift(col)));
      Z.left[{b, {up, w}}] = std::move(m);
    }
  }
  for (int a = 0; a < q.num_arrows(); ++a) {
    const int w = q.source_of(a), wp = q.target_of(a);
    for (int u = 0; u < n; ++u) {
      RatMat m = RatMat::Zero(Z.dims[u][wp], Z.dims[u][w]);
      for (long col = 0; col < Z.dims[u][w]; ++col)
        m.col(col) = quo[u][wp].project(ambient_right_act(a, u, w, wp, quo[u][w].lift(col)));
      Z.right[{a, {u, w}}] = std::move(m);
    }
  }
  return Z;
}

NilpotencyReport tensor_power_nilpotency(const BoundAlgebra& A, const Bimodule& X, long bound) {
  NilpotencyReport r;
  Bimodule power = X;
  for (long k = 1; k <= bound; ++k) {
    if (power.is_zero()) {
      r.nilpotent = true;
      r.index = k;
      return r;
    }
    power = bimodule_tensor(A, power, X);
  }
  return r;
}

namespace {

// Tor_2(M, DA) as a representation: kernel of P2 (x) DA -> P1 (x) DA.
Representation tor2_of(const BoundAlgebra& A, const Representation& M) {
  Resolution res = minimal_projective_resolution(A, M, 2);
  if (!res.terminated)
    throw Error("tor2: resolution does not stop by degree 2 (gldim > 2?)");
  if (res.projectives.size() < 3) return zero_representation(A);
  const ProjectiveRep& P1 = res.projectives[1];
  const ProjectiveRep& P2 = res.projectives[2];
  const std::vector<RatVec>& d2 = res.maps[2];

  std::vector<Representation> t2_parts, t1_parts;
  for (long g = 0; g < P2.num_gens(); ++g) t2_parts.push_back(injective_rep(A, P2.gen_vertex[g]));
  for (long g = 0; g < P1.num_gens(); ++g) t1_parts.push_back(injective_rep(A, P1.gen_vertex[g]));
  Representation T2 = direct_sum(A, t2_parts);
  Representation T1 = direct_sum(A, t1_parts);

  const Quiver& q = A.quiver();
  const int n = q.num_vertices();
  RepMorphism d2_tensor;
  for (int w = 0; w < n; ++w) {
    RatMat m = RatMat::Zero(T1.dims[w], T2.dims[w]);
    std::vector<long> row_off(P1.num_gens() + 1, 0);
    for (long l = 0; l < P1.num_gens(); ++l)
      row_off[l + 1] = row_off[l] + static_cast<long>(A.basis_at(w, P1.gen_vertex[l]).size());
    std::vector<long> col_off(P2.num_gens() + 1, 0);
    for (long g = 0; g < P2.num_gens(); ++g)
      col_off[g + 1] = col_off[g] + static_cast<long>(A.basis_at(w, P2.gen_vertex[g]).size());
    for (long g = 0; g < P2.num_gens(); ++g) {
      for (const auto& [l, word, c] : decode(P1, P2.gen_vertex[g], d2[g])) {
        const auto& rows_b = A.basis_at(w, P1.gen_vertex[l]);
        const auto& cols_b = A.basis_at(w, P2.gen_vertex[g]);
        RatMat rm = RatMat::Zero(static_cast<long>(cols_b.size()),
                                 static_cast<long>(rows_b.size()));
        for (long j = 0; j < static_cast<long>(rows_b.size()); ++j) {
          Path y = A.basis()[rows_b[j]];
          auto prod = concat(q, y, word);
          if (!prod) continue;
          PathVector red = A.reduce(PathVector::monomial(q, *prod));
          for (const auto& [p, cc] : red.terms())
            for (long i = 0; i < static_cast<long>(cols_b.size()); ++i)
              if (A.basis()[cols_b[i]] == p) rm(i, j) = cc;
        }
        m.block(row_off[l], col_off[g], rm.cols(), rm.rows()) += c * rm.transpose();
      }
    }
    d2_tensor.blocks.push_back(std::move(m));
  }
  return rep_kernel(A, T2, T1, d2_tensor).first;
}

}  // namespace

NilpotencyReport tor2_nilpotency(const BoundAlgebra& A, long bound) {
  NilpotencyReport r;
  std::vector<Representation> parts;
  for (int u = 0; u < A.num_vertices(); ++u) parts.push_back(injective_rep(A, u));
  Representation M = direct_sum(A, parts);
  for (long k = 1; k <= bound; ++k) {
    M = tor2_of(A, M);
    if (M.is_zero()) {
      r.nilpotent = true;
      r.index = k;
      return r;
    }
  }
  return r;
}

TensorAlgebraDims tensor_algebra_dims(const BoundAlgebra& A, const Bimodule& X, long bound) {
  TensorAlgebraDims out;
  const int n = A.num_vertices();
  out.by_pair.assign(n, std::vector<long>(n, 0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      out.by_pair[u][v] = static_cast<long>(A.basis_at(u, v).size());
  Bimodule power = X;
  for (long k = 1; k <= bound; ++k) {
    if (power.is_zero()) {
      out.finite = true;
      out.powers_used = k - 1;
      out.total = 0;
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) out.total += out.by_pair[u][v];
      return out;
    }
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) out.by_pair[u][v] += power.dims[u][v];
    power = bimodule_tensor(A, power, X);
  }
  return out;
}

std::vector<std::vector<long>> minimal_relation_counts(const BoundAlgebra& A) {
  const Quiver& q = A.quiver();
  const int n = q.num_vertices();
  const long m = A.nilpotency_degree();
  const long D = 2 * m;

  // Composable paths of length <= D, indexed globally.
  std::vector<Path> paths;
  std::map<Path, long, PathOrder> index;
  for (int v = 0; v < n; ++v) {
    Path e{v, {}};
    index.emplace(e, static_cast<long>(paths.size()));
    paths.push_back(e);
  }
  size_t frontier_begin = 0;
  for (long len = 1; len <= D; ++len) {
    size_t frontier_end = paths.size();
    for (size_t i = frontier_begin; i < frontier_end; ++i) {
      if (paths[i].length() != len - 1) continue;
      int tail = path_target(q, paths[i]);
      for (int a = 0; a < q.num_arrows(); ++a) {
        if (q.source_of(a) != tail) continue;
        Path ext = paths[i];
        ext.arrows.push_back(a);
        index.emplace(ext, static_cast<long>(paths.size()));
        paths.push_back(ext);
      }
    }
    frontier_begin = frontier_end;
    if (paths.size() > 200000) throw Error("minimal_relation_counts: path space too large");
  }

  auto to_vec = [&](const PathVector& f) {
    RatVec v = RatVec::Zero(static_cast<long>(paths.size()));
    for (const auto& [p, c] : f.terms()) {
      auto it = index.find(p);
      if (it != index.end()) v(it->second) += c;  // terms beyond D are truncated away
    }
    return v;
  };

  // Spanning vectors of I (all u r v) and of IJ + JI (those with |u|+|v|>=1),
  // assembled per endpoint pair of the sandwiching paths.
  std::vector<RatVec> span_i, span_w;
  for (const auto& r : A.relations()) {
    for (const Path& u : paths) {
      for (const Path& v : paths) {
        if (u.length() + v.length() + 2 > D) continue;  // relation terms have length >= 2
        PathVector urv = multiply(q, multiply(q, PathVector::monomial(q, u), r),
                                  PathVector::monomial(q, v));
        if (urv.is_zero()) continue;
        RatVec vec = to_vec(urv);
        if (vec.isZero()) continue;
        span_i.push_back(vec);
        if (u.length() + v.length() >= 1) span_w.push_back(std::move(vec));
      }
    }
  }

  // Split by (source, target) coordinates and compare ranks.
  std::vector<std::vector<long>> counts(n, std::vector<long>(n, 0));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      std::vector<long> coords;
      for (size_t i = 0; i < paths.size(); ++i)
        if (path_source(q, paths[i]) == s && path_target(q, paths[i]) == t)
          coords.push_back(static_cast<long>(i));
      if (coords.empty()) continue;
      auto restrict_rows = [&](const std::vector<RatVec>& vs) {
        std::vector<RatVec> rows;
        for (const auto& v : vs) {
          RatVec r(static_cast<long>(coords.size()));
          bool nonzero = false;
          for (size_t j = 0; j < coords.size(); ++j) {
            r(static_cast<long>(j)) = v(coords[j]);
            nonzero = nonzero || r(static_cast<long>(j)) != 0;
          }
          if (nonzero) rows.push_back(std::move(r));
        }
        RatMat m(static_cast<long>(rows.size()), static_cast<long>(coords.size()));
        for (size_t i = 0; i < rows.size(); ++i) m.row(static_cast<long>(i)) = rows[i].transpose();
        return m;
      };
      long rank_i = rank(restrict_rows(span_i));
      long rank_w = rank(restrict_rows(span_w));
      counts[s][t] = rank_i - rank_w;
    }
  return counts;
}

Quiver tilde_quiver(const BoundAlgebra& A, long bound) {
  GlobalDimension gd = global_dimension(A, 8);
  if (!gd.bounded || gd.value > 2) throw Error("tilde_quiver: global dimension must be <= 2");
  Bimodule X = ext2_bimodule(A);
  NilpotencyReport nil = tensor_power_nilpotency(A, X, bound);
  if (!nil.nilpotent)
    throw Error("tilde_quiver: Ext^2 tensor powers do not vanish within the bound");

  auto counts = minimal_relation_counts(A);
  const Quiver& q = A.quiver();
  const int n = q.num_vertices();

  // Independent route: minimal relation counts equal Ext^2 between simples.
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      long e2 = ext_dim(A, simple_representation(A, s), simple_representation(A, t), 2);
      if (e2 != counts[s][t])
        throw Error("tilde_quiver: relation count disagrees with Ext^2 of simples");
    }

  std::vector<Arrow> arrows = q.arrows();
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (long k = 0; k < counts[s][t]; ++k)
        arrows.push_back({"r_" + q.vertex(s) + "_" + q.vertex(t) + "_" + std::to_string(k),
                          q.vertex(t), q.vertex(s), 0});
  return Quiver(q.vertices(), std::move(arrows));
}

}  // namespace qpkit
