#include "qpkit/bound_algebra.hpp"

#include <algorithm>

namespace qpkit {

BoundAlgebra BoundAlgebra::build(const Quiver& q, std::vector<PathVector> relations, long d_max) {
  for (const auto& r : relations)
    for (const auto& [p, c] : r.terms()) {
      (void)c;
      if (p.length() < 2)
        throw Error("bound algebra: relation term '" + path_to_string(q, p) +
                    "' of length < 2 (ideal not admissible)");
    }
  BoundAlgebra A;
  A.quiver_ = q;
  A.relations_ = relations;
  A.pres_ = groebner(q, std::move(relations), d_max);
  if (A.pres_.verdict == Verdict::Infinite)
    throw Error("bound algebra: quotient is infinite-dimensional");
  if (!A.pres_.complete)
    throw Error("bound algebra: finiteness not certified at d_max=" + std::to_string(d_max));
  A.basis_ = A.pres_.normal_words;
  std::sort(A.basis_.begin(), A.basis_.end(), [](const Path& a, const Path& b) {
    return PathOrder()(a, b);
  });
  const int n = q.num_vertices();
  A.basis_by_pair_.assign(n, std::vector<std::vector<int>>(n));
  for (int i = 0; i < static_cast<int>(A.basis_.size()); ++i) {
    const Path& p = A.basis_[i];
    A.basis_index_.emplace(p, i);
    A.basis_by_pair_[path_source(q, p)][path_target(q, p)].push_back(i);
    A.max_basis_length_ = std::max<long>(A.max_basis_length_, p.length());
  }
  return A;
}

int BoundAlgebra::basis_index(const Path& p) const {
  auto it = basis_index_.find(p);
  if (it == basis_index_.end()) throw Error("basis_index: path is not a normal word");
  return it->second;
}

long Representation::total_dim() const {
  long t = 0;
  for (long d : dims) t += d;
  return t;
}

Representation zero_representation(const BoundAlgebra& A) {
  Representation M;
  const Quiver& q = A.quiver();
  M.dims.assign(q.num_vertices(), 0);
  for (int a = 0; a < q.num_arrows(); ++a) M.maps.push_back(RatMat::Zero(0, 0));
  return M;
}

Representation simple_representation(const BoundAlgebra& A, int vertex) {
  Representation M = zero_representation(A);
  M.dims[vertex] = 1;
  const Quiver& q = A.quiver();
  for (int a = 0; a < q.num_arrows(); ++a)
    M.maps[a] = RatMat::Zero(M.dims[q.target_of(a)], M.dims[q.source_of(a)]);
  return M;
}

Representation direct_sum(const BoundAlgebra& A, const std::vector<Representation>& parts) {
  const Quiver& q = A.quiver();
  Representation M;
  M.dims.assign(q.num_vertices(), 0);
  for (const auto& p : parts)
    for (int v = 0; v < q.num_vertices(); ++v) M.dims[v] += p.dims[v];
  for (int a = 0; a < q.num_arrows(); ++a) {
    const int s = q.source_of(a), t = q.target_of(a);
    RatMat m = RatMat::Zero(M.dims[t], M.dims[s]);
    long ro = 0, co = 0;
    for (const auto& p : parts) {
      m.block(ro, co, p.dims[t], p.dims[s]) = p.maps[a];
      ro += p.dims[t];
      co += p.dims[s];
    }
    M.maps.push_back(std::move(m));
  }
  return M;
}

RatMat act(const BoundAlgebra&, const Representation& M, const Path& p) {
  RatMat m = RatMat::Identity(M.dims[p.source], M.dims[p.source]);
  for (int a : p.arrows) m = M.maps[a] * m;
  return m;
}

RatMat act(const BoundAlgebra& A, const Representation& M, const PathVector& f, int u, int v) {
  RatMat m = RatMat::Zero(M.dims[v], M.dims[u]);
  const Quiver& q = A.quiver();
  for (const auto& [p, c] : f.terms()) {
    if (path_source(q, p) != u || path_target(q, p) != v) continue;
    m += c * act(A, M, p);
  }
  return m;
}

void validate_representation(const BoundAlgebra& A, const Representation& M) {
  const Quiver& q = A.quiver();
  if (static_cast<int>(M.dims.size()) != q.num_vertices() ||
      static_cast<int>(M.maps.size()) != q.num_arrows())
    throw Error("representation: shape mismatch with the quiver");
  for (int a = 0; a < q.num_arrows(); ++a)
    if (M.maps[a].rows() != M.dims[q.target_of(a)] || M.maps[a].cols() != M.dims[q.source_of(a)])
      throw Error("representation: matrix shape mismatch on arrow " + q.arrow(a).id);
  for (const auto& r : A.relations())
    for (int u = 0; u < q.num_vertices(); ++u)
      for (int v = 0; v < q.num_vertices(); ++v)
        if (!act(A, M, r, u, v).isZero())
          throw Error("representation: relation does not act as zero");
}

std::vector<RepMorphism> rep_hom(const BoundAlgebra& A, const Representation& M,
                                 const Representation& N) {
  const Quiver& q = A.quiver();
  const int n = q.num_vertices();
  // Unknowns: entries of each block phi_v (N.dims[v] x M.dims[v]).
  std::vector<long> offset(n + 1, 0);
  for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + N.dims[v] * M.dims[v];
  const long unknowns = offset[n];
  std::vector<RatMat> rows;
  long eq_count = 0;
  for (int a = 0; a < q.num_arrows(); ++a)
    eq_count += N.dims[q.target_of(a)] * M.dims[q.source_of(a)];
  RatMat sys = RatMat::Zero(std::max<long>(eq_count, 1), std::max<long>(unknowns, 1));
  long row = 0;
  auto unknown_index = [&](int v, long r, long c) { return offset[v] + r * M.dims[v] + c; };
  for (int a = 0; a < q.num_arrows(); ++a) {
    const int s = q.source_of(a), t = q.target_of(a);
    // phi_t * M_a - N_a * phi_s = 0, entry (r, c): r < N.dims[t], c < M.dims[s]
    for (long r = 0; r < N.dims[t]; ++r)
      for (long c = 0; c < M.dims[s]; ++c) {
        for (long k = 0; k < M.dims[t]; ++k)
          sys(row, unknown_index(t, r, k)) += M.maps[a](k, c);
        for (long k = 0; k < N.dims[s]; ++k)
          sys(row, unknown_index(s, k, c)) -= N.maps[a](r, k);
        ++row;
      }
  }
  RatMat null_space = (unknowns == 0) ? RatMat::Zero(0, 0) : kernel_basis(sys.topRows(std::max<long>(row, 1)));
  std::vector<RepMorphism> out;
  for (long j = 0; j < null_space.cols(); ++j) {
    RepMorphism f;
    for (int v = 0; v < n; ++v) {
      RatMat b = RatMat::Zero(N.dims[v], M.dims[v]);
      for (long r = 0; r < N.dims[v]; ++r)
        for (long c = 0; c < M.dims[v]; ++c) b(r, c) = null_space(unknown_index(v, r, c), j);
      f.blocks.push_back(std::move(b));
    }
    out.push_back(std::move(f));
  }
  return out;
}

long hom_dim(const BoundAlgebra& A, const Representation& M, const Representation& N) {
  return static_cast<long>(rep_hom(A, M, N).size());
}

std::pair<Representation, RepMorphism> rep_kernel(const BoundAlgebra& A, const Representation& M,
                                                  const Representation& N, const RepMorphism& f) {
  (void)N;
  const Quiver& q = A.quiver();
  const int n = q.num_vertices();
  Representation K;
  RepMorphism incl;
  K.dims.assign(n, 0);
  std::vector<RatMat> basis(n);
  for (int v = 0; v < n; ++v) {
    basis[v] = kernel_basis(f.blocks[v]);
    K.dims[v] = basis[v].cols();
    incl.blocks.push_back(basis[v]);
  }
  for (int a = 0; a < q.num_arrows(); ++a) {
    const int s = q.source_of(a), t = q.target_of(a);
    // M_a restricted to kernels, expressed in the kernel basis of the target.
    RatMat img = M.maps[a] * basis[s];
    auto sol = solve_many(basis[t], img);
    if (!sol) throw Error("rep_kernel: kernel is not arrow-stable (internal error)");
    K.maps.push_back(*sol);
  }
  return {K, incl};
}

bool is_iso(const BoundAlgebra&, const Representation& M, const Representation& N,
            const RepMorphism& f) {
  if (M.dims != N.dims) return false;
  for (const auto& b : f.blocks)
    if (b.rows() != b.cols() || rank(b) != b.rows()) return false;
  return true;
}

bool directed_iso(const BoundAlgebra& A, const Representation& M, const Representation& N) {
  if (M.dims != N.dims) return false;
  if (M.total_dim() == 0) return true;
  return hom_dim(A, M, N) > 0 && hom_dim(A, N, M) > 0;
}

}  // namespace qpkit
