#include "qpkit/quiver.hpp"

#include <algorithm>

namespace qpkit {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::sort(vertices_.begin(), vertices_.end());
  std::sort(arrows_.begin(), arrows_.end(),
            [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
  for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) {
    if (!vindex_.emplace(vertices_[i], i).second)
      throw Error("duplicate vertex id '" + vertices_[i] + "'");
  }
  for (int i = 0; i < static_cast<int>(arrows_.size()); ++i) {
    const Arrow& a = arrows_[i];
    if (!aindex_.emplace(a.id, i).second) throw Error("duplicate arrow id '" + a.id + "'");
    auto s = vindex_.find(a.source);
    auto t = vindex_.find(a.target);
    if (s == vindex_.end())
      throw Error("dangling endpoint: arrow '" + a.id + "' has unknown source '" + a.source + "'");
    if (t == vindex_.end())
      throw Error("dangling endpoint: arrow '" + a.id + "' has unknown target '" + a.target + "'");
    src_.push_back(s->second);
    tgt_.push_back(t->second);
  }
}

int Quiver::vertex_index(const std::string& id) const {
  auto it = vindex_.find(id);
  if (it == vindex_.end()) throw Error("unknown vertex '" + id + "'");
  return it->second;
}

int Quiver::arrow_index(const std::string& id) const {
  auto it = aindex_.find(id);
  if (it == aindex_.end()) throw Error("unknown arrow '" + id + "'");
  return it->second;
}

bool Quiver::is_graded() const {
  return std::any_of(arrows_.begin(), arrows_.end(),
                     [](const Arrow& a) { return a.degree != 0; });
}

bool Quiver::is_acyclic() const {
  // Kahn on degree-0 arrows.
  const int n = num_vertices();
  std::vector<int> indeg(n, 0);
  for (int a = 0; a < num_arrows(); ++a)
    if (arrows_[a].degree == 0) ++indeg[tgt_[a]];
  std::vector<int> stack;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (int a = 0; a < num_arrows(); ++a) {
      if (arrows_[a].degree != 0 || src_[a] != v) continue;
      if (--indeg[tgt_[a]] == 0) stack.push_back(tgt_[a]);
    }
  }
  return seen == n;
}

std::vector<std::vector<long>> Quiver::adjacency() const {
  std::vector<std::vector<long>> adj(num_vertices(), std::vector<long>(num_vertices(), 0));
  for (int a = 0; a < num_arrows(); ++a) ++adj[src_[a]][tgt_[a]];
  return adj;
}

bool Quiver::operator==(const Quiver& o) const {
  if (vertices_ != o.vertices_) return false;
  if (arrows_.size() != o.arrows_.size()) return false;
  for (size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow &a = arrows_[i], &b = o.arrows_[i];
    if (a.id != b.id || a.source != b.source || a.target != b.target || a.degree != b.degree)
      return false;
  }
  return true;
}

Quiver opposite_quiver(const Quiver& q) {
  std::vector<Arrow> arrows;
  for (const Arrow& a : q.arrows()) arrows.push_back({a.id, a.target, a.source, a.degree});
  return Quiver(q.vertices(), std::move(arrows));
}

Quiver double_quiver(const Quiver& q) {
  if (q.is_graded()) throw Error("double_quiver: quiver must be ungraded");
  std::vector<Arrow> arrows = q.arrows();
  for (const Arrow& a : q.arrows()) {
    const std::string star = a.id + "*";
    if (std::any_of(q.arrows().begin(), q.arrows().end(),
                    [&](const Arrow& b) { return b.id == star; }))
      throw Error("double_quiver: reserved id '" + star + "' already in use");
    if (a.id.size() && a.id.back() == '*')
      throw Error("double_quiver: arrow id '" + a.id + "' ends in reserved suffix '*'");
    arrows.push_back({star, a.target, a.source, 0});
  }
  return Quiver(q.vertices(), std::move(arrows));
}

std::vector<std::vector<Integer>> path_count_matrix(const Quiver& q) {
  if (!q.is_acyclic()) throw Error("path_count_matrix: quiver has an oriented cycle");
  const int n = q.num_vertices();
  // Longest-path-free: sum over topological order. counts = sum_k A^k.
  std::vector<std::vector<Integer>> c(n, std::vector<Integer>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 1;
  auto adj = q.adjacency();
  for (int len = 0; len < n; ++len) {
    // c := I + c*A converges after <= n iterations for acyclic quivers.
    std::vector<std::vector<Integer>> next(n, std::vector<Integer>(n, 0));
    for (int i = 0; i < n; ++i) next[i][i] = 1;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (c[i][k] == 0) continue;
        for (int j = 0; j < n; ++j)
          if (adj[k][j]) next[i][j] += c[i][k] * adj[k][j];
      }
    if (next == c) break;
    c = std::move(next);
  }
  return c;
}

}  // namespace qpkit
