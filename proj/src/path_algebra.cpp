#include "qpkit/path_algebra.hpp"

#include <sstream>

namespace qpkit {

int path_source(const Quiver&, const Path& p) { return p.source; }

int path_target(const Quiver& q, const Path& p) {
  if (p.is_vertex()) return p.source;
  return q.target_of(p.arrows.back());
}

bool path_composable(const Quiver& q, const Path& p) {
  if (p.is_vertex()) return p.source >= 0 && p.source < q.num_vertices();
  if (q.source_of(p.arrows.front()) != p.source) return false;
  for (size_t i = 0; i + 1 < p.arrows.size(); ++i)
    if (q.target_of(p.arrows[i]) != q.source_of(p.arrows[i + 1])) return false;
  return true;
}

std::string path_to_string(const Quiver& q, const Path& p) {
  if (p.is_vertex()) return "e_" + q.vertex(p.source);
  std::string s;
  for (size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += ".";
    s += q.arrow(p.arrows[i]).id;
  }
  return s;
}

std::optional<Path> concat(const Quiver& q, const Path& a, const Path& b) {
  if (path_target(q, a) != path_source(q, b)) return std::nullopt;
  if (a.is_vertex()) return b;
  Path out = a;
  out.arrows.insert(out.arrows.end(), b.arrows.begin(), b.arrows.end());
  return out;
}

PathVector PathVector::idempotent(const Quiver& q, int vertex) {
  if (vertex < 0 || vertex >= q.num_vertices()) throw Error("idempotent: bad vertex index");
  PathVector v;
  v.add_term(Path{vertex, {}}, 1);
  return v;
}

PathVector PathVector::arrow(const Quiver& q, int arrow) {
  PathVector v;
  v.add_term(Path{q.source_of(arrow), {arrow}}, 1);
  return v;
}

PathVector PathVector::monomial(const Quiver& q, Path p, Rational c) {
  if (!path_composable(q, p)) throw Error("monomial: path is not composable");
  PathVector v;
  v.add_term(std::move(p), c);
  return v;
}

void PathVector::add_term(Path p, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(std::move(p), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int PathVector::max_length() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.length();
}

const Path& PathVector::leading_path() const {
  if (terms_.empty()) throw Error("leading_path of zero");
  return terms_.rbegin()->first;
}

const Rational& PathVector::leading_coeff() const {
  if (terms_.empty()) throw Error("leading_coeff of zero");
  return terms_.rbegin()->second;
}

PathVector& PathVector::operator+=(const PathVector& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

PathVector& PathVector::operator-=(const PathVector& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

PathVector& PathVector::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, coeff] : terms_) coeff *= c;
  return *this;
}

PathVector multiply(const Quiver& q, const Path& a, const Path& b) {
  auto p = concat(q, a, b);
  PathVector v;
  if (p) v.add_term(*p, 1);
  return v;
}

PathVector multiply(const Quiver& q, const PathVector& u, const PathVector& v) {
  PathVector out;
  for (const auto& [pu, cu] : u.terms())
    for (const auto& [pv, cv] : v.terms()) {
      auto p = concat(q, pu, pv);
      if (p) out.add_term(*p, cu * cv);
    }
  return out;
}

std::string to_string(const Quiver& q, const PathVector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
    Rational c = it->second;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Rational mag = abs(c);
    if (mag != 1) os << mag.get_str() << "*";
    os << path_to_string(q, it->first);
  }
  return os.str();
}

std::vector<PathVector> preprojective_relations(const Quiver& q, Quiver* doubled_out) {
  Quiver dq = double_quiver(q);
  std::vector<PathVector> components(dq.num_vertices());
  for (const Arrow& a : q.arrows()) {
    int ai = dq.arrow_index(a.id);
    int si = dq.arrow_index(a.id + "*");
    // a a* is a cycle at s(a), a* a a cycle at t(a).
    Path aa{dq.source_of(ai), {ai, si}};
    Path sa{dq.source_of(si), {si, ai}};
    components[dq.source_of(ai)].add_term(aa, 1);
    components[dq.source_of(si)].add_term(sa, 1);
  }
  std::vector<PathVector> out;
  for (auto& c : components)
    if (!c.is_zero()) out.push_back(std::move(c));
  if (doubled_out) *doubled_out = dq;
  return out;
}

}  // namespace qpkit
