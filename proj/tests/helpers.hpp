#pragma once

#include "qpkit/groebner.hpp"
#include "qpkit/potential.hpp"

#include <random>

// Shared fixtures and independent oracles for the test suites.

namespace qpkit::testing {

inline Quiver a2() {
  return Quiver({"1", "2"}, {{"a", "1", "2", 0}});
}

inline Quiver a3() {
  return Quiver({"1", "2", "3"}, {{"a", "1", "2", 0}, {"b", "2", "3", 0}});
}

inline Quiver a4() {
  return Quiver({"1", "2", "3", "4"},
                {{"a", "1", "2", 0}, {"b", "2", "3", 0}, {"c", "3", "4", 0}});
}

// The wild example quiver: 1 -> 2 <= 3 (double arrow from 3 to 2).
inline Quiver example_quiver() {
  return Quiver({"1", "2", "3"}, {{"a", "1", "2", 0}, {"b", "3", "2", 0}, {"b'", "3", "2", 0}});
}

inline Quiver three_cycle() {
  return Quiver({"1", "2", "3"}, {{"a", "1", "2", 0}, {"b", "2", "3", 0}, {"c", "3", "1", 0}});
}

inline Quiver one_loop() {
  return Quiver({"1"}, {{"t", "1", "1", 0}});
}

inline QuiverWithPotential three_cycle_qp() {
  Quiver q = three_cycle();
  QuiverWithPotential qp{q, {}};
  Path abc{0, {q.arrow_index("a"), q.arrow_index("b"), q.arrow_index("c")}};
  abc.source = q.source_of(q.arrow_index("a"));
  qp.potential.add_cycle(q, abc, 1);
  return qp;
}

// Path p as a PathVector from arrow ids.
inline PathVector pv(const Quiver& q, const std::vector<std::string>& arrow_ids,
                     const Rational& c = 1) {
  Path p;
  p.arrows.reserve(arrow_ids.size());
  for (const auto& id : arrow_ids) p.arrows.push_back(q.arrow_index(id));
  p.source = q.source_of(p.arrows.front());
  return PathVector::monomial(q, p, c);
}

// Brute-force dimension oracle: counts composable paths of length < max_len
// avoiding the leading words; independent of the reduction engine.
inline long brute_quotient_dim(const Quiver& q, const std::vector<PathVector>& gb, long max_len) {
  return static_cast<long>(enumerate_normal_words(q, gb, max_len).size());
}

inline std::mt19937& rng() {
  static std::mt19937 gen(20240913);
  return gen;
}

inline Quiver random_acyclic_quiver(int max_vertices = 5, int max_arrows = 6) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  int n = nv(rng());
  std::vector<std::string> vertices;
  for (int i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i));
  std::uniform_int_distribution<int> na(0, max_arrows);
  std::vector<Arrow> arrows;
  int m = na(rng());
  for (int k = 0; k < m && n > 1; ++k) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    int i = pick(rng()), j = pick(rng());
    if (i == j) continue;
    if (i > j) std::swap(i, j);  // arrows go up the vertex order: acyclic
    arrows.push_back({"e" + std::to_string(k), vertices[i], vertices[j], 0});
  }
  return Quiver(std::move(vertices), std::move(arrows));
}

// Random quiver that may have cycles and loops, plus a random potential.
inline QuiverWithPotential random_qp(int max_vertices = 4, int max_arrows = 6,
                                     int max_cycles = 3) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  int n = nv(rng());
  std::vector<std::string> vertices;
  for (int i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i));
  std::uniform_int_distribution<int> na(1, max_arrows);
  std::vector<Arrow> arrows;
  int m = na(rng());
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int k = 0; k < m; ++k)
    arrows.push_back({"e" + std::to_string(k), vertices[pick(rng())], vertices[pick(rng())], 0});
  Quiver q(std::move(vertices), std::move(arrows));

  QuiverWithPotential qp{q, {}};
  std::uniform_int_distribution<int> nc(0, max_cycles);
  std::uniform_int_distribution<int> len_dist(1, 4);
  std::uniform_int_distribution<int> coeff_dist(0, 4);
  const Rational coeffs[5] = {1, -1, 2, Rational(1, 2), Rational(-3, 2)};
  int want = nc(rng());
  for (int c = 0; c < want * 8 && want > 0; ++c) {
    // Random walk of the chosen length; keep it when it closes up.
    int len = len_dist(rng());
    std::uniform_int_distribution<int> pa(0, q.num_arrows() - 1);
    Path p;
    int first = pa(rng());
    p.source = q.source_of(first);
    p.arrows = {first};
    bool ok = true;
    for (int s = 1; s < len; ++s) {
      int tail = q.target_of(p.arrows.back());
      std::vector<int> options;
      for (int a = 0; a < q.num_arrows(); ++a)
        if (q.source_of(a) == tail) options.push_back(a);
      if (options.empty()) { ok = false; break; }
      std::uniform_int_distribution<int> po(0, static_cast<int>(options.size()) - 1);
      p.arrows.push_back(options[po(rng())]);
    }
    if (!ok || path_target(q, p) != p.source) continue;
    qp.potential.add_cycle(q, p, coeffs[coeff_dist(rng())]);
    if (--want == 0) break;
  }
  return qp;
}

}  // namespace qpkit::testing
