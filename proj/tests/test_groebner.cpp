#include "helpers.hpp"

#include <doctest.h>

using namespace qpkit;
using namespace qpkit::testing;

TEST_SUITE("groebner") {
  TEST_CASE("free acyclic quotient is the whole path algebra") {
    Quiver q = a2();
    auto p = groebner(q, {}, 12);
    CHECK(p.complete);
    CHECK(p.verdict == Verdict::Finite);
    CHECK(p.normal_words.size() == 3);  // e1, e2, a
    auto d = quotient_dims(p);
    CHECK(d.total == 3);
    CHECK(d.by_vertex_pair[q.vertex_index("1")][q.vertex_index("2")] == 1);
  }

  TEST_CASE("three-cycle modulo the paths of length two") {
    Quiver q = three_cycle();
    auto p = groebner(q, {pv(q, {"b", "c"}), pv(q, {"c", "a"}), pv(q, {"a", "b"})}, 12);
    CHECK(p.complete);
    auto d = quotient_dims(p);
    CHECK(d.total == 6);
    // Independent oracle: enumerate paths and discard those containing a
    // leading word as a subword.
    CHECK(d.total == brute_quotient_dim(q, p.groebner, 13));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(d.by_vertex_pair[i][j] <= 1);
  }

  TEST_CASE("free loop is infinite") {
    Quiver q = one_loop();
    auto p = groebner(q, {}, 12);
    CHECK(p.verdict == Verdict::Infinite);
    auto d = quotient_dims(p);
    CHECK(d.verdict == Verdict::Infinite);
  }

  TEST_CASE("loop modulo t^2 is finite of dimension 2") {
    Quiver q = one_loop();
    auto p = groebner(q, {pv(q, {"t", "t"})}, 12);
    CHECK(p.complete);
    CHECK(quotient_dims(p).total == 2);
  }

  TEST_CASE("normal form is idempotent") {
    Quiver q = three_cycle();
    auto p = groebner(q, {pv(q, {"b", "c"}) + pv(q, {"c", "a"}, Rational(1, 2))}, 12);
    for (int trial = 0; trial < 20; ++trial) {
      PathVector f;
      std::uniform_int_distribution<int> pick(0, q.num_arrows() - 1), cf(1, 4);
      int a1 = pick(rng());
      f += PathVector::arrow(q, a1) * Rational(cf(rng()));
      PathVector prod = multiply(q, PathVector::arrow(q, a1),
                                 PathVector::arrow(q, (a1 + 1) % q.num_arrows()));
      f += prod;
      PathVector once = normal_form(q, p.groebner, f);
      CHECK(normal_form(q, p.groebner, once) == once);
    }
  }

  TEST_CASE("d_max below the generator degree is rejected") {
    Quiver q = one_loop();
    CHECK_THROWS_AS(groebner(q, {pv(q, {"t", "t", "t"})}, 2), Error);
  }

  TEST_CASE("inhomogeneous relation: loop with t^3 = t^2") {
    // t^2 - t^3: every t^k with k >= 3 rewrites to t^2, nothing kills t^2
    // itself (no completion), so the quotient has basis e, t, t^2.
    Quiver q = one_loop();
    auto p = groebner(q, {pv(q, {"t", "t"}) - pv(q, {"t", "t", "t"})}, 12);
    CHECK(p.complete);
    CHECK(quotient_dims(p).total == 3);
  }

  TEST_CASE("complete flag certifies dims against brute force on random acyclic quivers") {
    for (int trial = 0; trial < 10; ++trial) {
      Quiver q = random_acyclic_quiver();
      auto p = groebner(q, {}, 12);
      REQUIRE(p.complete);
      CHECK(quotient_dims(p).total == brute_quotient_dim(q, p.groebner, 13));
    }
  }
}

TEST_SUITE("groebner_truncation") {
  TEST_CASE("clipped overlaps report Inconclusive, never a guessed verdict") {
    Quiver q = qpkit::testing::one_loop();
    using namespace qpkit;
    auto p = groebner(q, {qpkit::testing::pv(q, {"t", "t", "t"}) -
                          qpkit::testing::pv(q, {"t", "t", "t", "t"})}, 5);
    CHECK_FALSE(p.saturated);
    CHECK(p.verdict == Verdict::Inconclusive);
    CHECK(quotient_dims(p).verdict == Verdict::Inconclusive);
    // With enough headroom the same input certifies exactly.
    auto p2 = groebner(q, {qpkit::testing::pv(q, {"t", "t", "t"}) -
                           qpkit::testing::pv(q, {"t", "t", "t", "t"})}, 12);
    CHECK(p2.complete);
    CHECK(quotient_dims(p2).total == 4);  // e, t, t^2, t^3
  }
}
