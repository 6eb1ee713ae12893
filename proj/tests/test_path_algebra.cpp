#include "helpers.hpp"

#include <doctest.h>

using namespace qpkit;
using namespace qpkit::testing;

TEST_SUITE("path_algebra") {
  TEST_CASE("idempotent action") {
    Quiver q = a2();
    PathVector e1 = PathVector::idempotent(q, q.vertex_index("1"));
    PathVector a = PathVector::arrow(q, q.arrow_index("a"));
    CHECK(multiply(q, e1, a) == a);
    CHECK(multiply(q, a, e1).is_zero());
    CHECK(multiply(q, a, PathVector::idempotent(q, q.vertex_index("2"))) == a);
  }

  TEST_CASE("concatenation and bilinearity with exact coefficients") {
    Quiver q = a3();
    PathVector a = PathVector::arrow(q, q.arrow_index("a"));
    PathVector b = PathVector::arrow(q, q.arrow_index("b"));
    PathVector ab = multiply(q, a, b);
    CHECK(ab == pv(q, {"a", "b"}));
    CHECK(multiply(q, b, a).is_zero());

    PathVector lhs = multiply(q, Rational(1, 2) * PathVector(a) + Rational(2, 3) * PathVector(a),
                              b);
    PathVector rhs = Rational(7, 6) * pv(q, {"a", "b"});
    CHECK(lhs == rhs);
  }

  TEST_CASE("multiplication is associative on random triples") {
    for (int trial = 0; trial < 30; ++trial) {
      QuiverWithPotential qp = random_qp(4, 5, 0);
      const Quiver& q = qp.quiver;
      auto random_vec = [&]() {
        PathVector v;
        std::uniform_int_distribution<int> terms(1, 3), len(0, 2), pick(0, q.num_arrows() - 1),
            pv_(0, q.num_vertices() - 1), cf(1, 5);
        int t = terms(rng());
        for (int i = 0; i < t; ++i) {
          int l = len(rng());
          Path p;
          if (l == 0) {
            p.source = pv_(rng());
          } else {
            int first = pick(rng());
            p.source = q.source_of(first);
            p.arrows = {first};
            for (int s = 1; s < l; ++s) {
              int tail = q.target_of(p.arrows.back());
              std::vector<int> opts;
              for (int a = 0; a < q.num_arrows(); ++a)
                if (q.source_of(a) == tail) opts.push_back(a);
              if (opts.empty()) break;
              std::uniform_int_distribution<int> po(0, static_cast<int>(opts.size()) - 1);
              p.arrows.push_back(opts[po(rng())]);
            }
          }
          v.add_term(p, Rational(cf(rng()), 3));
        }
        return v;
      };
      PathVector u = random_vec(), v = random_vec(), w = random_vec();
      CHECK(multiply(q, multiply(q, u, v), w) == multiply(q, u, multiply(q, v, w)));
    }
  }

  TEST_CASE("preprojective relation components on A2") {
    Quiver q = a2();
    Quiver dq;
    auto rels = preprojective_relations(q, &dq);
    REQUIRE(rels.size() == 2);
    // One component is a a* at vertex 1, the other a* a at vertex 2.
    PathVector at1 = pv(dq, {"a", "a*"});
    PathVector at2 = pv(dq, {"a*", "a"});
    CHECK(((rels[0] == at1 && rels[1] == at2) || (rels[0] == at2 && rels[1] == at1)));
  }

  TEST_CASE("preprojective relation components on the example quiver") {
    Quiver q = example_quiver();
    Quiver dq;
    auto rels = preprojective_relations(q, &dq);
    REQUIRE(rels.size() == 3);
    int at_two = dq.vertex_index("2");
    int found = -1;
    for (size_t i = 0; i < rels.size(); ++i)
      if (path_source(dq, rels[i].leading_path()) == at_two) found = static_cast<int>(i);
    REQUIRE(found >= 0);
    CHECK(rels[found].terms().size() == 3);
  }

  TEST_CASE("no arrows means no relations") {
    Quiver q({"1", "2"}, {});
    CHECK(preprojective_relations(q).empty());
  }
}
