#include "helpers.hpp"

#include <doctest.h>

using namespace qpkit;
using namespace qpkit::testing;

TEST_SUITE("quiver") {
  TEST_CASE("minimal quiver") {
    Quiver q({"1"}, {});
    CHECK(q.num_vertices() == 1);
    CHECK(q.num_arrows() == 0);
  }

  TEST_CASE("example quiver has the expected shape") {
    Quiver q = example_quiver();
    CHECK(q.num_vertices() == 3);
    CHECK(q.num_arrows() == 3);
    CHECK(q.source_of(q.arrow_index("a")) == q.vertex_index("1"));
    CHECK(q.target_of(q.arrow_index("b'")) == q.vertex_index("2"));
  }

  TEST_CASE("dangling endpoints and duplicates are rejected") {
    CHECK_THROWS_AS(Quiver({"1", "2", "3"}, {{"a", "4", "2", 0}}), Error);
    CHECK_THROWS_AS(Quiver({"1", "1"}, {}), Error);
    CHECK_THROWS_AS(Quiver({"1", "2"}, {{"a", "1", "2", 0}, {"a", "2", "1", 0}}), Error);
  }

  TEST_CASE("opposite is an involution and fixes loops") {
    Quiver q = example_quiver();
    CHECK(opposite_quiver(opposite_quiver(q)) == q);
    Quiver loop = one_loop();
    CHECK(opposite_quiver(loop) == loop);
    Quiver a2q = a2();
    Quiver op = opposite_quiver(a2q);
    CHECK(op.source_of(op.arrow_index("a")) == op.vertex_index("2"));
  }

  TEST_CASE("double quiver doubles the arrow count") {
    CHECK(double_quiver(example_quiver()).num_arrows() == 6);
    Quiver empty({"1", "2"}, {});
    CHECK(double_quiver(empty).num_arrows() == 0);
    Quiver d = double_quiver(a2());
    CHECK(d.num_arrows() == 2);
    CHECK(d.source_of(d.arrow_index("a*")) == d.vertex_index("2"));
    CHECK_THROWS_AS(double_quiver(Quiver({"1"}, {{"t*", "1", "1", 0}})), Error);
  }

  TEST_CASE("acyclicity detection") {
    CHECK(example_quiver().is_acyclic());
    CHECK_FALSE(three_cycle().is_acyclic());
    CHECK_FALSE(one_loop().is_acyclic());
  }

  TEST_CASE("path counts on A3") {
    auto c = path_count_matrix(a3());
    Quiver q = a3();
    int v1 = q.vertex_index("1"), v3 = q.vertex_index("3");
    CHECK(c[v1][v3] == 1);
    CHECK(c[v1][v1] == 1);
    CHECK(c[v3][v1] == 0);
  }
}
