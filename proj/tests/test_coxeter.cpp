#include "qpkit/coxeter.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace qpkit;
using namespace qpkit::testing;

TEST_SUITE("coxeter") {
  TEST_CASE("exponents from the example quiver graph") {
    CoxeterSystem w(example_quiver());
    CHECK(w.exponent(0, 1) == 3);  // single edge 1-2
    CHECK(w.exponent(1, 2) == 0);  // double edge 2-3: infinity
    CHECK(w.exponent(0, 2) == 2);  // no edge 1-3
  }

  TEST_CASE("empty word and involutions") {
    CoxeterSystem w(a3());
    CHECK(w.is_reduced({}));
    CHECK_FALSE(w.is_reduced({1, 1}));
    CHECK(w.length({1, 1}) == 0);
  }

  TEST_CASE("the word 232132 is reduced in the example system") {
    CoxeterSystem w(example_quiver());
    auto word = parse_word("232132", w.rank());
    CHECK(word == std::vector<int>{1, 2, 1, 0, 2, 1});
    CHECK(w.is_reduced(word));
    CHECK(w.length(word) == 6);
  }

  TEST_CASE("letters out of range are rejected") {
    CoxeterSystem w(a2());
    CHECK_THROWS_AS(w.is_reduced({2}), Error);
    CHECK_THROWS_AS(parse_word("3", 2), Error);
  }

  TEST_CASE("equal elements under commutation and braid moves") {
    CoxeterSystem w(a3());  // m12 = 3, m23 = 3, m13 = 2
    CHECK(w.equal_elements({0, 2}, {2, 0}));
    CHECK(w.equal_elements({0, 1, 0}, {1, 0, 1}));
    CHECK_FALSE(w.equal_elements({0, 1}, {1, 0}));
    CHECK(w.equal_elements({0, 1, 2}, {0, 1, 2}));
  }

  TEST_CASE("length is invariant under random braid and commutation moves") {
    CoxeterSystem w(example_quiver());  // m = (3, inf, 2)
    std::uniform_int_distribution<int> letter(0, 2), len(3, 9), move(0, 1);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<int> word;
      int l = len(rng());
      for (int i = 0; i < l; ++i) word.push_back(letter(rng()));
      long base_len = w.length(word);
      std::vector<int> moved = word;
      // Try a few random legal rewrites.
      for (int k = 0; k < 6; ++k) {
        std::uniform_int_distribution<int> pos_dist(0, static_cast<int>(moved.size()) - 2);
        int pos = pos_dist(rng());
        int a = moved[pos], b = moved[pos + 1];
        if (move(rng()) == 0 && w.exponent(a, b) == 2 && a != b) {
          std::swap(moved[pos], moved[pos + 1]);
        } else if (w.exponent(a, b) == 3 && pos + 2 < static_cast<int>(moved.size()) &&
                   moved[pos + 2] == a && a != b) {
          moved[pos] = b;
          moved[pos + 1] = a;
          moved[pos + 2] = b;
        }
      }
      CHECK(w.length(moved) == base_len);
      CHECK(w.equal_elements(word, moved));
    }
  }

  TEST_CASE("is_reduced agrees with length") {
    CoxeterSystem w(a3());
    std::uniform_int_distribution<int> letter(0, 2), len(1, 8);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<int> word;
      int l = len(rng());
      for (int i = 0; i < l; ++i) word.push_back(letter(rng()));
      CHECK(w.is_reduced(word) == (w.length(word) == static_cast<long>(word.size())));
    }
  }
}
