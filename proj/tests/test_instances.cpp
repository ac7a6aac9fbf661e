#include <catch2/catch_amalgamated.hpp>

#include "spansub/instances.hpp"
#include "support/test_helpers.hpp"

using namespace spansub;

TEST_CASE("gen_random_semidegree") {
  SECTION("degree audit") {
    Digraph d = gen_random_semidegree(100, 0.1, 51);
    CHECK(min_semi_degree(d) >= 60);
  }
  SECTION("probability one gives the complete bidirected digraph") {
    Digraph d = gen_random_semidegree(30, 0.45, 52);
    CHECK(d.arc_count() == 30LL * 29);
    CHECK(min_semi_degree(d) == 29);
  }
  SECTION("determinism") {
    Digraph a = gen_random_semidegree(80, 0.15, 53);
    Digraph b = gen_random_semidegree(80, 0.15, 53);
    CHECK(a.arcs() == b.arcs());
    Digraph c = gen_random_semidegree(80, 0.15, 54);
    CHECK(a.arcs() != c.arcs());
  }
  SECTION("infeasible parameters") {
    CHECK_THROWS_AS(gen_random_semidegree(100, 0.46, 1), InfeasibleDensity);
    CHECK_THROWS_AS(gen_random_semidegree(4, 0.45, 1), InfeasibleDensity);
    CHECK_THROWS_AS(gen_random_semidegree(3, 0.1, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_random_semidegree(10, 0.0, 1), std::invalid_argument);
  }
}

TEST_CASE("gen_extremal") {
  SECTION("side sizes and semi-degree") {
    Digraph d = gen_extremal(20, 1, 2);
    CHECK(d.order() == 20);
    CHECK(min_semi_degree(d) == 7);
    CHECK(d.arc_count() == 2LL * 7 * 13);
  }
  SECTION("odd order") {
    Digraph d = gen_extremal(11, 1, 2);
    // |A| = floor(11/2) - 3 = 2, |B| = 9
    CHECK(min_semi_degree(d) == 2);
    CHECK(d.arc_count() == 2LL * 2 * 9);
  }
  SECTION("underlying graph is bipartite: no intra-side arcs") {
    Digraph d = gen_extremal(18, 2, 3);
    int a = 18 / 2 - 5;
    for (Vertex u = 0; u < d.order(); ++u)
      for (Vertex v = 0; v < d.order(); ++v) {
        if (u == v) continue;
        bool cross = (u < a) != (v < a);
        CHECK(d.has_arc(u, v) == cross);
      }
  }
  SECTION("invalid sizes") {
    CHECK_THROWS_AS(gen_extremal(10, 2, 3), InvalidSizes);
    CHECK_THROWS_AS(gen_extremal(12, 4, 2), InvalidSizes);
  }
}

TEST_CASE("gen_random_pattern") {
  SECTION("one arc means one arc on two vertices") {
    PatternDigraph h = gen_random_pattern(1, 61);
    CHECK(h.arc_count() == 1);
    CHECK(h.vertex_count() == 2);
  }
  SECTION("audits over many seeds") {
    for (int m = 1; m <= 8; ++m)
      for (std::uint64_t seed = 0; seed < 8; ++seed) {
        PatternDigraph h = gen_random_pattern(m, seed);
        CHECK(h.arc_count() == m);
        CHECK(h.vertex_count() <= 2 * m);
        for (Vertex v = 0; v < h.vertex_count(); ++v)
          CHECK(h.digraph().out_degree(v) + h.digraph().in_degree(v) > 0);
      }
  }
  SECTION("determinism") {
    CHECK(gen_random_pattern(5, 62).arcs() == gen_random_pattern(5, 62).arcs());
  }
  SECTION("m must be positive") {
    CHECK_THROWS_AS(gen_random_pattern(0, 1), std::invalid_argument);
  }
}
