#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "spansub/absorber.hpp"
#include "spansub/instances.hpp"
#include "support/test_helpers.hpp"

using namespace spansub;

namespace {

void require_valid_absorption(const Digraph& d, const AbsorbingPath& a, const std::vector<Vertex>& seq,
                              const VertexSet& expected_vertices, std::pair<Vertex, Vertex> endpoints) {
  REQUIRE(seq.size() == static_cast<std::size_t>(expected_vertices.count()));
  CHECK(testutil::all_distinct(seq, d.order()));
  CHECK(testutil::arc_path(d, seq));
  CHECK(seq.front() == endpoints.first);
  CHECK(seq.back() == endpoints.second);
  for (Vertex v : seq) CHECK(expected_vertices.test(v));
  (void)a;
}

}  // namespace

TEST_CASE("good_tuples_for") {
  SECTION("complete bidirected on 4 vertices: all six ordered pairs") {
    Digraph d = testutil::complete_bidirected(4);
    for (Vertex u = 0; u < 4; ++u) {
      auto tuples = good_tuples_for(d, u);
      CHECK(tuples.size() == 6);
      CHECK(good_tuple_count(d, u) == 6);
    }
  }
  SECTION("directed triangle has none") {
    Digraph d = testutil::directed_cycle(3);
    for (Vertex u = 0; u < 3; ++u) CHECK(good_tuples_for(d, u).empty());
  }
  SECTION("matches a brute-force enumeration") {
    Digraph d = testutil::random_digraph(30, 0.4, 31);
    for (Vertex u = 0; u < d.order(); ++u) {
      std::set<std::pair<Vertex, Vertex>> brute;
      for (Vertex v = 0; v < 30; ++v)
        for (Vertex w = 0; w < 30; ++w)
          if (v != w && d.has_arc(v, u) && d.has_arc(u, w) && d.has_arc(v, w)) brute.insert({v, w});
      auto got = good_tuples_for(d, u);
      CHECK(got.size() == brute.size());
      CHECK(good_tuple_count(d, u) == static_cast<long long>(brute.size()));
      for (auto& t : got) CHECK(brute.count(t) == 1);
    }
  }
  SECTION("degree floor forces 4*eps^2*n^2 good tuples everywhere") {
    Digraph d = gen_random_semidegree(100, 0.1, 32);
    for (Vertex u = 0; u < 100; ++u) CHECK(good_tuple_count(d, u) >= 400);
  }
}

TEST_CASE("build_absorbing_path shape") {
  SECTION("complete bidirected host, alpha 0.3") {
    Digraph d = testutil::complete_bidirected(60);
    AbsorbingPath a = build_absorbing_path(d, 0.3, 0.05, 0.2, 33);
    CHECK(a.slot_count() <= 6);
    CHECK(a.spine().size() == static_cast<std::size_t>(3 * a.slot_count() - 1));
    CHECK(a.spine().size() <= 17);
    CHECK(testutil::arc_path(d, a.spine()));
    CHECK(testutil::all_distinct(a.spine(), 60));
    for (int i = 0; i < a.slot_count(); ++i) {
      auto [v, w] = a.slot(i);
      CHECK(d.has_arc(v, w));
      CHECK(a.slot_free(i));
    }
  }
  SECTION("single-slot path is just v1 w1") {
    Digraph d = testutil::complete_bidirected(30);
    AbsorbingPath a = build_absorbing_path(d, 0.115, 0.03, 0.2, 34);
    CHECK(a.slot_count() == 1);
    CHECK(a.spine().size() == 2);
  }
  SECTION("degree floor enforced") {
    CHECK_THROWS_AS(build_absorbing_path(testutil::directed_cycle(20), 0.2, 0.02, 0.1, 1), InvalidDegree);
  }
}

TEST_CASE("absorb") {
  SECTION("empty leftover returns the spine unchanged") {
    Digraph d = testutil::complete_bidirected(40);
    AbsorbingPath a = build_absorbing_path(d, 0.3, 0.05, 0.2, 35);
    auto before = a.sequence();
    auto seq = absorb(d, a, VertexSet(40));
    CHECK(seq == before);
    CHECK(seq == a.spine());
  }
  SECTION("single slot absorbs one vertex") {
    Digraph d(3);
    d.add_arc(0, 1);  // slot arc v1->w1
    d.add_arc(0, 2);  // v1->u
    d.add_arc(2, 1);  // u->w1
    AbsorbingPath a = AbsorbingPath::from_parts(d, {0, 1}, 0.5, 1);
    VertexSet u(3);
    u.set(2);
    auto seq = absorb(d, a, u);
    CHECK(seq == std::vector<Vertex>{0, 2, 1});
    CHECK(a.free_slot_count() == 0);
  }
  SECTION("random leftover sets on a generated host") {
    Digraph d = gen_random_semidegree(200, 0.15, 36);
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
      AbsorbingPath a = build_absorbing_path(d, 0.2, 0.02, 0.15, 37);
      auto endpoints = a.endpoints();
      VertexSet expected = a.vertex_set();
      auto outside = (d.all_vertices() - expected).to_vector();
      shuffle_inplace(rng, outside);
      VertexSet leftover(200);
      for (int i = 0; i < 4; ++i) {  // ceil(0.02 * 200)
        leftover.set(outside[i]);
        expected.set(outside[i]);
      }
      auto seq = absorb(d, a, leftover);
      require_valid_absorption(d, a, seq, expected, endpoints);
    }
  }
  SECTION("sequential absorption matches one-shot absorption's contract") {
    Digraph d = gen_random_semidegree(200, 0.15, 38);
    AbsorbingPath twice = build_absorbing_path(d, 0.2, 0.02, 0.15, 39);
    AbsorbingPath once = build_absorbing_path(d, 0.2, 0.02, 0.15, 39);
    REQUIRE(twice.spine() == once.spine());

    auto outside = (d.all_vertices() - twice.vertex_set()).to_vector();
    VertexSet u1(200), u2(200), both(200);
    u1.set(outside[0]);
    u1.set(outside[1]);
    u2.set(outside[2]);
    u2.set(outside[3]);
    for (int i = 0; i < 4; ++i) both.set(outside[i]);

    VertexSet expected = twice.vertex_set() | both;
    auto endpoints = twice.endpoints();
    absorb(d, twice, u1);
    auto seq_twice = absorb(d, twice, u2);
    auto seq_once = absorb(d, once, both);
    require_valid_absorption(d, twice, seq_twice, expected, endpoints);
    require_valid_absorption(d, once, seq_once, expected, endpoints);
  }
  SECTION("precondition violations") {
    Digraph d = testutil::complete_bidirected(40);
    AbsorbingPath a = build_absorbing_path(d, 0.3, 0.05, 0.2, 40);
    VertexSet touching(40);
    touching.set(a.spine()[0]);
    CHECK_THROWS_AS(absorb(d, a, touching), std::invalid_argument);

    VertexSet too_many(40);
    int cap = static_cast<int>(std::ceil(0.05 * 40));
    auto outside = (d.all_vertices() - a.vertex_set()).to_vector();
    for (int i = 0; i <= cap; ++i) too_many.set(outside[i]);
    CHECK_THROWS_AS(absorb(d, a, too_many), std::invalid_argument);
  }
  SECTION("honest failure when no compatible slot exists") {
    Digraph d(4);
    d.add_arc(0, 1);
    d.add_arc(2, 3);  // vertex 2,3 unrelated to the slot
    AbsorbingPath a = AbsorbingPath::from_parts(d, {0, 1}, 0.9, 0);
    VertexSet u(4);
    u.set(3);
    CHECK_THROWS_AS(absorb(d, a, u), AbsorptionFailed);
  }
}

TEST_CASE("capacity floor is verified exhaustively when uncapped") {
  Digraph d = gen_random_semidegree(300, 0.15, 41);
  AbsorbingPath a = build_absorbing_path(d, 0.3, 0.005, 0.15, 42);
  const int need = static_cast<int>(std::ceil(0.005 * 300));
  REQUIRE(a.capacity_floor() >= need);
  VertexSet inside = a.vertex_set();
  for (Vertex u = 0; u < 300; ++u) {
    if (inside.test(u)) continue;
    CHECK(a.compatible_free_slot_count(d, u) >= need);
  }
}

TEST_CASE("from_parts validates the spine") {
  Digraph d(4);
  d.add_arc(0, 1);
  CHECK_THROWS_AS(AbsorbingPath::from_parts(d, {0, 2}, 0.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(AbsorbingPath::from_parts(d, {0, 1, 2}, 0.5, 0), std::invalid_argument);
}
