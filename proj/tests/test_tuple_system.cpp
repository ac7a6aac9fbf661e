#include <catch2/catch_amalgamated.hpp>

#include "spansub/absorber.hpp"
#include "spansub/connector.hpp"
#include "spansub/instances.hpp"
#include "spansub/tuple_system.hpp"
#include "support/test_helpers.hpp"

using namespace spansub;

namespace {

FnTupleSystem everything_system(int indices, int ground, int t, double d) {
  return {indices, ground, t, d, [](int, std::span<const Vertex>) { return true; }, nullptr};
}

FnTupleSystem nothing_system(int indices, int ground, int t, double d) {
  return {indices, ground, t, d, [](int, std::span<const Vertex>) { return false; }, nullptr};
}

}  // namespace

TEST_CASE("verify_tuple_system") {
  SECTION("all-member predicate is valid for any density up to 1") {
    CHECK(verify_tuple_system(everything_system(5, 30, 1, 1.0)).ok);
    CHECK(verify_tuple_system(everything_system(5, 30, 2, 0.9)).ok);
  }
  SECTION("empty predicate is deficient everywhere") {
    auto report = verify_tuple_system(nothing_system(4, 30, 1, 0.1));
    CHECK_FALSE(report.ok);
    CHECK(report.deficient.size() == 4);
    CHECK(report.deficient[0].count == 0);
  }
  SECTION("arity above 3 is refused") {
    CHECK_THROWS_AS(verify_tuple_system(everything_system(1, 10, 4, 0.5)), InvalidSystem);
  }
  SECTION("pair/common-neighbour system meets density 0.2 at eps = 0.1") {
    Digraph d = gen_random_semidegree(100, 0.1, 11);
    PairCommonSystem sys{&d, 0.2};
    CHECK(verify_tuple_system(sys).ok);
  }
}

TEST_CASE("select_family basics") {
  SECTION("singleton index, permissive membership") {
    auto sys = everything_system(1, 100, 1, 1.0);
    TupleFamily f = select_family(sys, 0.3, 0.1, 5);
    CHECK(f.size() >= 10);
    CHECK(f.size() <= 30);
    auto check = check_family(sys, f, 0.3, 0.1);
    CHECK(check.ok);
  }
  SECTION("coverage demand beyond the size cap fails fast") {
    auto sys = everything_system(1, 100, 1, 1.0);
    CHECK_THROWS_AS(select_family(sys, 0.3, 0.4, 5), FamilyNotFound);
  }
  SECTION("impossible membership cannot cover") {
    auto sys = nothing_system(3, 100, 1, 1.0);
    CHECK_THROWS_AS(select_family(sys, 0.3, 0.05, 5, 2), FamilyNotFound);
  }
  SECTION("tuples keep distinct entries") {
    Digraph d = gen_random_semidegree(120, 0.15, 12);
    GoodTupleSystem sys{&d, 0.2};
    TupleFamily f = select_family(sys, 0.3, 0.01, 6);
    for (const Tuple& z : f) {
      CHECK(z.arity() == 2);
      CHECK(z.entries_distinct());
      CHECK(d.has_arc(z[0], z[1]));
    }
  }
}

TEST_CASE("check_family re-derives everything") {
  auto sys = everything_system(2, 50, 2, 1.0);

  SECTION("empty family with zero coverage demand is fine") {
    CHECK(check_family(sys, {}, 0.3, 0.0).ok);
  }
  SECTION("sharing an element across tuples is a violation") {
    TupleFamily f{{1, 2}, {3, 1}};
    auto rep = check_family(sys, f, 0.5, 0.0);
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.overlapping.size() == 1);
    CHECK(rep.overlapping[0] == std::pair<int, int>{0, 1});
  }
  SECTION("size cap enforced") {
    TupleFamily f;
    for (int i = 0; i < 10; ++i) f.push_back({4 * i, 4 * i + 1});
    auto rep = check_family(sys, f, 0.1, 0.0);  // cap = 0.1/2*50 = 2.5
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.size_ok);
  }
  SECTION("coverage deficiencies are counted from scratch") {
    FnTupleSystem sys2{2, 50, 1, 1.0,
                       [](int x, std::span<const Vertex> z) { return x == 0 || z[0] < 3; }, nullptr};
    TupleFamily f{{10}, {11}, {12}};
    auto rep = check_family(sys2, f, 0.5, 0.04);  // need 2 per index
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.deficient.size() == 1);
    CHECK(rep.deficient[0].index == 1);
    CHECK(rep.deficient[0].count == 0);
    CHECK(rep.deficient[0].required == 2);
  }
  SECTION("malformed tuples are flagged") {
    TupleFamily f{{1, 1}};
    CHECK_FALSE(check_family(sys, f, 0.5, 0.0).tuples_wellformed);
  }
}

TEST_CASE("selection round-trips against the independent checker") {
  Digraph d = gen_random_semidegree(200, 0.15, 13);

  SECTION("arity 1: pair system") {
    PairCommonSystem sys{&d, 0.3};
    for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
      TupleFamily f = select_family(sys, 0.2, 0.02, seed);
      CHECK(check_family(sys, f, 0.2, 0.02).ok);
    }
  }
  SECTION("arity 2: good-tuple system") {
    GoodTupleSystem sys{&d, 0.25};
    for (std::uint64_t seed : {1, 2, 3}) {
      TupleFamily f = select_family(sys, 0.3, 0.01, seed);
      CHECK(check_family(sys, f, 0.3, 0.01).ok);
    }
  }
}

TEST_CASE("determinism and monotonicity") {
  Digraph d = gen_random_semidegree(150, 0.15, 14);
  PairCommonSystem sys{&d, 0.3};

  SECTION("same seed, same family") {
    TupleFamily a = select_family(sys, 0.2, 0.02, 99);
    TupleFamily b = select_family(sys, 0.2, 0.02, 99);
    CHECK(a == b);
  }
  SECTION("different seeds usually differ") {
    TupleFamily a = select_family(sys, 0.2, 0.02, 1);
    TupleFamily b = select_family(sys, 0.2, 0.02, 2);
    CHECK(a != b);
  }
  SECTION("lowering beta cannot break success") {
    TupleFamily strict = select_family(sys, 0.2, 0.02, 7);
    CHECK(check_family(sys, strict, 0.2, 0.02).ok);
    TupleFamily loose = select_family(sys, 0.2, 0.01, 7);
    CHECK(check_family(sys, loose, 0.2, 0.01).ok);
  }
}
