#include <doctest.h>

#include <random>

#include "comtrace/relation.hpp"

using namespace comtrace;

namespace {
using IntRel = PairRelation<int>;
}

TEST_CASE("compose pairs relations through the middle element") {
  const IntRel r{{1, 2}, {2, 3}};
  const IntRel s{{2, 9}, {3, 4}};
  CHECK(compose(r, s) == IntRel{{1, 9}, {2, 4}});
  CHECK(compose(r, IntRel{}).empty());
}

TEST_CASE("transitive closure of a chain") {
  const IntRel chain{{1, 2}, {2, 3}, {3, 4}};
  CHECK(transitive_closure(chain) ==
        IntRel{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(transitive_closure(IntRel{}).empty());
}

TEST_CASE("transitive closure is idempotent on random sparse relations") {
  std::mt19937 rng(7);
  for (int round = 0; round < 50; ++round) {
    IntRel rel;
    for (int i = 0; i < 10; ++i)
      rel.emplace(static_cast<int>(rng() % 6), static_cast<int>(rng() % 6));
    const auto once = transitive_closure(rel);
    CHECK(transitive_closure(once) == once);
    CHECK(is_transitive(once));
    for (const auto& p : rel) CHECK(once.count(p) == 1);
  }
}

TEST_CASE("covering of a chain is its Hasse diagram") {
  const IntRel total{{1, 2}, {1, 3}, {2, 3}};
  CHECK(covering(total) == IntRel{{1, 2}, {2, 3}});
  CHECK(covering(IntRel{}).empty());
}

TEST_CASE("covering is contained and regenerates partial orders") {
  std::mt19937 rng(11);
  for (int round = 0; round < 50; ++round) {
    IntRel rel;
    for (int i = 0; i < 8; ++i) {
      int a = static_cast<int>(rng() % 7);
      int b = static_cast<int>(rng() % 7);
      if (a < b) rel.emplace(a, b);  // acyclic by construction
    }
    const auto order = transitive_closure(rel);
    REQUIRE(is_partial_order(order));
    const auto cov = covering(order);
    for (const auto& p : cov) CHECK(order.count(p) == 1);
    CHECK(transitive_closure(cov) == order);
  }
}

TEST_CASE("strongly connected components split cycles from chains") {
  const std::set<int> ground{1, 2, 3, 4, 5};
  const IntRel rel{{1, 2}, {2, 3}, {3, 2}, {3, 4}, {5, 5}};
  const auto comps = strongly_connected_components(ground, rel);
  CHECK(comps == std::vector<std::set<int>>{{1}, {2, 3}, {4}, {5}});
}

TEST_CASE("scc of an empty relation is all singletons") {
  const std::set<int> ground{3, 1, 2};
  const auto comps = strongly_connected_components(ground, IntRel{});
  CHECK(comps == std::vector<std::set<int>>{{1}, {2}, {3}});
}

TEST_CASE("scc components mutually reach each other") {
  std::mt19937 rng(23);
  for (int round = 0; round < 40; ++round) {
    std::set<int> ground;
    for (int i = 0; i < 7; ++i) ground.insert(i);
    IntRel rel;
    for (int i = 0; i < 12; ++i)
      rel.emplace(static_cast<int>(rng() % 7), static_cast<int>(rng() % 7));
    const auto closure = transitive_closure(rel);
    auto reaches = [&](int a, int b) {
      return a == b || closure.count({a, b}) == 1;
    };
    const auto comps = strongly_connected_components(ground, rel);
    std::set<int> seen;
    for (const auto& comp : comps) {
      for (int x : comp) {
        CHECK(seen.insert(x).second);
        for (int y : comp) CHECK((reaches(x, y) && reaches(y, x)));
      }
    }
    CHECK(seen == ground);
  }
}
