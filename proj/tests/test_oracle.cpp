#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "sqroot/oracle.hpp"
#include "support/test_support.hpp"

using namespace sqroot;
using testsup::connected_classes;

namespace {

using testsup::exhaustive_minimal_roots;

std::set<EdgeList> witness_edge_sets(const std::vector<RootWitness>& ws) {
  std::set<EdgeList> out;
  for (const auto& w : ws) out.insert(w.edge_set);
  return out;
}

}  // namespace

TEST_CASE("is_square_root basics", "[oracle]") {
  CHECK(is_square_root(path_graph(3), complete_graph(3)));
  CHECK(is_square_root(cycle_graph(5), complete_graph(5)));
  CHECK_FALSE(is_square_root(path_graph(4), complete_graph(4)));
  CHECK_THROWS_AS(is_square_root(path_graph(3), complete_graph(4)),
                  std::invalid_argument);
}

TEST_CASE("is_minimal_root basics", "[oracle]") {
  CHECK(is_minimal_root(path_graph(3), complete_graph(3)));
  CHECK_FALSE(is_minimal_root(complete_graph(3), complete_graph(3)));
  CHECK(is_minimal_root(star_graph(3), complete_graph(4)));
  CHECK_THROWS_AS(is_minimal_root(path_graph(4), complete_graph(4)),
                  std::invalid_argument);
}

TEST_CASE("enumerate_minimal_roots on named graphs", "[oracle]") {
  auto k3 = enumerate_minimal_roots(complete_graph(3));
  REQUIRE(k3.size() == 3);
  CHECK(witness_edge_sets(k3) ==
        std::set<EdgeList>{{{0, 1}, {0, 2}}, {{0, 1}, {1, 2}}, {{0, 2}, {1, 2}}});
  for (const auto& w : k3) CHECK(w.minimal);

  // K4: agree with the independent exhaustion (stars and 4-cycles)
  Graph k4 = complete_graph(4);
  auto expected = exhaustive_minimal_roots(k4);
  auto got = witness_edge_sets(enumerate_minimal_roots(k4));
  REQUIRE(got == expected);
  for (int center = 0; center < 4; ++center) {
    EdgeList star;
    for (int v = 0; v < 4; ++v)
      if (v != center) star.push_back(make_edge(center, v));
    std::sort(star.begin(), star.end());
    CHECK(got.count(star) == 1);
  }
  CHECK(got.size() == 7);  // the four stars plus the three 4-cycles

  CHECK(enumerate_minimal_roots(star_graph(3)).empty());
}

TEST_CASE("oracle agrees with exhaustion on small connected graphs", "[oracle]") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : connected_classes(n)) {
      auto expected = exhaustive_minimal_roots(g);
      auto got = witness_edge_sets(enumerate_minimal_roots(g));
      REQUIRE(got == expected);
    }
}

TEST_CASE("family-restricted enumeration and existence agree", "[oracle]") {
  auto forest = forest_family();
  auto k4roots = enumerate_minimal_roots(complete_graph(4), &forest);
  REQUIRE(k4roots.size() == 4);  // cycles are filtered out
  for (const auto& w : k4roots) {
    Graph h(4, w.edge_set);
    CHECK(is_forest(h));
    CHECK(std::find(w.family_tags.begin(), w.family_tags.end(), "forest") !=
          w.family_tags.end());
  }

  auto op = outerplanar_family();
  CHECK(has_family_root_bruteforce(complete_graph(5), op));
  CHECK(has_family_root_bruteforce(complete_graph(4), forest));
  CHECK_FALSE(has_family_root_bruteforce(star_graph(3), op));

  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : connected_classes(n))
      for (const auto& fam : builtin_families())
        REQUIRE(has_family_root_bruteforce(g, fam) ==
                !enumerate_minimal_roots(g, &fam).empty());
}

TEST_CASE("witness invariants on every enumerated root", "[oracle]") {
  testsup::Rand rng(41);
  int checked = 0;
  while (checked < 40) {
    Graph g = testsup::random_graph(5 + rng.below(2), 35 + rng.below(40), rng);
    if (g.edge_count() > 14) continue;
    ++checked;
    for (const auto& w : enumerate_minimal_roots(g)) {
      Graph h(g.vertex_count(), w.edge_set);
      REQUIRE(is_square_root(h, g));
      REQUIRE(is_minimal_root(h, g));
      for (const auto& e : w.edge_set) REQUIRE(g.has_edge(e.first, e.second));
    }
    // deterministic across runs
    auto a = enumerate_minimal_roots(g);
    auto b = enumerate_minimal_roots(g);
    REQUIRE(witness_edge_sets(a) == witness_edge_sets(b));
  }
}

TEST_CASE("oracle cap", "[oracle]") {
  CHECK_THROWS_AS(enumerate_minimal_roots(complete_graph(8)), OracleCapExceeded);
  CHECK_NOTHROW(enumerate_minimal_roots(complete_graph(6)));
  CHECK_THROWS_AS(enumerate_minimal_roots(path_graph(20), nullptr, 10),
                  OracleCapExceeded);
}
