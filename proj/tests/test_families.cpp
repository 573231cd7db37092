#include <catch2/catch_amalgamated.hpp>

#include "sqroot/families.hpp"
#include "support/test_support.hpp"

using namespace sqroot;
using testsup::connected_classes;
using testsup::Rand;

TEST_CASE("family membership on named graphs", "[families]") {
  CHECK_FALSE(is_outerplanar(complete_graph(4)));
  CHECK_FALSE(is_outerplanar(complete_bipartite(2, 3)));
  CHECK(is_outerplanar(cycle_graph(5)));
  CHECK(is_outerplanar(path_graph(6)));
  CHECK(is_outerplanar(Graph(1)));
  // fan of triangles (maximal outerplanar)
  CHECK(is_outerplanar(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                                 {0, 2}, {2, 4}})));

  CHECK(is_pathwidth_at_most_2(complete_bipartite(2, 3)));
  CHECK(is_pathwidth_at_most_2(complete_bipartite(2, 9)));
  CHECK_FALSE(is_pathwidth_at_most_2(complete_graph(4)));

  CHECK(is_forest(star_graph(4)));
  CHECK(is_forest(Graph(5, {{0, 1}, {2, 3}})));
  CHECK_FALSE(is_forest(cycle_graph(3)));

  CHECK(is_cactus(cycle_graph(5)));
  // two triangles sharing one vertex
  CHECK(is_cactus(Graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}})));
  // two triangles sharing an edge: that edge lies on two cycles
  CHECK_FALSE(is_cactus(Graph(4, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 3}})));
  CHECK(is_cactus(path_graph(4)));

  CHECK(is_caterpillar_forest(star_graph(3)));
  CHECK(is_caterpillar_forest(path_graph(7)));
  Graph caterpillar(7, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}, {2, 6}});
  CHECK(is_caterpillar_forest(caterpillar));
  // 3-leg spider with legs of length 2: core is a claw, not a path
  Graph spider(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}});
  CHECK_FALSE(is_caterpillar_forest(spider));
  CHECK_FALSE(is_caterpillar_forest(cycle_graph(4)));
}

TEST_CASE("built-in family parameters", "[families]") {
  auto fams = builtin_families();
  REQUIRE(fams.size() == 5);

  auto op = find_family("outerplanar").value();
  CHECK(op.spread_count == 3);
  CHECK(op.twin_rule == TwinRule::simplicial_twins);
  CHECK(op.twin_threshold == 8);
  CHECK(op.width_kind == WidthKind::tree);
  CHECK(op.width_cutoff == 222264);

  auto pw = find_family("pw2").value();
  CHECK(pw.spread_count == 5);
  CHECK(pw.twin_rule == TwinRule::all_twins);
  CHECK(pw.twin_threshold == kDefaultC1 + 1);
  CHECK(pw.width_kind == WidthKind::path);
  CHECK(pw.width_cutoff == kWidthUnlimited);

  auto c = pw2_constants(10);
  CHECK(c.c2 == 1512);
  CHECK(c.c3 == 154);
  CHECK(c.c4 == kWidthUnlimited);  // 3*1511^78 overflows any fixed width

  auto cat = find_family("caterpillar").value();
  CHECK(cat.spread_count == 5);
  auto forest = find_family("forest").value();
  CHECK(forest.spread_count == 3);
  CHECK(forest.twin_threshold == 8);
  CHECK_FALSE(find_family("nonsense").has_value());

  // pw2 config with a different c1 moves the twin threshold
  CHECK(pw2_family(4).twin_threshold == 5);
}

TEST_CASE("family containments on enumerated graphs", "[families]") {
  auto check_graph = [](const Graph& g) {
    bool f = is_forest(g);
    bool c = is_cactus(g);
    bool o = is_outerplanar(g);
    bool cat = is_caterpillar_forest(g);
    bool p2 = is_pathwidth_at_most_2(g);
    if (f) REQUIRE(c);
    if (c) REQUIRE(o);
    if (cat) {
      REQUIRE(f);
      REQUIRE(p2);
    }
    if (o) REQUIRE(exact_width(g, WidthKind::tree).first <= 2);
  };
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : connected_classes(n)) check_graph(g);
  // all labeled graphs on 5 vertices, connected or not
  for (std::uint64_t mask = 0; mask < (1u << 10); ++mask)
    check_graph(testsup::graph_from_mask(5, mask));
  Rand rng(5);
  for (int trial = 0; trial < 150; ++trial)
    check_graph(testsup::random_graph(7, 20 + rng.below(40), rng));
}

TEST_CASE("pw2 membership agrees with layout brute force", "[families]") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : connected_classes(n))
      REQUIRE(is_pathwidth_at_most_2(g) == (testsup::vs_by_permutations(g) <= 2));
  Rand rng(9);
  for (int trial = 0; trial < 120; ++trial) {
    Graph g = testsup::random_graph(7, 20 + rng.below(35), rng);
    REQUIRE(is_pathwidth_at_most_2(g) == (testsup::vs_by_permutations(g) <= 2));
  }
}

TEST_CASE("edge-count pre-filters are sound", "[families]") {
  Rand rng(31);
  for (const auto& fam : builtin_families()) {
    for (int trial = 0; trial < 200; ++trial) {
      int n = 1 + rng.below(8);
      Graph g = testsup::random_graph(n, 25 + rng.below(50), rng);
      if (fam.is_member(g)) REQUIRE(g.edge_count() <= fam.max_edges(n));
    }
  }
}
