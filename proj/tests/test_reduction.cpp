#include <catch2/catch_amalgamated.hpp>

#include "sqroot/oracle.hpp"
#include "sqroot/reduction.hpp"
#include "support/test_support.hpp"

using namespace sqroot;
using testsup::connected_classes;
using testsup::spider_root;
using testsup::squared_spider;

namespace {

LabeledInstance run_labeling_pipeline(const Graph& g, const FamilyConfig& fam) {
  LabeledInstance inst = make_instance(g, fam);
  label_edges(inst, fam);
  delete_irrelevant_edges(inst);
  width_cutoff_check(inst, fam);
  return inst;
}

}  // namespace

TEST_CASE("reduce_twins follows the exhaustive class-size rule", "[reduction]") {
  auto op = outerplanar_family();

  // K9: all nine vertices are simplicial true twins; the rule fires while a
  // class has >= 8 members, leaving K7 after two deletions.
  auto k9 = reduce_twins(complete_graph(9), op);
  CHECK(k9.reduced == complete_graph(7));
  REQUIRE(k9.log.size() == 2);
  CHECK(k9.log[0].removed == 0);
  CHECK(k9.log[0].remaining == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(k9.log[1].removed == 1);
  CHECK(k9.log[1].remaining == std::vector<int>{2, 3, 4, 5, 6, 7, 8});
  CHECK(k9.kept == std::vector<int>{2, 3, 4, 5, 6, 7, 8});

  auto p5 = reduce_twins(path_graph(5), op);
  CHECK(p5.reduced == path_graph(5));
  CHECK(p5.log.empty());

  // pw2-style config with threshold 3: K4 -> K2, classes recomputed each time
  FamilyConfig small = pw2_family();
  small.twin_threshold = 3;
  auto k4 = reduce_twins(complete_graph(4), small);
  CHECK(k4.reduced == complete_graph(2));
  REQUIRE(k4.log.size() == 2);
  CHECK(k4.log[0].removed == 0);
  CHECK(k4.log[1].removed == 1);
  CHECK(k4.log[1].remaining == std::vector<int>{2, 3});
}

TEST_CASE("simplicial restriction on the twin rule", "[reduction]") {
  // {0,1,2} are true twins but not simplicial: their closed neighborhood
  // contains the nonadjacent pair {3,4}
  Graph g(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}});
  REQUIRE(true_twin_classes(g)[0] == std::vector<int>{0, 1, 2});
  REQUIRE_FALSE(is_simplicial(g, 0));

  FamilyConfig simp = outerplanar_family();
  simp.twin_threshold = 3;
  CHECK(reduce_twins(g, simp).log.empty());

  FamilyConfig all = pw2_family();
  all.twin_threshold = 3;
  CHECK(reduce_twins(g, all).log.size() == 1);
}

TEST_CASE("find_spread_neighbors", "[reduction]") {
  CHECK(find_spread_neighbors(star_graph(3), 0, 3) == VertexSet{1, 2, 3});
  for (int u = 0; u < 4; ++u)
    CHECK_FALSE(find_spread_neighbors(complete_graph(4), u, 3).has_value());
  CHECK(find_spread_neighbors(squared_spider(), 0, 3) == VertexSet{4, 5, 6});
  CHECK_FALSE(find_spread_neighbors(squared_spider(), 0, 5).has_value());
  CHECK_FALSE(find_spread_neighbors(squared_spider(), 1, 3).has_value());
  CHECK(find_spread_neighbors(star_graph(5), 0, 5) == VertexSet{1, 2, 3, 4, 5});
}

TEST_CASE("label_edges on the worked examples", "[reduction]") {
  auto op = outerplanar_family();

  LabeledInstance k13 = make_instance(star_graph(3), op);
  label_edges(k13, op);
  CHECK(k13.hubs == std::vector<int>{0});
  CHECK(k13.red.empty());
  CHECK(k13.blue == std::set<Edge>{{0, 1}, {0, 2}, {0, 3}});
  CHECK(k13.status == ReduceStatus::running);

  LabeledInstance sp = make_instance(squared_spider(), op);
  label_edges(sp, op);
  CHECK(sp.hubs == std::vector<int>{0});
  CHECK(sp.red == std::set<Edge>{{0, 1}, {0, 2}, {0, 3}});
  CHECK(sp.blue == std::set<Edge>{{0, 4}, {0, 5}, {0, 6}});

  LabeledInstance c6 = make_instance(cycle_graph(6), op);
  label_edges(c6, op);
  CHECK(c6.hubs.empty());
  CHECK(c6.red.empty());
  CHECK(c6.blue.empty());

  // the pw2 pipeline needs five spread neighbors, which the spider lacks
  auto pw = pw2_family();
  LabeledInstance sp5 = make_instance(squared_spider(), pw);
  label_edges(sp5, pw);
  CHECK(sp5.hubs.empty());
  CHECK(sp5.red.empty());
  CHECK(sp5.blue.empty());
}

TEST_CASE("delete_irrelevant_edges", "[reduction]") {
  auto op = outerplanar_family();

  LabeledInstance sp = make_instance(squared_spider(), op);
  label_edges(sp, op);
  delete_irrelevant_edges(sp);
  CHECK(sp.status == ReduceStatus::running);
  CHECK(sp.deleted == std::set<Edge>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(sp.g == squared_spider().with_edges_removed({{1, 2}, {1, 3}, {2, 3}}));
  CHECK(sp.g.edge_count() == 9);

  // hand-built instance: two red edges at the hub whose endpoints are not
  // adjacent trip step (i)
  LabeledInstance broken = make_instance(star_graph(2), op);
  broken.hubs = {0};
  broken.red = {{0, 1}, {0, 2}};
  delete_irrelevant_edges(broken);
  CHECK(broken.status == ReduceStatus::no_answer);
  CHECK(broken.reason == NoAnswerReason::missing_square_edge);

  // no hubs: nothing happens
  LabeledInstance plain = make_instance(cycle_graph(5), op);
  label_edges(plain, op);
  delete_irrelevant_edges(plain);
  CHECK(plain.deleted.empty());
  CHECK(plain.g == cycle_graph(5));
}

TEST_CASE("width_cutoff_check", "[reduction]") {
  auto op = outerplanar_family();

  LabeledInstance unlimited = make_instance(cycle_graph(4), pw2_family());
  CHECK(width_cutoff_check(unlimited, pw2_family()) == -1);
  CHECK(unlimited.status == ReduceStatus::running);

  FamilyConfig tight = outerplanar_family();
  tight.width_cutoff = 1;
  LabeledInstance c4 = make_instance(cycle_graph(4), tight);
  CHECK(width_cutoff_check(c4, tight) == 2);
  CHECK(c4.status == ReduceStatus::no_answer);
  CHECK(c4.reason == NoAnswerReason::width_exceeded);

  FamilyConfig loose = outerplanar_family();
  loose.width_cutoff = 2;
  LabeledInstance c4b = make_instance(cycle_graph(4), loose);
  CHECK(width_cutoff_check(c4b, loose) == 2);
  CHECK(c4b.status == ReduceStatus::running);

  LabeledInstance sp = run_labeling_pipeline(squared_spider(), op);
  CHECK(sp.status == ReduceStatus::running);
  CHECK(exact_width(sp.g, WidthKind::tree).first == 2);
}

TEST_CASE("labels and deletions are sound against the oracle", "[reduction]") {
  // At these sizes the twin rules never fire (a class of 8 true twins needs
  // 28 edges), so labels live on the input graph itself.
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : connected_classes(n)) {
      for (const auto& fam : builtin_families()) {
        LabeledInstance inst = run_labeling_pipeline(g, fam);
        REQUIRE(inst.kept.size() == static_cast<size_t>(n));

        // structural: S edges close a red 2-path at some hub
        for (const Edge& e : inst.deleted) {
          bool witnessed = false;
          for (int u : inst.hubs)
            if (inst.red.count(make_edge(u, e.first)) &&
                inst.red.count(make_edge(u, e.second)))
              witnessed = true;
          REQUIRE(witnessed);
        }

        auto roots = enumerate_minimal_roots(g, &fam);
        if (inst.status == ReduceStatus::no_answer) {
          REQUIRE(roots.empty());  // no-answers are sound
          continue;
        }
        REQUIRE((inst.red.empty() ||
                 std::all_of(inst.red.begin(), inst.red.end(), [&](const Edge& e) {
                   return !inst.blue.count(e);
                 })));
        for (const auto& w : roots) {
          std::set<Edge> root(w.edge_set.begin(), w.edge_set.end());
          for (const Edge& e : inst.red) REQUIRE(root.count(e) == 1);
          for (const Edge& e : inst.blue) REQUIRE(root.count(e) == 0);
          for (const Edge& e : inst.deleted) REQUIRE(root.count(e) == 0);
        }
      }
    }
  }
}

TEST_CASE("excluded-edge lemma holds for all roots, not just minimal", "[reduction]") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : connected_classes(n)) {
      auto roots = testsup::exhaustive_roots(g);
      for (int u = 0; u < n; ++u) {
        auto dist = distances_avoiding(g, u);
        for (int x : g.neighbors(u)) {
          bool excluded = false;
          for (int y : g.neighbors(u))
            if (y != x && dist[x][y] >= 3) excluded = true;
          if (!excluded) continue;
          Edge ux = make_edge(u, x);
          for (const EdgeList& root : roots)
            REQUIRE(std::find(root.begin(), root.end(), ux) == root.end());
        }
      }
    }
  }
}
