#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "sqroot/instance_gen.hpp"
#include "support/test_support.hpp"

using namespace sqroot;

TEST_CASE("generators stay inside their family", "[gen]") {
  // gen_family_graph post-checks membership and throws on a violation, so
  // surviving the sweep is the assertion
  for (const char* family : {"forest", "caterpillar", "cactus", "outerplanar", "pw2"})
    for (int n = 1; n <= 15; ++n)
      for (std::uint64_t seed = 0; seed < (n <= 10 ? 25u : 10u); ++seed)
        CHECK_NOTHROW(gen_family_graph(family, n, seed));

  CHECK(gen_family_graph("forest", 1, 7) == Graph(1));
  CHECK_THROWS_AS(gen_family_graph("nonsense", 5, 0), std::invalid_argument);
  CHECK_THROWS_AS(gen_family_graph("forest", 0, 0), std::invalid_argument);
}

TEST_CASE("outerplanar generator hits dense members too", "[gen]") {
  int dense = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Graph g = gen_family_graph("outerplanar", 10, seed);
    if (g.edge_count() >= 13) ++dense;  // near the 2n-3 = 17 bound
  }
  CHECK(dense > 0);
}

TEST_CASE("caterpillar members have pathwidth at most 1", "[gen]") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = gen_family_graph("caterpillar", 5 + static_cast<int>(seed % 6), seed);
    CHECK(pathwidth_at_most(g, 1));
  }
}

TEST_CASE("generation is deterministic in (family, n, seed)", "[gen]") {
  for (const char* family : {"forest", "cactus", "pw2"}) {
    CHECK(gen_family_graph(family, 9, 3) == gen_family_graph(family, 9, 3));
    CHECK(gen_family_graph(family, 9, 3) != gen_family_graph(family, 9, 4));
  }
  Instance a = gen_instance("outerplanar", 8, 5, InstanceKind::perturbed);
  Instance b = gen_instance("outerplanar", 8, 5, InstanceKind::perturbed);
  CHECK(a.square == b.square);
  CHECK(a.label == b.label);
}

TEST_CASE("sampled members survive one random deletion", "[gen]") {
  // subgraph-closure of the built-in families, sampled
  testsup::Rand rng(77);
  for (const auto& fam : builtin_families()) {
    int done = 0;
    std::uint64_t seed = 0;
    while (done < 100) {
      int n = 2 + static_cast<int>(seed % 9);
      Graph g = gen_family_graph(fam.name, n, seed++);
      if (rng.below(2) == 0 && g.edge_count() > 0) {
        Graph sub = g.with_edges_removed({g.edges()[rng.below(g.edge_count())]});
        REQUIRE(fam.is_member(sub));
      } else {
        int v = rng.below(n);
        std::vector<int> keep;
        for (int u = 0; u < n; ++u)
          if (u != v) keep.push_back(u);
        REQUIRE(fam.is_member(induced_subgraph(g, keep)));
      }
      ++done;
    }
  }
}

TEST_CASE("positive instances square their planted root", "[gen]") {
  for (const char* family : {"forest", "caterpillar", "cactus", "outerplanar", "pw2"})
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      Instance inst = gen_instance(family, 4 + static_cast<int>(seed % 9), seed,
                                   InstanceKind::positive);
      REQUIRE(inst.planted_root.has_value());
      CHECK(kth_power(*inst.planted_root, 2) == inst.square);
      CHECK(find_family(family)->is_member(*inst.planted_root));
      CHECK(inst.label == "yes");
    }
}

TEST_CASE("perturbed instances are labeled by the oracle", "[gen]") {
  int yes = 0, no = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Instance inst = gen_instance("forest", 7, seed, InstanceKind::perturbed);
    if (inst.label == "unlabeled") continue;
    auto fam = find_family("forest").value();
    bool expected = has_family_root_bruteforce(inst.square, fam);
    CHECK((inst.label == "yes") == expected);
    (expected ? yes : no)++;
  }
  CHECK(yes > 0);  // perturbations of squares can stay squares
  CHECK(no > 0);
}

TEST_CASE("corpus round-trips through the manifest", "[gen]") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "sqroot_corpus_test";
  fs::remove_all(dir);

  std::vector<Instance> batch;
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    batch.push_back(gen_instance("cactus", 8, seed, InstanceKind::positive));
    batch.push_back(gen_instance("cactus", 8, seed, InstanceKind::perturbed));
  }
  write_corpus(dir, batch);
  auto loaded = read_corpus(dir);
  REQUIRE(loaded.size() == batch.size());
  for (size_t i = 0; i < batch.size(); ++i) {
    CHECK(loaded[i].name == batch[i].name);
    CHECK(loaded[i].square == batch[i].square);
    CHECK(loaded[i].label == batch[i].label);
    CHECK(loaded[i].planted_root.has_value() == batch[i].planted_root.has_value());
    if (batch[i].planted_root)
      CHECK(*loaded[i].planted_root == *batch[i].planted_root);
  }
  fs::remove_all(dir);
}
