#pragma once

// Subgraph-closed graph families together with the reduction-pipeline
// parameters each one uses: how many spread neighbors the labeling rule
// needs, which twin rule applies at which class size, and the width cutoff
// on the reduced graph.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "sqroot/graph.hpp"
#include "sqroot/width.hpp"

namespace sqroot {

enum class TwinRule { simplicial_twins, all_twins };

struct FamilyConfig {
  std::string name;
  std::function<bool(const Graph&)> is_member;
  int spread_count = 3;  // 3 or 5
  TwinRule twin_rule = TwinRule::simplicial_twins;
  int twin_threshold = 8;
  WidthKind width_kind = WidthKind::tree;
  std::int64_t width_cutoff = kWidthUnlimited;
  /// Edge count above which membership is impossible; cheap pre-filter.
  std::function<int(int)> max_edges;
};

inline constexpr int kDefaultC1 = 10;

struct Pw2Constants {
  int c1;
  std::int64_t c2;
  std::int64_t c3;
  std::int64_t c4;  // saturates at kWidthUnlimited
};

/// c2 = 6*21*(c1+2), c3 = 15*c1+4, c4 = 3*(c2-1)^(floor((c3+1)/2)+1).
inline Pw2Constants pw2_constants(int c1) {
  Pw2Constants c;
  c.c1 = c1;
  c.c2 = std::int64_t{6} * 21 * (c1 + 2);
  c.c3 = std::int64_t{15} * c1 + 4;
  c.c4 = power_width_bound(2, c.c2 - 1, static_cast<int>(c.c3) + 1);
  return c;
}

// ---------------------------------------------------------------------------
// membership predicates

inline bool is_forest(const Graph& g) {
  for (const auto& comp : connected_components(g)) {
    int internal = 0;
    for (const auto& [u, v] : g.edges())
      if (std::binary_search(comp.begin(), comp.end(), u)) ++internal;
    if (internal != static_cast<int>(comp.size()) - 1) return false;
  }
  return true;
}

inline bool is_outerplanar(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 3) return true;
  if (g.edge_count() > 2 * n - 3) return false;
  static const Graph k4 = complete_graph(4);
  static const Graph k23 = complete_bipartite(2, 3);
  return !has_minor(g, k4) && !has_minor(g, k23);
}

namespace detail {

// Biconnected blocks as edge groups, iterative Tarjan DFS.
inline std::vector<EdgeList> biconnected_blocks(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), next_child(n, 0);
  std::vector<EdgeList> blocks;
  EdgeList edge_stack;
  int timer = 0;
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<int> stack{root};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      int v = stack.back();
      const auto& nb = g.neighbors(v);
      if (next_child[v] < static_cast<int>(nb.size())) {
        int w = nb[next_child[v]++];
        if (disc[w] == -1) {
          parent[w] = v;
          disc[w] = low[w] = timer++;
          edge_stack.push_back(make_edge(v, w));
          stack.push_back(w);
        } else if (w != parent[v] && disc[w] < disc[v]) {
          edge_stack.push_back(make_edge(v, w));
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        if (stack.empty()) continue;
        int p = stack.back();
        low[p] = std::min(low[p], low[v]);
        if (low[v] >= disc[p]) {
          EdgeList block;
          Edge stop = make_edge(p, v);
          while (!edge_stack.empty()) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e);
            if (e == stop) break;
          }
          if (!block.empty()) blocks.push_back(std::move(block));
        }
      }
    }
  }
  return blocks;
}

}  // namespace detail

/// Every edge lies on at most one cycle, i.e. every block is an edge or a cycle.
inline bool is_cactus(const Graph& g) {
  for (const auto& block : detail::biconnected_blocks(g)) {
    std::vector<int> verts;
    for (const auto& [u, v] : block) {
      verts.push_back(u);
      verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (block.size() > verts.size()) return false;
  }
  return true;
}

/// Forest whose components, after removing degree-<=1 vertices, are paths
/// (possibly empty).
inline bool is_caterpillar_forest(const Graph& g) {
  if (!is_forest(g)) return false;
  int n = g.vertex_count();
  std::vector<char> core(n, 0);
  for (int v = 0; v < n; ++v) core[v] = g.degree(v) >= 2;
  for (int v = 0; v < n; ++v) {
    if (!core[v]) continue;
    int core_deg = 0;
    for (int w : g.neighbors(v)) core_deg += core[w];
    if (core_deg > 2) return false;
  }
  return true;
}

inline bool is_pathwidth_at_most_2(const Graph& g) {
  return pathwidth_at_most(g, 2);
}

// ---------------------------------------------------------------------------
// built-in configurations

inline FamilyConfig outerplanar_family() {
  FamilyConfig f;
  f.name = "outerplanar";
  f.is_member = is_outerplanar;
  f.spread_count = 3;
  f.twin_rule = TwinRule::simplicial_twins;
  f.twin_threshold = 8;
  f.width_kind = WidthKind::tree;
  f.width_cutoff = power_width_bound(2, 42, 4);  // 3*42^3
  f.max_edges = [](int n) { return n <= 1 ? 0 : 2 * n - 3; };
  return f;
}

inline FamilyConfig pw2_family(int c1 = kDefaultC1) {
  FamilyConfig f;
  f.name = "pw2";
  f.is_member = is_pathwidth_at_most_2;
  f.spread_count = 5;
  f.twin_rule = TwinRule::all_twins;
  f.twin_threshold = c1 + 1;
  f.width_kind = WidthKind::path;
  f.width_cutoff = pw2_constants(c1).c4;
  f.max_edges = [](int n) { return n <= 1 ? 0 : 2 * n - 3; };
  return f;
}

inline FamilyConfig forest_family() {
  FamilyConfig f = outerplanar_family();
  f.name = "forest";
  f.is_member = is_forest;
  f.max_edges = [](int n) { return n - 1; };
  return f;
}

inline FamilyConfig cactus_family() {
  FamilyConfig f = outerplanar_family();
  f.name = "cactus";
  f.is_member = is_cactus;
  f.max_edges = [](int n) { return n <= 1 ? 0 : (3 * (n - 1)) / 2; };
  return f;
}

inline FamilyConfig caterpillar_family(int c1 = kDefaultC1) {
  FamilyConfig f = pw2_family(c1);
  f.name = "caterpillar";
  f.is_member = is_caterpillar_forest;
  f.max_edges = [](int n) { return n - 1; };
  return f;
}

inline std::vector<FamilyConfig> builtin_families(int c1 = kDefaultC1) {
  return {outerplanar_family(), pw2_family(c1), forest_family(), cactus_family(),
          caterpillar_family(c1)};
}

inline std::optional<FamilyConfig> find_family(const std::string& name,
                                               int c1 = kDefaultC1) {
  for (auto& f : builtin_families(c1))
    if (f.name == name) return f;
  return std::nullopt;
}

}  // namespace sqroot
