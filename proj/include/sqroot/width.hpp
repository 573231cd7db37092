#pragma once

// Exact treewidth and pathwidth for small graphs, with witnessing
// decompositions. Treewidth runs a Held-Karp style DP over elimination
// prefixes; pathwidth runs the vertex-separation subset DP. Both are
// bounded by a vertex cap and reconstruct a decomposition that
// validate_decomposition can check independently.

#include <cstdint>
#include <string>
#include <unordered_set>

#include "sqroot/graph.hpp"

namespace sqroot {

enum class WidthKind { tree, path };

inline constexpr int kTreewidthVertexCap = 20;
inline constexpr int kPathwidthVertexCap = 22;
inline constexpr std::int64_t kWidthUnlimited = std::numeric_limits<std::int64_t>::max();

struct Decomposition {
  WidthKind kind = WidthKind::tree;
  std::vector<std::vector<int>> bags;       // sorted vertex lists
  std::vector<std::pair<int, int>> tree_edges;  // bag-index pairs, tree kind only

  int width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
  }
};

/// Thrown when a graph is too large for the exact algorithms; carries the
/// best width upper bound the greedy heuristic could certify.
struct WidthCapExceeded : std::runtime_error {
  explicit WidthCapExceeded(int ub)
      : std::runtime_error("width: vertex cap exceeded (greedy upper bound " +
                           std::to_string(ub) + ")"),
        upper_bound(ub) {}
  int upper_bound;
};

/// (width+1) * max_degree^(floor(k/2)+1), saturating at kWidthUnlimited.
inline std::int64_t power_width_bound(std::int64_t base_width,
                                      std::int64_t max_degree, int k) {
  if (base_width < 0 || max_degree < 0 || k < 1)
    throw std::invalid_argument("power_width_bound: bad arguments");
  std::int64_t result = base_width + 1;
  for (int i = 0; i < k / 2 + 1; ++i) {
    if (max_degree > 0 && result > kWidthUnlimited / max_degree)
      return kWidthUnlimited;
    result *= max_degree;
  }
  return result;
}

namespace detail {

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> adj(g.vertex_count(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= std::uint32_t{1} << v;
    adj[v] |= std::uint32_t{1} << u;
  }
  return adj;
}

// Vertices outside S u {v} seen from v through paths with interior in S.
inline std::uint32_t elimination_neighborhood(const std::vector<std::uint32_t>& adj,
                                              std::uint32_t s, int v) {
  std::uint32_t reach = std::uint32_t{1} << v;
  std::uint32_t frontier = reach;
  std::uint32_t seen_out = 0;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f;) {
      int x = std::countr_zero(f);
      f &= f - 1;
      next |= adj[x];
    }
    seen_out |= next & ~s;
    next &= s & ~reach;
    reach |= next;
    frontier = next;
  }
  return seen_out & ~(std::uint32_t{1} << v);
}

// Members of S with a neighbor outside S.
inline int boundary_size(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
  int b = 0;
  for (std::uint32_t m = s; m;) {
    int v = std::countr_zero(m);
    m &= m - 1;
    if (adj[v] & ~s) ++b;
  }
  return b;
}

// Min-fill greedy elimination; returns (width, order).
inline std::pair<int, std::vector<int>> greedy_elimination(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
  std::vector<char> gone(n, 0);
  std::vector<int> order;
  int width = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1, best_fill = 0, best_deg = 0;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      std::vector<int> nb;
      for (int w = 0; w < n; ++w)
        if (!gone[w] && adj[v][w]) nb.push_back(w);
      int fill = 0;
      for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j)
          if (!adj[nb[i]][nb[j]]) ++fill;
      int deg = static_cast<int>(nb.size());
      if (best == -1 || fill < best_fill ||
          (fill == best_fill && deg < best_deg)) {
        best = v;
        best_fill = fill;
        best_deg = deg;
      }
    }
    std::vector<int> nb;
    for (int w = 0; w < n; ++w)
      if (!gone[w] && adj[best][w]) nb.push_back(w);
    width = std::max(width, static_cast<int>(nb.size()));
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j)
        adj[nb[i]][nb[j]] = adj[nb[j]][nb[i]] = 1;
    gone[best] = 1;
    order.push_back(best);
  }
  return {width, order};
}

// Greedy layout minimizing the running boundary; returns (vs bound, layout).
inline std::pair<int, std::vector<int>> greedy_layout(const Graph& g) {
  int n = g.vertex_count();
  auto adj = adjacency_masks(g);
  std::uint32_t placed = 0;
  std::vector<int> layout;
  int width = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1, best_b = 0;
    for (int v = 0; v < n; ++v) {
      if (placed >> v & 1) continue;
      int b = boundary_size(adj, placed | (std::uint32_t{1} << v));
      if (best == -1 || b < best_b) {
        best = v;
        best_b = b;
      }
    }
    placed |= std::uint32_t{1} << best;
    layout.push_back(best);
    width = std::max(width, best_b);
  }
  return {width, layout};
}

inline int greedy_clique_lower_bound(const Graph& g) {
  int n = g.vertex_count();
  int best = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<int> clique{s};
    for (int v = 0; v < n; ++v) {
      if (v == s) continue;
      bool ok = true;
      for (int c : clique)
        if (!g.has_edge(v, c)) { ok = false; break; }
      if (ok) clique.push_back(v);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best - 1;
}

// Tree decomposition from an elimination order via fill-in simulation.
inline Decomposition decomposition_from_elimination(const Graph& g,
                                                    const std::vector<int>& order) {
  int n = g.vertex_count();
  std::vector<std::uint32_t> adj = adjacency_masks(g);
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  Decomposition dec;
  dec.kind = WidthKind::tree;
  std::uint32_t alive = n == 32 ? ~std::uint32_t{0}
                                : (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> bag_mask(n, 0);
  std::vector<int> parent(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    std::uint32_t nb = adj[v] & alive & ~(std::uint32_t{1} << v);
    bag_mask[i] = nb | (std::uint32_t{1} << v);
    // parent: bag of the next-eliminated fill neighbor
    int best_pos = -1;
    for (std::uint32_t m = nb; m;) {
      int w = std::countr_zero(m);
      m &= m - 1;
      if (best_pos == -1 || position[w] < best_pos) best_pos = position[w];
    }
    parent[i] = best_pos != -1 ? best_pos : (i + 1 < n ? i + 1 : -1);
    // make the neighborhood a clique, then delete v
    for (std::uint32_t m = nb; m;) {
      int w = std::countr_zero(m);
      m &= m - 1;
      adj[w] |= nb & ~(std::uint32_t{1} << w);
    }
    alive &= ~(std::uint32_t{1} << v);
  }
  for (int i = 0; i < n; ++i) {
    std::vector<int> bag;
    for (std::uint32_t m = bag_mask[i]; m;) {
      bag.push_back(std::countr_zero(m));
      m &= m - 1;
    }
    dec.bags.push_back(std::move(bag));
    if (parent[i] != -1) dec.tree_edges.emplace_back(i, parent[i]);
  }
  return dec;
}

// Path decomposition from a layout, deduplicating comparable adjacent bags.
inline Decomposition decomposition_from_layout(const Graph& g,
                                               const std::vector<int>& layout) {
  int n = g.vertex_count();
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[layout[i]] = i;
  Decomposition dec;
  dec.kind = WidthKind::path;
  for (int i = 0; i < n; ++i) {
    std::vector<int> bag{layout[i]};
    for (int j = 0; j < i; ++j) {
      int u = layout[j];
      for (int w : g.neighbors(u))
        if (position[w] >= i) { bag.push_back(u); break; }
    }
    std::sort(bag.begin(), bag.end());
    dec.bags.push_back(std::move(bag));
  }
  // drop bags contained in a sequence neighbor (strictly or as duplicates)
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < dec.bags.size(); ++i) {
      const auto& a = dec.bags[i];
      const auto& b = dec.bags[i + 1];
      if (std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        dec.bags.erase(dec.bags.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
      if (std::includes(a.begin(), a.end(), b.begin(), b.end())) {
        dec.bags.erase(dec.bags.begin() + static_cast<long>(i) + 1);
        changed = true;
        break;
      }
    }
  }
  return dec;
}

}  // namespace detail

/// Validates the decomposition conditions; on failure optionally reports the
/// first violation found.
inline bool validate_decomposition(const Graph& g, const Decomposition& dec,
                                   std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  int n = g.vertex_count();
  int nb = static_cast<int>(dec.bags.size());
  std::vector<char> seen(n, 0);
  for (int i = 0; i < nb; ++i) {
    const auto& bag = dec.bags[i];
    if (!std::is_sorted(bag.begin(), bag.end()) ||
        std::adjacent_find(bag.begin(), bag.end()) != bag.end())
      return fail("bag " + std::to_string(i) + " is not a sorted set");
    for (int v : bag) {
      if (v < 0 || v >= n)
        return fail("bag " + std::to_string(i) + " has out-of-range vertex");
      seen[v] = 1;
    }
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v]) return fail("vertex " + std::to_string(v) + " in no bag");
  for (const auto& [u, v] : g.edges()) {
    bool covered = false;
    for (const auto& bag : dec.bags)
      if (std::binary_search(bag.begin(), bag.end(), u) &&
          std::binary_search(bag.begin(), bag.end(), v)) {
        covered = true;
        break;
      }
    if (!covered)
      return fail("edge {" + std::to_string(u) + "," + std::to_string(v) +
                  "} in no bag");
  }
  if (dec.kind == WidthKind::path) {
    if (!dec.tree_edges.empty()) return fail("path decomposition with tree edges");
    for (int v = 0; v < n; ++v) {
      int first = -1, last = -1;
      for (int i = 0; i < nb; ++i)
        if (std::binary_search(dec.bags[i].begin(), dec.bags[i].end(), v)) {
          if (first == -1) first = i;
          last = i;
        }
      for (int i = first; i <= last; ++i)
        if (!std::binary_search(dec.bags[i].begin(), dec.bags[i].end(), v))
          return fail("vertex " + std::to_string(v) + " occurrence not contiguous");
    }
    for (int i = 0; i < nb; ++i)
      for (int j = 0; j < nb; ++j) {
        if (i == j) continue;
        if (std::includes(dec.bags[j].begin(), dec.bags[j].end(),
                          dec.bags[i].begin(), dec.bags[i].end()))
          return fail("bag " + std::to_string(i) + " contained in bag " +
                      std::to_string(j));
      }
  } else {
    if (nb > 0 && static_cast<int>(dec.tree_edges.size()) != nb - 1)
      return fail("tree edge count is not bags-1");
    std::vector<std::vector<int>> tadj(nb);
    for (const auto& [a, b] : dec.tree_edges) {
      if (a < 0 || a >= nb || b < 0 || b >= nb || a == b)
        return fail("invalid tree edge");
      tadj[a].push_back(b);
      tadj[b].push_back(a);
    }
    if (nb > 0) {
      std::vector<char> vis(nb, 0);
      std::vector<int> stack{0};
      vis[0] = 1;
      int count = 0;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        ++count;
        for (int y : tadj[x])
          if (!vis[y]) {
            vis[y] = 1;
            stack.push_back(y);
          }
      }
      if (count != nb) return fail("tree structure disconnected");
    }
    for (int v = 0; v < n; ++v) {
      std::vector<int> holds;
      for (int i = 0; i < nb; ++i)
        if (std::binary_search(dec.bags[i].begin(), dec.bags[i].end(), v))
          holds.push_back(i);
      if (holds.empty()) continue;
      std::unordered_set<int> in(holds.begin(), holds.end());
      std::vector<int> stack{holds[0]};
      std::unordered_set<int> vis{holds[0]};
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : tadj[x])
          if (in.count(y) && !vis.count(y)) {
            vis.insert(y);
            stack.push_back(y);
          }
      }
      if (vis.size() != in.size())
        return fail("vertex " + std::to_string(v) + " bags not connected in tree");
    }
  }
  return true;
}

/// Exact minimum width with a witnessing decomposition. Throws
/// WidthCapExceeded beyond the vertex cap.
inline std::pair<int, Decomposition> exact_width(
    const Graph& g, WidthKind kind,
    int vertex_cap = -1) {
  if (vertex_cap < 0)
    vertex_cap = kind == WidthKind::tree ? kTreewidthVertexCap : kPathwidthVertexCap;
  int n = g.vertex_count();
  if (n == 0) return {-1, Decomposition{kind, {}, {}}};
  if (n > vertex_cap) {
    int ub = kind == WidthKind::tree ? detail::greedy_elimination(g).first
                                     : detail::greedy_layout(g).first;
    throw WidthCapExceeded(ub);
  }

  auto adj = detail::adjacency_masks(g);
  std::uint32_t full = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;

  if (kind == WidthKind::tree) {
    auto [ub, greedy_order] = detail::greedy_elimination(g);
    int lb = detail::greedy_clique_lower_bound(g);
    if (lb >= ub) {
      Decomposition dec = detail::decomposition_from_elimination(g, greedy_order);
      return {ub, dec};
    }
    const std::uint8_t big = 255;
    std::vector<std::uint8_t> f(std::size_t{1} << n, big);
    f[0] = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      int best = big;
      for (std::uint32_t m = mask; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        std::uint32_t rest = mask & ~(std::uint32_t{1} << v);
        if (f[rest] == big) continue;
        int q = std::popcount(detail::elimination_neighborhood(adj, rest, v));
        int cost = std::max<int>(f[rest], q);
        if (cost < best) best = cost;
      }
      if (best <= ub) f[mask] = static_cast<std::uint8_t>(best);
    }
    int width = f[full];
    // walk back: last-eliminated vertex first, lowest id on ties
    std::vector<int> order(n);
    std::uint32_t mask = full;
    for (int i = n - 1; i >= 0; --i) {
      int pick = -1;
      for (int v = 0; v < n; ++v) {
        if (!(mask >> v & 1)) continue;
        std::uint32_t rest = mask & ~(std::uint32_t{1} << v);
        if (f[rest] == big) continue;
        int q = std::popcount(detail::elimination_neighborhood(adj, rest, v));
        if (std::max<int>(f[rest], q) == f[mask]) { pick = v; break; }
      }
      order[i] = pick;
      mask &= ~(std::uint32_t{1} << pick);
    }
    Decomposition dec = detail::decomposition_from_elimination(g, order);
    return {width, dec};
  }

  // pathwidth: vertex separation DP
  auto [ub, greedy_lay] = detail::greedy_layout(g);
  std::vector<std::uint8_t> f(std::size_t{1} << n, 255);
  f[0] = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    int b = detail::boundary_size(adj, mask);
    if (b > ub) continue;
    int best = 255;
    for (std::uint32_t m = mask; m;) {
      int v = std::countr_zero(m);
      m &= m - 1;
      std::uint32_t rest = mask & ~(std::uint32_t{1} << v);
      if (f[rest] < best) best = f[rest];
    }
    if (best == 255) continue;
    f[mask] = static_cast<std::uint8_t>(std::max(b, best));
  }
  int width = f[full] == 255 ? ub : f[full];
  std::vector<int> layout(n);
  if (f[full] == 255) {
    layout = greedy_lay;
  } else {
    std::uint32_t mask = full;
    for (int i = n - 1; i >= 0; --i) {
      int pick = -1;
      for (int v = 0; v < n; ++v) {
        if (!(mask >> v & 1)) continue;
        std::uint32_t rest = mask & ~(std::uint32_t{1} << v);
        if (f[rest] <= f[mask]) { pick = v; break; }
      }
      layout[i] = pick;
      mask &= ~(std::uint32_t{1} << pick);
    }
  }
  Decomposition dec = detail::decomposition_from_layout(g, layout);
  return {width, dec};
}

/// Decides pw(g) <= k without the exact_width vertex cap (components up to 64
/// vertices) by searching layout prefixes whose boundary stays within k.
inline bool pathwidth_at_most(const Graph& g, int k) {
  for (const auto& comp : connected_components(g)) {
    if (static_cast<int>(comp.size()) > 64)
      throw WidthCapExceeded(static_cast<int>(comp.size()) - 1);
    Graph sub = induced_subgraph(g, comp);
    int n = sub.vertex_count();
    if (n <= k + 1) continue;
    std::vector<std::uint64_t> adj(n, 0);
    for (const auto& [u, v] : sub.edges()) {
      adj[u] |= std::uint64_t{1} << v;
      adj[v] |= std::uint64_t{1} << u;
    }
    std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    auto boundary_ok = [&](std::uint64_t s) {
      int b = 0;
      for (std::uint64_t m = s; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if ((adj[v] & ~s) && ++b > k) return false;
      }
      return true;
    };
    std::unordered_set<std::uint64_t> visited;
    std::vector<std::uint64_t> stack{0};
    visited.insert(0);
    bool reached = false;
    while (!stack.empty() && !reached) {
      std::uint64_t s = stack.back();
      stack.pop_back();
      if (s == full) { reached = true; break; }
      for (int v = 0; v < n; ++v) {
        if (s >> v & 1) continue;
        std::uint64_t t = s | (std::uint64_t{1} << v);
        if (!boundary_ok(t) || visited.count(t)) continue;
        visited.insert(t);
        if (t == full) { reached = true; break; }
        stack.push_back(t);
      }
    }
    if (!reached) return false;
  }
  return true;
}

}  // namespace sqroot
