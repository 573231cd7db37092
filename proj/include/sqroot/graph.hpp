#pragma once

// Simple undirected graphs on dense vertex ids 0..n-1, plus the distance,
// twin, simplicial and minor primitives the rest of the library builds on.
// Graph values are immutable after construction; "mutation" returns a new
// value, so cached data (the BFS distance matrix) can never go stale.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sqroot {

using Edge = std::pair<int, int>;
using EdgeList = std::vector<Edge>;
using VertexSet = std::vector<int>;  // sorted, members < n

/// Distance value for vertex pairs with no connecting path.
inline constexpr int kUnreachable = std::numeric_limits<int>::max() / 4;

inline Edge make_edge(int u, int v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

class Graph {
 public:
  Graph() : Graph(0) {}

  explicit Graph(int n) : n_(n), adj_(n), cache_(std::make_shared<DistCache>()) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  }

  Graph(int n, EdgeList edges) : Graph(n) {
    for (auto& e : edges) {
      if (e.first == e.second) throw std::invalid_argument("graph: self-loop");
      e = make_edge(e.first, e.second);
      if (e.first < 0 || e.second >= n_)
        throw std::invalid_argument("graph: vertex out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw std::invalid_argument("graph: duplicate edge");
    edges_ = std::move(edges);
    for (const auto& [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // accessors return by value on temporaries so ranged-for cannot dangle
  const EdgeList& edges() const& { return edges_; }
  EdgeList edges() const&& { return edges_; }

  const std::vector<int>& neighbors(int v) const& {
    check_vertex(v);
    return adj_[v];
  }
  std::vector<int> neighbors(int v) const&& {
    check_vertex(v);
    return adj_[v];
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
  }

  int max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
  }

  /// All-pairs distances, built lazily with one BFS per source and shared by
  /// copies of this value. Entries are kUnreachable across components.
  const std::vector<std::vector<int>>& distance_matrix() const& {
    std::call_once(cache_->once, [this] {
      cache_->dist.resize(n_);
      for (int s = 0; s < n_; ++s) cache_->dist[s] = bfs_from(s, -1);
    });
    return cache_->dist;
  }
  std::vector<std::vector<int>> distance_matrix() const&& {
    return static_cast<const Graph&>(*this).distance_matrix();
  }

  Graph with_edge_added(int u, int v) const {
    EdgeList es = edges_;
    es.push_back(make_edge(u, v));
    return Graph(n_, std::move(es));
  }

  Graph with_edges_removed(const EdgeList& remove) const {
    EdgeList drop;
    drop.reserve(remove.size());
    for (auto [u, v] : remove) drop.push_back(make_edge(u, v));
    std::sort(drop.begin(), drop.end());
    EdgeList es;
    es.reserve(edges_.size());
    for (const auto& e : edges_)
      if (!std::binary_search(drop.begin(), drop.end(), e)) es.push_back(e);
    return Graph(n_, std::move(es));
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }
  bool operator!=(const Graph& other) const { return !(*this == other); }

  /// Single-source BFS; `skip` (-1 for none) is treated as deleted.
  std::vector<int> bfs_from(int source, int skip) const {
    check_vertex(source);
    std::vector<int> dist(n_, kUnreachable);
    if (source == skip) return dist;
    dist[source] = 0;
    std::queue<int> q;
    q.push(source);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : adj_[x]) {
        if (y == skip || dist[y] != kUnreachable) continue;
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
    return dist;
  }

 private:
  struct DistCache {
    std::once_flag once;
    std::vector<std::vector<int>> dist;
  };

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("graph: vertex out of range");
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  EdgeList edges_;
  mutable std::shared_ptr<DistCache> cache_;
};

// ---------------------------------------------------------------------------
// builders

inline Graph path_graph(int n) {
  EdgeList es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, std::move(es));
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
  EdgeList es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  es.emplace_back(0, n - 1);
  return Graph(n, std::move(es));
}

inline Graph complete_graph(int n) {
  EdgeList es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph(n, std::move(es));
}

/// K_{a,b} with part {0..a-1} against {a..a+b-1}.
inline Graph complete_bipartite(int a, int b) {
  EdgeList es;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) es.emplace_back(u, a + v);
  return Graph(a + b, std::move(es));
}

/// Star K_{1,k}: center 0, leaves 1..k.
inline Graph star_graph(int k) {
  EdgeList es;
  for (int v = 1; v <= k; ++v) es.emplace_back(0, v);
  return Graph(k + 1, std::move(es));
}

// ---------------------------------------------------------------------------
// components and induced subgraphs

inline std::vector<std::vector<int>> connected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> q;
    q.push(s);
    comp[s] = id;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      out[id].push_back(x);
      for (int y : g.neighbors(x))
        if (comp[y] == -1) {
          comp[y] = id;
          q.push(y);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

/// Subgraph induced by `verts` (sorted, distinct); local id = position in `verts`.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
  std::vector<int> local(g.vertex_count(), -1);
  for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
  EdgeList es;
  for (const auto& [u, v] : g.edges())
    if (local[u] != -1 && local[v] != -1) es.push_back(make_edge(local[u], local[v]));
  return Graph(static_cast<int>(verts.size()), std::move(es));
}

// ---------------------------------------------------------------------------
// powers and deleted-vertex distances

/// k-th power: same vertices, edge {u,v} iff 0 < dist_g(u,v) <= k.
inline Graph kth_power(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("kth_power: k must be >= 1");
  const auto& dist = g.distance_matrix();
  int n = g.vertex_count();
  EdgeList es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (dist[u][v] <= k) es.emplace_back(u, v);
  return Graph(n, std::move(es));
}

/// Shortest x-y distance in g - u; kUnreachable if disconnected there.
inline int distance_in_deleted(const Graph& g, int u, int x, int y) {
  if (x == u || y == u)
    throw std::invalid_argument("distance_in_deleted: endpoint equals deleted vertex");
  return g.bfs_from(x, u)[y];
}

/// One row per source: distances in g - u (row u itself is all-unreachable).
inline std::vector<std::vector<int>> distances_avoiding(const Graph& g, int u) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> dist(n);
  for (int s = 0; s < n; ++s)
    dist[s] = (s == u) ? std::vector<int>(n, kUnreachable) : g.bfs_from(s, u);
  return dist;
}

// ---------------------------------------------------------------------------
// twins and simplicial vertices

/// Partition of the vertices into classes of the relation N[u] = N[v].
/// Classes are sorted internally and ordered by smallest member.
inline std::vector<std::vector<int>> true_twin_classes(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> keys(n);
  for (int v = 0; v < n; ++v) {
    keys[v] = g.neighbors(v);
    keys[v].push_back(v);
    std::sort(keys[v].begin(), keys[v].end());
  }
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return keys[a] < keys[b]; });
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < n; ++i) {
    if (i == 0 || keys[order[i]] != keys[order[i - 1]]) classes.emplace_back();
    classes.back().push_back(order[i]);
  }
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

inline bool is_simplicial(const Graph& g, int v) {
  const auto& nb = g.neighbors(v);
  for (size_t i = 0; i < nb.size(); ++i)
    for (size_t j = i + 1; j < nb.size(); ++j)
      if (!g.has_edge(nb[i], nb[j])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// minor containment for constant-size patterns

inline constexpr int kMinorPatternCap = 6;

namespace detail {

// Fixed-width bitset sized for minor-test host graphs.
struct SmallBits {
  static constexpr int kWords = 4;
  static constexpr int kMaxBits = kWords * 64;
  std::array<std::uint64_t, kWords> w{};

  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return w[i >> 6] >> (i & 63) & 1; }
  bool any() const {
    for (auto x : w)
      if (x) return true;
    return false;
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  SmallBits operator&(const SmallBits& o) const {
    SmallBits r;
    for (int i = 0; i < kWords; ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
  SmallBits operator|(const SmallBits& o) const {
    SmallBits r;
    for (int i = 0; i < kWords; ++i) r.w[i] = w[i] | o.w[i];
    return r;
  }
  SmallBits operator~() const {
    SmallBits r;
    for (int i = 0; i < kWords; ++i) r.w[i] = ~w[i];
    return r;
  }
  void operator|=(const SmallBits& o) {
    for (int i = 0; i < kWords; ++i) w[i] |= o.w[i];
  }
  bool intersects(const SmallBits& o) const {
    for (int i = 0; i < kWords; ++i)
      if (w[i] & o.w[i]) return true;
    return false;
  }
  template <class F>
  void for_each(F f) const {
    for (int i = 0; i < kWords; ++i)
      for (std::uint64_t x = w[i]; x;) {
        f(i * 64 + std::countr_zero(x));
        x &= x - 1;
      }
  }
};

// Minor-model search over bitmask state; same contract as the general
// version below but ~100x faster for the in-search membership pruning.
class MinorSearchBits {
 public:
  MinorSearchBits(const Graph& g, const Graph& pattern) : g_(g), p_(pattern) {
    n_ = g.vertex_count();
    int p = p_.vertex_count();
    adj_.resize(n_);
    for (const auto& [u, v] : g_.edges()) {
      adj_[u].set(v);
      adj_[v].set(u);
    }
    order_.resize(p);
    for (int i = 0; i < p; ++i) order_[i] = i;
    std::sort(order_.begin(), order_.end(), [&](int a, int b) {
      if (p_.degree(a) != p_.degree(b)) return p_.degree(a) > p_.degree(b);
      return a < b;
    });
    slot_of_.assign(p, -1);
    for (int i = 0; i < p; ++i) slot_of_[order_[i]] = i;
    future_edges_.assign(p + 1, 0);
    for (int i = p - 1; i >= 0; --i) {
      future_edges_[i] = future_edges_[i + 1];
      for (int q : p_.neighbors(order_[i]))
        if (slot_of_[q] > i) ++future_edges_[i];
    }
    required_.resize(p);
    max_neighbor_slot_.assign(p, -1);
    for (int i = 0; i < p; ++i) {
      for (int q : p_.neighbors(order_[i])) {
        if (slot_of_[q] < i) required_[i].push_back(slot_of_[q]);
        max_neighbor_slot_[i] = std::max(max_neighbor_slot_[i], slot_of_[q]);
      }
    }
    branch_.resize(p);
    nbr_.resize(p);
    unassigned_count_ = n_;
    unused_edges_ = g_.edge_count();
  }

  bool run() { return build(0); }

 private:
  void assign(int v, int slot) {
    unused_edges_ -= (adj_[v] & ~assigned_).count();
    assigned_.set(v);
    branch_[slot].set(v);
    nbr_[slot] |= adj_[v];
    --unassigned_count_;
  }

  void unassign(int v, int slot, const SmallBits& saved_nbr) {
    assigned_.reset(v);
    branch_[slot].reset(v);
    nbr_[slot] = saved_nbr;
    unused_edges_ += (adj_[v] & ~assigned_).count();
    ++unassigned_count_;
  }

  bool feasible(int slot) const {
    int p = p_.vertex_count();
    if (unassigned_count_ < p - slot - 1) return false;
    if (unused_edges_ < future_edges_[slot + 1]) return false;
    for (int j = 0; j <= slot; ++j)
      if (max_neighbor_slot_[j] > slot && !(nbr_[j] & ~assigned_).any())
        return false;
    return true;
  }

  bool satisfied(int slot) const {
    for (int j : required_[slot])
      if (!nbr_[slot].intersects(branch_[j])) return false;
    return true;
  }

  bool build(int slot) {
    if (slot == p_.vertex_count()) return true;
    for (int seed = 0; seed < n_; ++seed) {
      if (assigned_.test(seed)) continue;
      SmallBits saved = nbr_[slot];
      assign(seed, slot);
      SmallBits banned;
      bool ok = explore(slot, seed, banned);
      unassign(seed, slot, saved);
      if (ok) return true;
    }
    return false;
  }

  bool explore(int slot, int seed, SmallBits& banned) {
    if (!feasible(slot)) return false;
    if (satisfied(slot) && build(slot + 1)) return true;
    SmallBits frontier = nbr_[slot] & ~assigned_ & ~banned;
    std::vector<int> ext;
    frontier.for_each([&](int v) {
      if (v > seed) ext.push_back(v);
    });
    std::vector<int> newly;
    bool found = false;
    for (int v : ext) {
      SmallBits saved = nbr_[slot];
      assign(v, slot);
      found = explore(slot, seed, banned);
      unassign(v, slot, saved);
      if (found) break;
      banned.set(v);
      newly.push_back(v);
    }
    for (int v : newly) banned.reset(v);
    return found;
  }

  const Graph& g_;
  const Graph& p_;
  int n_;
  std::vector<SmallBits> adj_;
  std::vector<int> order_, slot_of_, future_edges_;
  std::vector<std::vector<int>> required_;
  std::vector<int> max_neighbor_slot_;
  std::vector<SmallBits> branch_, nbr_;
  SmallBits assigned_;
  int unassigned_count_, unused_edges_;
};

// Searches for a minor model: one connected branch set per pattern vertex,
// pairwise disjoint, with a g-edge between branch sets for every pattern
// edge. Pattern vertices are processed most-constrained-first; branch sets
// are grown as connected sets with a banned-list so each set is visited once.
class MinorSearch {
 public:
  MinorSearch(const Graph& g, const Graph& pattern) : g_(g), p_(pattern) {
    int p = p_.vertex_count();
    order_.resize(p);
    for (int i = 0; i < p; ++i) order_[i] = i;
    std::sort(order_.begin(), order_.end(), [&](int a, int b) {
      if (p_.degree(a) != p_.degree(b)) return p_.degree(a) > p_.degree(b);
      return a < b;
    });
    slot_of_.assign(p, -1);
    for (int i = 0; i < p; ++i) slot_of_[order_[i]] = i;
    assign_.assign(g_.vertex_count(), -1);
    // pattern edges with both endpoints still unplaced after slot i
    future_edges_.assign(p + 1, 0);
    for (int i = p - 1; i >= 0; --i) {
      future_edges_[i] = future_edges_[i + 1];
      for (int q : p_.neighbors(order_[i]))
        if (slot_of_[q] > i) ++future_edges_[i];
    }
    unassigned_ = g_.vertex_count();
  }

  bool run() { return build(0); }

 private:
  bool build(int slot) {
    int p = p_.vertex_count();
    if (slot == p) return true;
    if (unassigned_ < p - slot) return false;
    int n = g_.vertex_count();
    for (int seed = 0; seed < n; ++seed) {
      if (assign_[seed] != -1) continue;
      std::vector<char> banned(n, 0);
      std::vector<int> set{seed};
      assign_[seed] = slot;
      --unassigned_;
      bool ok = explore(slot, seed, set, banned);
      assign_[seed] = -1;
      ++unassigned_;
      if (ok) return true;
    }
    return false;
  }

  // `set` is assigned to `slot`. Try to accept it, then try all one-vertex
  // extensions (vertices > seed, unassigned, not banned).
  bool explore(int slot, int seed, std::vector<int>& set, std::vector<char>& banned) {
    if (!feasible(slot)) return false;
    if (satisfies_required(slot, set) && build(slot + 1)) return true;
    // collect frontier
    std::vector<int> frontier;
    for (int v : set)
      for (int w : g_.neighbors(v))
        if (w > seed && assign_[w] == -1 && !banned[w]) frontier.push_back(w);
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    std::vector<int> newly_banned;
    bool found = false;
    for (int w : frontier) {
      set.push_back(w);
      assign_[w] = slot;
      --unassigned_;
      found = explore(slot, seed, set, banned);
      ++unassigned_;
      assign_[w] = -1;
      set.pop_back();
      if (found) break;
      banned[w] = 1;
      newly_banned.push_back(w);
    }
    for (int w : newly_banned) banned[w] = 0;
    return found;
  }

  // Necessary conditions on the not-yet-assigned remainder of g.
  bool feasible(int slot) const {
    int p = p_.vertex_count();
    if (unassigned_ < p - slot - 1) return false;
    // every pattern edge among future slots needs its own g-edge with both
    // endpoints unassigned
    if (future_edges_[slot + 1] > 0) {
      int avail = 0;
      for (const auto& [u, v] : g_.edges())
        if (assign_[u] == -1 && assign_[v] == -1 &&
            ++avail >= future_edges_[slot + 1])
          break;
      if (avail < future_edges_[slot + 1]) return false;
    }
    // a built set with a pattern edge to a future slot needs an unassigned
    // neighbor to attach the future branch set
    for (int j = 0; j <= slot; ++j) {
      bool needs = false;
      for (int q : p_.neighbors(order_[j]))
        if (slot_of_[q] > slot) { needs = true; break; }
      if (!needs) continue;
      bool touch = false;
      for (int v = 0; v < g_.vertex_count() && !touch; ++v) {
        if (assign_[v] != j) continue;
        for (int w : g_.neighbors(v))
          if (assign_[w] == -1) { touch = true; break; }
      }
      if (!touch) return false;
    }
    return true;
  }

  bool satisfies_required(int slot, const std::vector<int>& set) const {
    for (int q : p_.neighbors(order_[slot])) {
      int j = slot_of_[q];
      if (j >= slot) continue;
      bool adj = false;
      for (int v : set) {
        for (int w : g_.neighbors(v))
          if (assign_[w] == j) { adj = true; break; }
        if (adj) break;
      }
      if (!adj) return false;
    }
    return true;
  }

  const Graph& g_;
  const Graph& p_;
  std::vector<int> order_;    // slot -> pattern vertex
  std::vector<int> slot_of_;  // pattern vertex -> slot
  std::vector<int> future_edges_;
  std::vector<int> assign_;   // g vertex -> slot or -1
  int unassigned_;
};

}  // namespace detail

/// True iff g contains `pattern` as a minor. Exact search for a minor model;
/// only sensible for constant-size patterns (cap kMinorPatternCap vertices).
inline bool has_minor(const Graph& g, const Graph& pattern) {
  if (pattern.vertex_count() > kMinorPatternCap)
    throw std::invalid_argument("has_minor: pattern exceeds size cap");
  if (pattern.vertex_count() == 0) return true;
  if (g.vertex_count() < pattern.vertex_count()) return false;
  if (g.edge_count() < pattern.edge_count()) return false;
  if (g.vertex_count() <= detail::SmallBits::kMaxBits) {
    detail::MinorSearchBits search(g, pattern);
    return search.run();
  }
  detail::MinorSearch search(g, pattern);
  return search.run();
}

}  // namespace sqroot
