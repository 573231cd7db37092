#pragma once

// Brute-force ground truth for square roots of small graphs: exhaustive
// DFS over edge subsets of g (every root is a spanning subgraph of its
// square), with dead-end pruning and optional family restriction. Used to
// verify the reduction rules and the Claim-5 search throughout the tests.

#include <cstdint>

#include "sqroot/families.hpp"
#include "sqroot/graph.hpp"

namespace sqroot {

inline constexpr int kOracleEdgeCap = 24;

struct OracleCapExceeded : std::runtime_error {
  explicit OracleCapExceeded(int m, int cap)
      : std::runtime_error("oracle: " + std::to_string(m) +
                           " edges exceeds cap " + std::to_string(cap)) {}
};

struct RootWitness {
  EdgeList edge_set;  // sorted
  bool minimal = true;
  std::vector<std::string> family_tags;  // built-in families containing it
};

inline bool is_square_root(const Graph& h, const Graph& g) {
  if (h.vertex_count() != g.vertex_count())
    throw std::invalid_argument("is_square_root: vertex count mismatch");
  return kth_power(h, 2) == g;
}

inline bool is_minimal_root(const Graph& h, const Graph& g) {
  if (!is_square_root(h, g))
    throw std::invalid_argument("is_minimal_root: h is not a square root of g");
  for (const auto& e : h.edges())
    if (kth_power(h.with_edges_removed({e}), 2) == g) return false;
  return true;
}

namespace detail {

class RootEnumerator {
 public:
  RootEnumerator(const Graph& g, const FamilyConfig* fam, int edge_cap,
                 bool stop_at_first_family_root)
      : g_(g), fam_(fam), first_only_(stop_at_first_family_root) {
    m_ = g.edge_count();
    if (m_ > edge_cap) throw OracleCapExceeded(m_, edge_cap);
    edges_ = g.edges();
    status_.assign(m_, kUndecided);
    chosen_adj_.assign(g.vertex_count(), {});
    // candidate covers per g-edge: the edge itself plus 2-paths through
    // common neighbors (as pairs of half-edge indices)
    covers_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      auto [x, y] = edges_[i];
      for (int z : g.neighbors(x))
        if (z != y && g.has_edge(z, y))
          covers_[i].emplace_back(edge_index(x, z), edge_index(z, y));
    }
  }

  void run() { recurse(0); }

  std::vector<RootWitness> witnesses;
  bool found_family_root = false;

 private:
  static constexpr std::int8_t kUndecided = 0, kIn = 1, kOut = 2;

  int edge_index(int u, int v) const {
    Edge e = make_edge(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    return static_cast<int>(it - edges_.begin());
  }

  bool coverable(int i) const {
    if (status_[i] != kOut) return true;
    for (auto [h1, h2] : covers_[i])
      if (status_[h1] != kOut && status_[h2] != kOut) return true;
    return false;
  }

  // edges whose cover candidates involve edge (a,b)
  bool affected_still_coverable(int i) const {
    auto [a, b] = edges_[i];
    if (!coverable(i)) return false;
    for (int y : g_.neighbors(b))
      if (y != a && g_.has_edge(a, y) && !coverable(edge_index(a, y))) return false;
    for (int y : g_.neighbors(a))
      if (y != b && g_.has_edge(b, y) && !coverable(edge_index(b, y))) return false;
    return true;
  }

  bool include_is_valid(int i) const {
    auto [a, b] = edges_[i];
    for (int z : chosen_adj_[a])
      if (z != b && !g_.has_edge(z, b)) return false;
    for (int z : chosen_adj_[b])
      if (z != a && !g_.has_edge(z, a)) return false;
    return true;
  }

  bool contains_known_root() const {
    for (std::uint32_t r : root_masks_)
      if ((chosen_mask_ & r) == r) return true;
    return false;
  }

  Graph chosen_graph() const {
    EdgeList es;
    es.reserve(chosen_count_);
    for (int i = 0; i < m_; ++i)
      if (status_[i] == kIn) es.push_back(edges_[i]);
    return Graph(g_.vertex_count(), std::move(es));
  }

  void leaf() {
    Graph h = chosen_graph();
    if (!is_square_root(h, g_)) return;  // pruning should prevent this
    root_masks_.push_back(chosen_mask_);
    bool in_family = fam_ == nullptr || fam_->is_member(h);
    if (first_only_) {
      if (in_family) found_family_root = true;
      return;
    }
    if (!in_family || !is_minimal_root(h, g_)) return;
    RootWitness w;
    w.edge_set = h.edges();
    w.minimal = true;
    for (const auto& f : builtin_families())
      if (f.is_member(h)) w.family_tags.push_back(f.name);
    witnesses.push_back(std::move(w));
  }

  void recurse(int idx) {
    if (first_only_ && found_family_root) return;
    if (idx == m_) {
      leaf();
      return;
    }
    auto [a, b] = edges_[idx];
    // exclude first: sparse candidates come up before their supersets
    status_[idx] = kOut;
    if (affected_still_coverable(idx)) recurse(idx + 1);
    status_[idx] = kUndecided;
    if (first_only_ && found_family_root) return;

    if (!include_is_valid(idx)) return;
    status_[idx] = kIn;
    chosen_adj_[a].push_back(b);
    chosen_adj_[b].push_back(a);
    chosen_mask_ |= std::uint32_t{1} << idx;
    ++chosen_count_;
    bool prune = contains_known_root();
    if (!prune && fam_ != nullptr) {
      if (fam_->max_edges && chosen_count_ > fam_->max_edges(g_.vertex_count()))
        prune = true;
      else if (chosen_count_ % 4 == 0 && !fam_->is_member(chosen_graph()))
        prune = true;
    }
    if (!prune) recurse(idx + 1);
    --chosen_count_;
    chosen_mask_ &= ~(std::uint32_t{1} << idx);
    chosen_adj_[a].pop_back();
    chosen_adj_[b].pop_back();
    status_[idx] = kUndecided;
  }

  const Graph& g_;
  const FamilyConfig* fam_;
  bool first_only_;
  int m_ = 0;
  EdgeList edges_;
  std::vector<std::vector<std::pair<int, int>>> covers_;
  std::vector<std::int8_t> status_;
  std::vector<std::vector<int>> chosen_adj_;
  std::uint32_t chosen_mask_ = 0;
  int chosen_count_ = 0;
  std::vector<std::uint32_t> root_masks_;
};

}  // namespace detail

/// All minimal square roots of g, restricted to fam members when fam given.
/// Deterministic: results sorted by edge list.
inline std::vector<RootWitness> enumerate_minimal_roots(
    const Graph& g, const FamilyConfig* fam = nullptr,
    int edge_cap = kOracleEdgeCap) {
  detail::RootEnumerator en(g, fam, edge_cap, false);
  en.run();
  std::sort(en.witnesses.begin(), en.witnesses.end(),
            [](const RootWitness& a, const RootWitness& b) {
              return a.edge_set < b.edge_set;
            });
  return en.witnesses;
}

/// True iff some square root of g belongs to fam (equivalently some minimal
/// root does, since fam is closed under subgraphs).
inline bool has_family_root_bruteforce(const Graph& g, const FamilyConfig& fam,
                                       int edge_cap = kOracleEdgeCap) {
  detail::RootEnumerator en(g, &fam, edge_cap, true);
  en.run();
  return en.found_family_root;
}

}  // namespace sqroot
