#pragma once

// Backtracking search for an edge set L of the reduced graph G' such that
//   (i)   R is inside L and B is disjoint from it,
//   (ii)  every G'-edge is in L or closed by an L-2-path,
//   (iii) every L-2-path closes in G' or is witnessed by red edges at a hub,
//   (iv)  (V, L) belongs to the family,
// followed by root minimalization, twin reattachment, and the solve driver
// that glues the reduction pipeline together per component.

#include <chrono>
#include <deque>
#include <optional>

#include "sqroot/oracle.hpp"
#include "sqroot/reduction.hpp"

namespace sqroot {

struct SearchTimeout : std::runtime_error {
  SearchTimeout() : std::runtime_error("search: time budget exhausted") {}
};

struct SearchStats {
  long long nodes_expanded = 0;
};

using Clock = std::chrono::steady_clock;

namespace detail {

class EdgeSetSearch {
 public:
  EdgeSetSearch(const LabeledInstance& inst, const FamilyConfig& fam,
                Clock::time_point deadline)
      : g_(inst.g), fam_(fam), deadline_(deadline) {
    n_ = g_.vertex_count();
    m_ = g_.edge_count();
    edges_ = g_.edges();
    status_.assign(m_, kUndec);

    // excused pairs for condition (iii): an edge of G' or a red 2-path at a hub
    excused_.assign(n_, std::vector<char>(n_, 0));
    for (const auto& [u, v] : edges_) excused_[u][v] = excused_[v][u] = 1;
    for (int u : inst.hubs) {
      std::vector<int> red_nb;
      for (int x : g_.neighbors(u))
        if (inst.red.count(make_edge(u, x))) red_nb.push_back(x);
      for (size_t i = 0; i < red_nb.size(); ++i)
        for (size_t j = i + 1; j < red_nb.size(); ++j)
          excused_[red_nb[i]][red_nb[j]] = excused_[red_nb[j]][red_nb[i]] = 1;
    }

    // covers per target edge: itself, then one per common G'-neighbor
    covers_.assign(m_, {});
    participation_.assign(m_, {});
    for (int t = 0; t < m_; ++t) {
      auto [x, y] = edges_[t];
      add_cover(t, {t, t});
      for (int z : g_.neighbors(x))
        if (z != y && g_.has_edge(z, y))
          add_cover(t, {edge_index(x, z), edge_index(z, y)});
    }
    alive_.assign(m_, 0);
    for (int t = 0; t < m_; ++t) alive_[t] = static_cast<int>(covers_[t].size());
    in_degree_.assign(n_, 0);
    deaths_.clear();
    ins_.clear();
    for (int t = 0; t < m_; ++t) {
      deaths_.emplace_back(covers_[t].size(), 0);
      ins_.emplace_back(covers_[t].size(), 0);
    }
    full_.assign(m_, 0);
    unsatisfied_ = m_;

    red_ = inst.red;  // never deleted: the rules refuse red edges in S
    for (const Edge& e : inst.blue)  // blue edges may have been deleted with S
      if (g_.has_edge(e.first, e.second)) blue_.insert(e);
  }

  std::optional<EdgeList> run(SearchStats* stats) {
    stats_ = stats;
    // condition (i): pre-assign labels; a conflict here means no L exists
    size_t mark = trail_.size();
    bool ok = true;
    for (const Edge& e : red_) ok = ok && enqueue(edge_index(e.first, e.second), kIn);
    for (const Edge& e : blue_) ok = ok && enqueue(edge_index(e.first, e.second), kOut);
    if (ok) ok = propagate();
    if (!ok) {
      undo_to(mark);
      return std::nullopt;
    }
    EdgeList result;
    if (!dfs(result)) return std::nullopt;
    return result;
  }

 private:
  static constexpr std::int8_t kUndec = 0, kIn = 1, kOut = 2;

  struct Cover {
    int half1, half2;  // edge indices; self cover has half1 == half2 == target
  };

  void add_cover(int target, Cover c) {
    int idx = static_cast<int>(covers_[target].size());
    covers_[target].push_back(c);
    participation_[c.half1].emplace_back(target, idx);
    if (c.half2 != c.half1) participation_[c.half2].emplace_back(target, idx);
  }

  int edge_index(int u, int v) const {
    Edge e = make_edge(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e)
      throw std::logic_error("search: edge index lookup on a non-edge");
    return static_cast<int>(it - edges_.begin());
  }

  int cover_size(int t, int c) const {
    return covers_[t][c].half1 == covers_[t][c].half2 ? 1 : 2;
  }

  bool enqueue(int e, std::int8_t val) {
    if (status_[e] == val) return true;
    if (status_[e] != kUndec) return false;  // direct clash
    queue_.emplace_back(e, val);
    return true;
  }

  // Applies one assignment. All counter updates run to completion even on a
  // contradiction, so undo_to can always reverse them symmetrically.
  bool apply(int e, std::int8_t val) {
    if (status_[e] == val) return true;
    if (status_[e] != kUndec) return false;
    status_[e] = val;
    trail_.push_back(e);
    bool ok = true;
    if (val == kIn) {
      ++total_in_;
      auto [a, b] = edges_[e];
      if (in_degree_[a]++ == 0) ++active_;
      if (in_degree_[b]++ == 0) ++active_;
      for (auto [t, c] : participation_[e]) {
        if (++ins_[t][c] == cover_size(t, c))
          if (++full_[t] == 1) --unsatisfied_;
      }
      // (iii): edges sharing an endpoint whose far pair is not excused go out
      for (int c : g_.neighbors(a)) {
        if (c == b || excused_[b][c]) continue;
        ok = enqueue(edge_index(a, c), kOut) && ok;
      }
      for (int d : g_.neighbors(b)) {
        if (d == a || excused_[a][d]) continue;
        ok = enqueue(edge_index(b, d), kOut) && ok;
      }
      // the in-set restricted to its non-isolated vertices must stay in the
      // family, so the family's edge budget applies at the active count
      if (fam_.max_edges && total_in_ > fam_.max_edges(active_)) ok = false;
      if (ok && total_in_ % kFamilyCheckStride == 0 && !family_ok()) ok = false;
    } else {
      for (auto [t, c] : participation_[e]) {
        if (++deaths_[t][c] == 1) {
          --alive_[t];
          if (full_[t] == 0) {
            if (alive_[t] == 0)
              ok = false;
            else if (ok && alive_[t] == 1 && !force_last_cover(t))
              ok = false;
          }
        }
      }
    }
    return ok;
  }

  bool force_last_cover(int t) {
    for (size_t c = 0; c < covers_[t].size(); ++c) {
      if (deaths_[t][c] != 0) continue;
      const Cover& cov = covers_[t][c];
      if (!enqueue(cov.half1, kIn)) return false;
      if (cov.half2 != cov.half1 && !enqueue(cov.half2, kIn)) return false;
      return true;
    }
    return false;  // alive count said one exists
  }

  bool propagate() {
    while (!queue_.empty()) {
      auto [e, val] = queue_.front();
      queue_.pop_front();
      if (!apply(e, val)) {
        queue_.clear();
        return false;
      }
    }
    return true;
  }

  void undo_to(size_t mark) {
    while (trail_.size() > mark) {
      int e = trail_.back();
      trail_.pop_back();
      std::int8_t val = status_[e];
      status_[e] = kUndec;
      if (val == kIn) {
        --total_in_;
        auto [a, b] = edges_[e];
        if (--in_degree_[a] == 0) --active_;
        if (--in_degree_[b] == 0) --active_;
        for (auto [t, c] : participation_[e]) {
          if (ins_[t][c]-- == cover_size(t, c))
            if (full_[t]-- == 1) ++unsatisfied_;
        }
      } else {
        for (auto [t, c] : participation_[e])
          if (deaths_[t][c]-- == 1) ++alive_[t];
      }
    }
  }

  Graph chosen_graph() const {
    EdgeList es;
    for (int i = 0; i < m_; ++i)
      if (status_[i] == kIn) es.push_back(edges_[i]);
    return Graph(n_, std::move(es));
  }

  bool family_ok() const { return fam_.is_member(chosen_graph()); }

  int pick_branch_edge() const {
    int best_t = -1;
    for (int t = 0; t < m_; ++t) {
      if (full_[t] > 0) continue;
      if (best_t == -1 || alive_[t] < alive_[best_t]) best_t = t;
    }
    // among undecided halves of the target's alive covers, prefer the edge
    // taking part in the fewest alive covers of unsatisfied targets
    int best_e = -1, best_score = 0;
    for (size_t c = 0; c < covers_[best_t].size(); ++c) {
      if (deaths_[best_t][c] != 0) continue;
      for (int half : {covers_[best_t][c].half1, covers_[best_t][c].half2}) {
        if (status_[half] != kUndec) continue;
        int score = 0;
        for (auto [t2, c2] : participation_[half])
          if (full_[t2] == 0 && deaths_[t2][c2] == 0) ++score;
        if (best_e == -1 || score > best_score ||
            (score == best_score && half < best_e)) {
          best_e = half;
          best_score = score;
        }
      }
    }
    return best_e;
  }

  bool dfs(EdgeList& result) {
    if (stats_) ++stats_->nodes_expanded;
    if (Clock::now() > deadline_) throw SearchTimeout();
    if (unsatisfied_ == 0) {
      // any completion adds edges on top of the current in-set, and the
      // family is subgraph-closed, so only the bare in-set can succeed
      Graph h = chosen_graph();
      if (!fam_.is_member(h)) return false;
      result = h.edges();
      return true;
    }
    int e = pick_branch_edge();
    if (e < 0) return false;
    for (std::int8_t val : {kOut, kIn}) {
      size_t mark = trail_.size();
      queue_.clear();
      if (apply(e, val) && propagate() && dfs(result)) return true;
      undo_to(mark);
    }
    return false;
  }

  static constexpr int kFamilyCheckStride = 1;

  const Graph& g_;
  const FamilyConfig& fam_;
  Clock::time_point deadline_;
  SearchStats* stats_ = nullptr;
  int n_ = 0, m_ = 0;
  EdgeList edges_;
  std::set<Edge> red_, blue_;
  std::vector<std::vector<char>> excused_;
  std::vector<std::vector<Cover>> covers_;
  std::vector<std::vector<std::pair<int, int>>> participation_;
  std::vector<int> alive_;
  std::vector<std::vector<int>> deaths_, ins_;
  std::vector<int> full_;
  std::vector<int> in_degree_;
  int active_ = 0;  // vertices with at least one in-edge
  int unsatisfied_ = 0;
  int total_in_ = 0;
  std::vector<std::int8_t> status_;
  std::vector<int> trail_;
  std::deque<std::pair<int, std::int8_t>> queue_;
};

}  // namespace detail

/// Checks conditions (i)-(iv) for a candidate L outside the search machinery.
inline bool verify_edge_set_conditions(const LabeledInstance& inst,
                                       const FamilyConfig& fam, const EdgeList& L,
                                       std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const Graph& g = inst.g;
  std::set<Edge> in(L.begin(), L.end());
  for (const Edge& e : L)
    if (!g.has_edge(e.first, e.second)) return fail("L has a non-G' edge");
  for (const Edge& e : inst.red)
    if (!in.count(e)) return fail("red edge missing from L");
  for (const Edge& e : inst.blue)
    if (in.count(e)) return fail("blue edge inside L");
  Graph h(g.vertex_count(), L);
  for (const auto& [x, y] : g.edges()) {
    if (in.count(make_edge(x, y))) continue;
    bool closed = false;
    for (int z : h.neighbors(x))
      if (h.has_edge(z, y)) { closed = true; break; }
    if (!closed) return fail("G' edge not covered by L");
  }
  for (int z = 0; z < g.vertex_count(); ++z) {
    const auto& nb = h.neighbors(z);
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j) {
        int x = nb[i], y = nb[j];
        if (g.has_edge(x, y)) continue;
        bool witnessed = false;
        for (int u : inst.hubs)
          if (inst.red.count(make_edge(u, x)) && inst.red.count(make_edge(u, y))) {
            witnessed = true;
            break;
          }
        if (!witnessed) return fail("unwitnessed L-2-path");
      }
  }
  if (!fam.is_member(h)) return fail("L graph outside family");
  return true;
}

/// Some L satisfying Claim-5 conditions (i)-(iv), or nullopt if none exists.
inline std::optional<EdgeList> search_edge_set(
    const LabeledInstance& inst, const FamilyConfig& fam,
    SearchStats* stats = nullptr,
    Clock::time_point deadline = Clock::time_point::max()) {
  if (inst.status != ReduceStatus::running)
    throw std::invalid_argument("search_edge_set: instance is not running");
  detail::EdgeSetSearch search(inst, fam, deadline);
  return search.run(stats);
}

/// Greedily removes edges in lexicographic order while the square stays g.
/// The result is a minimal root; family membership survives by closure.
inline EdgeList minimalize_root(const EdgeList& root, const Graph& g,
                                const FamilyConfig& fam) {
  Graph h(g.vertex_count(), root);
  if (!is_square_root(h, g) || !fam.is_member(h))
    throw std::invalid_argument("minimalize_root: not a family root of g");
  EdgeList order = h.edges();
  for (const Edge& e : order) {
    Graph candidate = h.with_edges_removed({e});
    if (kth_power(candidate, 2) == g) h = std::move(candidate);
  }
  return h.edges();
}

/// Replays the twin log in reverse over `base` (the graph before twin
/// deletions). Each deleted twin is re-attached next to a pendant class
/// member, or across a degree-2 twin triple for the all-twins pipelines.
/// Returns nullopt when no pattern vertex exists or a verification fails.
inline std::optional<EdgeList> reattach_twins(const EdgeList& root,
                                              const Graph& base,
                                              const std::vector<TwinDeletion>& log,
                                              const FamilyConfig& fam) {
  std::vector<char> active(base.vertex_count(), 1);
  for (const auto& entry : log) active[entry.removed] = 0;
  auto active_list = [&] {
    std::vector<int> out;
    for (int v = 0; v < base.vertex_count(); ++v)
      if (active[v]) out.push_back(v);
    return out;
  };
  auto square_matches = [&](const EdgeList& r) {
    std::vector<int> verts = active_list();
    std::vector<int> local(base.vertex_count(), -1);
    for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
    EdgeList mapped;
    for (const auto& [u, v] : r) {
      if (local[u] == -1 || local[v] == -1) return false;
      mapped.push_back(make_edge(local[u], local[v]));
    }
    Graph h(static_cast<int>(verts.size()), mapped);
    return kth_power(h, 2) == induced_subgraph(base, verts) && fam.is_member(h);
  };

  EdgeList cur = root;
  std::sort(cur.begin(), cur.end());
  if (!square_matches(cur)) return std::nullopt;

  for (auto it = log.rbegin(); it != log.rend(); ++it) {
    const TwinDeletion& entry = *it;
    // the pendant argument needs a minimal root; re-minimalize in place
    {
      std::vector<int> verts = active_list();
      std::vector<int> local(base.vertex_count(), -1);
      for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
      EdgeList mapped;
      for (const auto& [u, v] : cur) mapped.push_back(make_edge(local[u], local[v]));
      std::sort(mapped.begin(), mapped.end());
      EdgeList shrunk = minimalize_root(mapped, induced_subgraph(base, verts), fam);
      cur.clear();
      for (const auto& [u, v] : shrunk) cur.push_back(make_edge(verts[u], verts[v]));
      std::sort(cur.begin(), cur.end());
    }
    Graph h_view(base.vertex_count(), cur);  // ids stay in base space
    std::optional<EdgeList> attach;
    for (int w : entry.remaining) {
      if (!active[w] || h_view.degree(w) != 1) continue;
      attach = EdgeList{make_edge(entry.removed, h_view.neighbors(w)[0])};
      break;
    }
    if (!attach && fam.twin_rule == TwinRule::all_twins) {
      // three pairwise nonadjacent degree-2 class members with equal
      // neighborhoods {w, y}: duplicate that attachment for the twin
      const auto& rem = entry.remaining;
      for (size_t i = 0; i < rem.size() && !attach; ++i)
        for (size_t j = i + 1; j < rem.size() && !attach; ++j)
          for (size_t k = j + 1; k < rem.size() && !attach; ++k) {
            int x = rem[i], y = rem[j], z = rem[k];
            if (!active[x] || !active[y] || !active[z]) continue;
            if (h_view.degree(x) != 2 || h_view.degree(y) != 2 ||
                h_view.degree(z) != 2)
              continue;
            if (h_view.has_edge(x, y) || h_view.has_edge(x, z) ||
                h_view.has_edge(y, z))
              continue;
            if (h_view.neighbors(x) != h_view.neighbors(y) ||
                h_view.neighbors(x) != h_view.neighbors(z))
              continue;
            attach = EdgeList{make_edge(entry.removed, h_view.neighbors(x)[0]),
                              make_edge(entry.removed, h_view.neighbors(x)[1])};
          }
    }
    if (!attach) return std::nullopt;
    active[entry.removed] = 1;
    for (const Edge& e : *attach) cur.push_back(e);
    std::sort(cur.begin(), cur.end());
    if (!square_matches(cur)) return std::nullopt;
  }
  return cur;
}

// ---------------------------------------------------------------------------
// solve driver

enum class SolveReason {
  none,
  label_conflict,
  missing_square_edge,
  red_deleted,
  width_exceeded,
  no_edge_set,
  search_timeout,
  reconstruction_failed,
};

inline const char* to_string(SolveReason r) {
  switch (r) {
    case SolveReason::none: return "none";
    case SolveReason::label_conflict: return "label-conflict";
    case SolveReason::missing_square_edge: return "missing-square-edge";
    case SolveReason::red_deleted: return "red-deleted";
    case SolveReason::width_exceeded: return "width-exceeded";
    case SolveReason::no_edge_set: return "no-edge-set";
    case SolveReason::search_timeout: return "search-timeout";
    case SolveReason::reconstruction_failed: return "reconstruction-failed";
  }
  return "?";
}

inline SolveReason from_no_answer(NoAnswerReason r) {
  switch (r) {
    case NoAnswerReason::label_conflict: return SolveReason::label_conflict;
    case NoAnswerReason::missing_square_edge: return SolveReason::missing_square_edge;
    case NoAnswerReason::red_deleted: return SolveReason::red_deleted;
    case NoAnswerReason::width_exceeded: return SolveReason::width_exceeded;
    case NoAnswerReason::none: return SolveReason::none;
  }
  return SolveReason::none;
}

struct ComponentTrace {
  std::vector<int> vertices;  // input ids
  int edges_before = 0;
  std::vector<std::pair<int, std::vector<int>>> twin_log;  // input ids
  int vertices_after_twins = 0;
  int edges_after_twins = 0;
  std::vector<int> hubs;  // input ids
  EdgeList red, blue, deleted;
  int edges_after_deletion = 0;
  std::int64_t width_cutoff = kWidthUnlimited;
  int width_checked = -1;  // -1: vacuous or not reached
  bool twin_fallback = false;
  std::string status = "running";
  EdgeList root;  // input ids, on success
};

struct SolveOutcome {
  bool yes = false;
  EdgeList root;  // input ids, present iff yes
  std::string family;
  SolveReason reason = SolveReason::none;
  long long nodes_expanded = 0;
  std::vector<ComponentTrace> trace;
};

struct SolveOptions {
  bool twin_rule_enabled = true;
  double timeout_secs = 30.0;  // per component
};

namespace detail {

struct ReductionRun {
  LabeledInstance inst;
  Graph twin_reduced;   // after twin deletions, before edge deletions
  ComponentTrace trace;  // ids in the component graph's space
};

inline ReductionRun run_reduction(const Graph& cg, const FamilyConfig& fam,
                                  bool twin_enabled) {
  ReductionRun run;
  ComponentTrace& tr = run.trace;
  tr.edges_before = cg.edge_count();
  tr.width_cutoff = fam.width_cutoff;

  LabeledInstance& inst = run.inst;
  inst = make_instance(cg, fam, twin_enabled);
  run.twin_reduced = inst.g;
  for (const auto& d : inst.twin_log) tr.twin_log.emplace_back(d.removed, d.remaining);
  tr.vertices_after_twins = inst.g.vertex_count();
  tr.edges_after_twins = inst.g.edge_count();

  label_edges(inst, fam);
  auto to_input = [&](const Edge& e) {
    return make_edge(inst.kept[e.first], inst.kept[e.second]);
  };
  if (inst.status == ReduceStatus::running) {
    for (int u : inst.hubs) tr.hubs.push_back(inst.kept[u]);
    for (const Edge& e : inst.red) tr.red.push_back(to_input(e));
    for (const Edge& e : inst.blue) tr.blue.push_back(to_input(e));
    std::sort(tr.red.begin(), tr.red.end());
    std::sort(tr.blue.begin(), tr.blue.end());
  }
  delete_irrelevant_edges(inst);
  if (inst.status == ReduceStatus::running) {
    for (const Edge& e : inst.deleted) tr.deleted.push_back(to_input(e));
    std::sort(tr.deleted.begin(), tr.deleted.end());
    tr.edges_after_deletion = inst.g.edge_count();
  }
  tr.width_checked = width_cutoff_check(inst, fam);
  if (inst.status != ReduceStatus::running) tr.status = to_string(inst.reason);
  return run;
}

/// Rewrites a component-local trace into input-graph ids.
inline void lift_trace(ComponentTrace& tr, const std::vector<int>& comp) {
  tr.vertices = comp;
  auto lift_edge = [&](Edge& e) { e = make_edge(comp[e.first], comp[e.second]); };
  for (auto& e : tr.red) lift_edge(e);
  for (auto& e : tr.blue) lift_edge(e);
  for (auto& e : tr.deleted) lift_edge(e);
  for (auto& e : tr.root) lift_edge(e);
  for (auto& [rm, rest] : tr.twin_log) {
    rm = comp[rm];
    for (int& v : rest) v = comp[v];
  }
  for (int& u : tr.hubs) u = comp[u];
  std::sort(tr.red.begin(), tr.red.end());
  std::sort(tr.blue.begin(), tr.blue.end());
  std::sort(tr.deleted.begin(), tr.deleted.end());
  std::sort(tr.root.begin(), tr.root.end());
}

struct ComponentResult {
  bool yes = false;
  EdgeList root;  // component-graph-local ids
  SolveReason reason = SolveReason::none;
  ComponentTrace trace;
};

inline ComponentResult solve_component(const Graph& cg, const FamilyConfig& fam,
                                        const SolveOptions& opts,
                                        SearchStats& stats, bool twin_enabled) {
  ComponentResult res;
  ReductionRun run = run_reduction(cg, fam, twin_enabled);
  LabeledInstance& inst = run.inst;
  const Graph& twin_reduced = run.twin_reduced;
  res.trace = std::move(run.trace);
  ComponentTrace& tr = res.trace;

  if (inst.status != ReduceStatus::running) {
    res.reason = from_no_answer(inst.reason);
    return res;
  }

  auto deadline = opts.timeout_secs >= 0
                      ? Clock::now() + std::chrono::microseconds(
                            static_cast<long long>(opts.timeout_secs * 1e6))
                      : Clock::time_point::max();
  std::optional<EdgeList> L;
  try {
    L = search_edge_set(inst, fam, &stats, deadline);
  } catch (const SearchTimeout&) {
    res.reason = SolveReason::search_timeout;
    tr.status = "search-timeout";
    return res;
  }
  if (!L) {
    res.reason = SolveReason::no_edge_set;
    tr.status = "no-edge-set";
    return res;
  }
  {
    std::string why;
    if (!verify_edge_set_conditions(inst, fam, *L, &why))
      throw std::logic_error("search returned an invalid edge set: " + why);
  }
  // Claim 5 interprets (V, L) as a root of the twin-reduced graph
  Graph h(twin_reduced.vertex_count(), *L);
  if (!is_square_root(h, twin_reduced) || !fam.is_member(h))
    throw std::logic_error("edge set is not a family root of the reduced graph");

  EdgeList minimal = minimalize_root(*L, twin_reduced, fam);
  EdgeList mapped;
  for (const auto& [u, v] : minimal)
    mapped.push_back(make_edge(inst.kept[u], inst.kept[v]));
  std::sort(mapped.begin(), mapped.end());

  EdgeList final_root;
  if (inst.twin_log.empty()) {
    final_root = mapped;
  } else {
    auto reattached = reattach_twins(mapped, cg, inst.twin_log, fam);
    if (!reattached) {
      // the searched root may not expose the pendant/degree-2 pattern the
      // reattachment argument extracts from *some* minimal root; rerun the
      // component with twin deletion disabled
      if (twin_enabled) {
        ComponentResult retry = solve_component(cg, fam, opts, stats, false);
        retry.trace.twin_fallback = true;
        return retry;
      }
      res.reason = SolveReason::reconstruction_failed;
      tr.status = "reconstruction-failed";
      return res;
    }
    final_root = *reattached;
  }

  Graph root_graph(cg.vertex_count(), final_root);
  if (!is_square_root(root_graph, cg) || !fam.is_member(root_graph))
    throw std::logic_error("reconstructed root failed verification");

  res.yes = true;
  res.root = final_root;
  tr.status = "yes";
  tr.root = final_root;
  return res;
}

}  // namespace detail

/// Full pipeline per connected component; a yes answer always carries a root
/// whose square is exactly g and which belongs to the family.
inline SolveOutcome solve(const Graph& g, const FamilyConfig& fam,
                          const SolveOptions& opts = {}) {
  SolveOutcome out;
  out.family = fam.name;
  SearchStats stats;
  EdgeList full_root;
  bool all_yes = true;
  for (const auto& comp : connected_components(g)) {
    Graph cg = induced_subgraph(g, comp);
    detail::ComponentResult res =
        detail::solve_component(cg, fam, opts, stats, opts.twin_rule_enabled);
    ComponentTrace tr = res.trace;
    detail::lift_trace(tr, comp);
    out.trace.push_back(std::move(tr));
    if (!res.yes) {
      out.reason = res.reason;
      all_yes = false;
      break;
    }
    for (const auto& [u, v] : res.root)
      full_root.push_back(make_edge(comp[u], comp[v]));
  }
  out.nodes_expanded = stats.nodes_expanded;
  if (!all_yes) return out;
  std::sort(full_root.begin(), full_root.end());
  Graph root_graph(g.vertex_count(), full_root);
  if (!is_square_root(root_graph, g) || !fam.is_member(root_graph))
    throw std::logic_error("solve: final certificate failed verification");
  out.yes = true;
  out.root = full_root;
  return out;
}

}  // namespace sqroot
