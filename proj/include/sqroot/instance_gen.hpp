#pragma once

// Random family members with planted roots, their squares, and perturbed
// near-miss variants, plus the on-disk corpus format (manifest.json next to
// one edge-list file per instance). Generation is a pure function of
// (family, n, seed).

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "sqroot/edge_list.hpp"
#include "sqroot/oracle.hpp"

namespace sqroot {

/// splitmix64; deterministic and platform-independent.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int below(int bound) {
    return bound <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(bound));
  }
  bool chance(int percent) { return below(100) < percent; }
};

namespace detail {

inline std::uint64_t mix_seed(const std::string& family, int n, std::uint64_t seed) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : family) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  h ^= static_cast<std::uint64_t>(n) * 0x9e3779b97f4a7c15ULL;
  h ^= seed + 0x632be59bd9b4e019ULL;
  return h;
}

inline Graph gen_forest(int n, Rng& rng) {
  EdgeList es;
  for (int v = 1; v < n; ++v)
    if (rng.chance(85)) es.push_back(make_edge(rng.below(v), v));
  return Graph(n, std::move(es));
}

inline Graph gen_caterpillar(int n, Rng& rng) {
  EdgeList es;
  int v = 0;
  while (v < n) {
    int comp = std::min(n - v, 1 + rng.below(8));
    int spine = 1 + rng.below(comp);
    for (int i = 1; i < spine; ++i) es.push_back(make_edge(v + i - 1, v + i));
    for (int i = spine; i < comp; ++i)
      es.push_back(make_edge(v + rng.below(spine), v + i));
    v += comp;
  }
  return Graph(n, std::move(es));
}

inline Graph gen_cactus(int n, Rng& rng) {
  EdgeList es;
  int used = 1;
  while (used < n) {
    int base = rng.below(used);
    int left = n - used;
    if (left >= 2 && rng.chance(55)) {
      int extra = 2 + rng.below(std::min(left - 2, 3) + 1);  // cycle length 3..
      int prev = base;
      for (int i = 0; i < extra; ++i) {
        es.push_back(make_edge(prev, used));
        prev = used++;
      }
      es.push_back(make_edge(prev, base));
    } else {
      es.push_back(make_edge(base, used++));
    }
  }
  return Graph(n, std::move(es));
}

inline Graph gen_outerplanar(int n, Rng& rng) {
  if (n <= 2) return path_graph(n);
  std::set<Edge> keep;
  for (int i = 0; i + 1 < n; ++i) keep.insert(make_edge(i, i + 1));
  keep.insert(make_edge(0, n - 1));
  // random triangulation of the polygon: split ranges recursively
  std::vector<std::pair<int, int>> stack{{0, n - 1}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    if (b - a < 2) continue;
    int k = a + 1 + rng.below(b - a - 1);
    keep.insert(make_edge(a, k));
    keep.insert(make_edge(k, b));
    stack.push_back({a, k});
    stack.push_back({k, b});
  }
  EdgeList es;
  for (const Edge& e : keep)
    if (rng.chance(75)) es.push_back(e);
  return Graph(n, std::move(es));
}

inline Graph gen_pw2(int n, Rng& rng) {
  // walk a width-2 path decomposition: keep a bag of <= 3 live vertices,
  // add each new vertex to the bag and wire it to a subset of the bag
  EdgeList es;
  std::vector<int> bag;
  for (int v = 0; v < n; ++v) {
    if (bag.size() == 3) bag.erase(bag.begin() + rng.below(3));
    if (!bag.empty()) {
      int mask = 1 + rng.below((1 << bag.size()) - 1);
      for (size_t i = 0; i < bag.size(); ++i)
        if (mask >> i & 1) es.push_back(make_edge(bag[i], v));
    }
    bag.push_back(v);
  }
  return Graph(n, std::move(es));
}

}  // namespace detail

/// Random member of the named built-in family; deterministic in
/// (family, n, seed) and post-checked against the membership predicate.
inline Graph gen_family_graph(const std::string& family, int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_family_graph: n must be >= 1");
  Rng rng(detail::mix_seed(family, n, seed));
  Graph g;
  if (family == "forest") g = detail::gen_forest(n, rng);
  else if (family == "caterpillar") g = detail::gen_caterpillar(n, rng);
  else if (family == "cactus") g = detail::gen_cactus(n, rng);
  else if (family == "outerplanar") g = detail::gen_outerplanar(n, rng);
  else if (family == "pw2") g = detail::gen_pw2(n, rng);
  else throw std::invalid_argument("gen_family_graph: unknown family " + family);
  auto fam = find_family(family);
  if (!fam || !fam->is_member(g))
    throw std::logic_error("gen_family_graph: generator left its family");
  return g;
}

enum class InstanceKind { positive, perturbed };

struct Instance {
  std::string name;
  std::string family;
  int n = 0;
  std::uint64_t seed = 0;
  InstanceKind kind = InstanceKind::positive;
  Graph square;
  std::optional<Graph> planted_root;
  std::string label;  // "yes", "no" or "unlabeled"
};

/// positive: the square of a generated member, root recorded. perturbed:
/// a positive square with one random edge flipped; the label comes from the
/// oracle when it fits under the edge cap, otherwise "unlabeled".
inline Instance gen_instance(const std::string& family, int n, std::uint64_t seed,
                             InstanceKind kind, int oracle_cap = kOracleEdgeCap) {
  Instance inst;
  inst.family = family;
  inst.n = n;
  inst.seed = seed;
  inst.kind = kind;
  Graph root = gen_family_graph(family, n, seed);
  Graph square = kth_power(root, 2);
  if (kind == InstanceKind::positive) {
    inst.name = family + "_n" + std::to_string(n) + "_s" + std::to_string(seed) +
                "_positive";
    inst.square = square;
    inst.planted_root = root;
    inst.label = "yes";
    return inst;
  }
  inst.name = family + "_n" + std::to_string(n) + "_s" + std::to_string(seed) +
              "_perturbed";
  Rng rng(detail::mix_seed(family + "?perturb", n, seed));
  EdgeList non_edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!square.has_edge(u, v)) non_edges.emplace_back(u, v);
  bool add = !non_edges.empty() && (square.edge_count() == 0 || rng.chance(50));
  if (add) {
    Edge e = non_edges[rng.below(static_cast<int>(non_edges.size()))];
    inst.square = square.with_edge_added(e.first, e.second);
  } else if (square.edge_count() > 0) {
    Edge e = square.edges()[rng.below(square.edge_count())];
    inst.square = square.with_edges_removed({e});
  } else {
    inst.square = square;
  }
  auto fam = find_family(family);
  if (inst.square.edge_count() <= oracle_cap)
    inst.label = has_family_root_bruteforce(inst.square, *fam, oracle_cap) ? "yes" : "no";
  else
    inst.label = "unlabeled";
  return inst;
}

// ---------------------------------------------------------------------------
// corpus persistence

inline void write_corpus(const std::filesystem::path& dir,
                         const std::vector<Instance>& instances) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  nlohmann::json manifest;
  manifest["instances"] = nlohmann::json::array();
  for (const Instance& inst : instances) {
    std::string file = inst.name + ".el";
    {
      std::ofstream out(dir / file);
      out << format_edge_list(inst.square);
    }
    nlohmann::json entry{{"name", inst.name},
                         {"family", inst.family},
                         {"n", inst.n},
                         {"seed", inst.seed},
                         {"kind", inst.kind == InstanceKind::positive ? "positive"
                                                                      : "perturbed"},
                         {"label", inst.label},
                         {"file", file}};
    if (inst.planted_root) {
      std::string root_file = inst.name + ".root";
      std::ofstream out(dir / root_file);
      out << format_edge_list(*inst.planted_root);
      entry["root_file"] = root_file;
    }
    manifest["instances"].push_back(entry);
  }
  std::ofstream out(dir / "manifest.json");
  out << manifest.dump(2) << '\n';
}

inline std::vector<Instance> read_corpus(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  std::ifstream in(dir / "manifest.json");
  if (!in) throw std::runtime_error("corpus: cannot open manifest.json in " +
                                    dir.string());
  nlohmann::json manifest = nlohmann::json::parse(in);
  std::vector<Instance> out;
  for (const auto& entry : manifest.at("instances")) {
    Instance inst;
    inst.name = entry.at("name").get<std::string>();
    inst.family = entry.at("family").get<std::string>();
    inst.n = entry.at("n").get<int>();
    inst.seed = entry.at("seed").get<std::uint64_t>();
    inst.kind = entry.at("kind").get<std::string>() == "positive"
                    ? InstanceKind::positive
                    : InstanceKind::perturbed;
    inst.label = entry.at("label").get<std::string>();
    std::ifstream el(dir / entry.at("file").get<std::string>());
    if (!el) throw std::runtime_error("corpus: missing " +
                                      entry.at("file").get<std::string>());
    inst.square = parse_edge_list(el);
    if (entry.contains("root_file")) {
      std::ifstream rf(dir / entry.at("root_file").get<std::string>());
      if (!rf) throw std::runtime_error("corpus: missing root file");
      inst.planted_root = parse_edge_list(rf);
    }
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace sqroot
