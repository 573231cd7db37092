#pragma once

// Command-line front end: solve, oracle, reduce, width, gen, verify-corpus
// and power, all speaking the canonical edge-list format. Exit codes:
// 0 yes/success, 1 no/mismatch, 2 timeout or cap exceeded, 3 input error.

#include <fstream>
#include <future>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqroot/edge_list.hpp"
#include "sqroot/instance_gen.hpp"
#include "sqroot/root_search.hpp"

namespace sqroot {

namespace cli_detail {

inline Graph load_graph(const std::string& path) {
  if (path == "-") return parse_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_edge_list(in);
}

struct FamilyOptions {
  std::string name;
  int c1 = kDefaultC1;
  int twin_threshold = -1;        // -1: family default
  std::string width_cutoff;       // empty: family default; else int or "unlimited"
};

inline FamilyConfig resolve_family(const FamilyOptions& opts, std::ostream& err) {
  auto fam = find_family(opts.name, opts.c1);
  if (!fam) throw std::runtime_error("unknown family '" + opts.name +
                                     "' (try outerplanar, pw2, forest, cactus, caterpillar)");
  int default_threshold = fam->twin_threshold;
  if (opts.twin_threshold >= 0) fam->twin_threshold = opts.twin_threshold;
  if (fam->twin_threshold < default_threshold)
    err << "warning: twin threshold " << fam->twin_threshold
        << " is below the family default " << default_threshold
        << "; experimental, verify against the oracle\n";
  if (!opts.width_cutoff.empty()) {
    if (opts.width_cutoff == "unlimited")
      fam->width_cutoff = kWidthUnlimited;
    else
      fam->width_cutoff = std::stoll(opts.width_cutoff);
  }
  return *fam;
}

inline nlohmann::json edges_json(const EdgeList& edges) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [u, v] : edges) arr.push_back({u, v});
  return arr;
}

inline nlohmann::json trace_json(const ComponentTrace& tr) {
  nlohmann::json rules = nlohmann::json::array();
  nlohmann::json twins = nlohmann::json::array();
  for (const auto& [removed, remaining] : tr.twin_log)
    twins.push_back({{"removed", removed}, {"remaining", remaining}});
  rules.push_back({{"rule", "reduce-twins"},
                   {"twin_log", twins},
                   {"vertices_after", tr.vertices_after_twins},
                   {"edges_after", tr.edges_after_twins}});
  rules.push_back({{"rule", "label-edges"},
                   {"hubs", tr.hubs},
                   {"red", edges_json(tr.red)},
                   {"blue", edges_json(tr.blue)},
                   {"red_size", tr.red.size()},
                   {"blue_size", tr.blue.size()}});
  rules.push_back({{"rule", "delete-irrelevant-edges"},
                   {"deleted", edges_json(tr.deleted)},
                   {"deleted_size", tr.deleted.size()},
                   {"edges_after", tr.edges_after_deletion}});
  nlohmann::json cutoff;
  if (tr.width_cutoff == kWidthUnlimited)
    cutoff = "unlimited";
  else
    cutoff = tr.width_cutoff;
  rules.push_back({{"rule", "width-cutoff"},
                   {"cutoff", cutoff},
                   {"width", tr.width_checked >= 0 ? nlohmann::json(tr.width_checked)
                                                   : nlohmann::json()}});
  nlohmann::json out{{"vertices", tr.vertices},
                     {"edges_before", tr.edges_before},
                     {"rules", rules},
                     {"status", tr.status}};
  if (tr.twin_fallback) out["twin_fallback"] = true;
  if (tr.status == "yes") out["root"] = edges_json(tr.root);
  return out;
}

inline nlohmann::json outcome_json(const SolveOutcome& res, bool with_trace) {
  nlohmann::json j{{"answer", res.yes ? "yes" : "no"}, {"family", res.family}};
  if (res.yes) j["root_edges"] = edges_json(res.root);
  if (!res.yes) j["reason"] = to_string(res.reason);
  j["stats"] = {{"nodes_expanded", res.nodes_expanded}};
  if (with_trace) {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& tr : res.trace) comps.push_back(trace_json(tr));
    j["stats"]["rule_trace"] = comps;
  }
  return j;
}

inline int exit_code_for(const SolveOutcome& res) {
  if (res.yes) return 0;
  return res.reason == SolveReason::search_timeout ? 2 : 1;
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  using cli_detail::load_graph;
  using cli_detail::resolve_family;

  CLI::App app{"square roots in restricted graph families"};
  app.require_subcommand(1);

  cli_detail::FamilyOptions fam_opts;
  std::string input = "-";
  double timeout_secs = 30.0;
  bool json_out = false, with_trace = false, dot_out = false;

  auto add_family_flags = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--family", fam_opts.name, "graph family");
    if (required) opt->required();
    cmd->add_option("--c1", fam_opts.c1, "Ramsey-bound stand-in for the pw2 pipeline");
    cmd->add_option("--twin-threshold", fam_opts.twin_threshold,
                    "override the twin deletion class size");
    cmd->add_option("--width-cutoff", fam_opts.width_cutoff,
                    "override the width cutoff (integer or 'unlimited')");
  };

  auto* solve_cmd = app.add_subcommand("solve", "decide whether a family square root exists");
  add_family_flags(solve_cmd, true);
  solve_cmd->add_option("input", input, "edge-list file or - for stdin");
  solve_cmd->add_option("--timeout-secs", timeout_secs, "per-component search budget");
  solve_cmd->add_flag("--json", json_out, "emit JSON");
  solve_cmd->add_flag("--trace", with_trace, "include the rule trace in JSON output");
  solve_cmd->add_flag("--dot", dot_out, "print the root certificate as DOT");

  auto* oracle_cmd = app.add_subcommand("oracle", "enumerate minimal square roots by brute force");
  add_family_flags(oracle_cmd, false);
  oracle_cmd->add_option("input", input);
  int oracle_cap = kOracleEdgeCap;
  oracle_cmd->add_option("--cap", oracle_cap, "edge-count cap for the exhaustive search");

  auto* reduce_cmd = app.add_subcommand("reduce", "run the reduction rules and report them");
  add_family_flags(reduce_cmd, true);
  reduce_cmd->add_option("input", input);
  reduce_cmd->add_flag("--trace", with_trace, "emit the full JSON trace");

  auto* width_cmd = app.add_subcommand("width", "exact treewidth or pathwidth with a decomposition");
  bool want_tree = false, want_path = false;
  width_cmd->add_flag("--tree", want_tree, "treewidth (default)");
  width_cmd->add_flag("--path", want_path, "pathwidth");
  width_cmd->add_option("input", input);

  auto* gen_cmd = app.add_subcommand("gen", "generate a corpus of planted instances");
  std::string gen_family, gen_out_dir, gen_kind = "positive";
  int gen_n = 8, gen_count = 10;
  std::uint64_t gen_seed = 0;
  gen_cmd->add_option("--family", gen_family)->required();
  gen_cmd->add_option("--n", gen_n, "root size");
  gen_cmd->add_option("--count", gen_count, "number of instances");
  gen_cmd->add_option("--seed", gen_seed, "base seed");
  gen_cmd->add_option("--out", gen_out_dir, "output directory")->required();
  gen_cmd->add_option("--kind", gen_kind, "positive, perturbed or mixed");

  auto* verify_cmd = app.add_subcommand("verify-corpus", "re-solve a corpus against stored labels");
  std::string corpus_dir;
  verify_cmd->add_option("dir", corpus_dir, "corpus directory")->required();
  verify_cmd->add_option("--timeout-secs", timeout_secs);
  verify_cmd->add_option("--c1", fam_opts.c1);

  auto* power_cmd = app.add_subcommand("power", "k-th power of a graph");
  int power_k = 2;
  power_cmd->add_option("--k", power_k, "exponent (default 2)");
  power_cmd->add_option("input", input);
  power_cmd->add_flag("--dot", dot_out);

  std::vector<const char*> argv;
  argv.push_back("sqroot");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }

  try {
    if (solve_cmd->parsed()) {
      Graph g = load_graph(input);
      FamilyConfig fam = resolve_family(fam_opts, err);
      SolveOptions opts;
      opts.timeout_secs = timeout_secs;
      SolveOutcome res = solve(g, fam, opts);
      if (json_out || with_trace) {
        out << cli_detail::outcome_json(res, with_trace).dump(2) << '\n';
      } else if (dot_out && res.yes) {
        out << format_dot(Graph(g.vertex_count(), res.root));
      } else {
        out << "answer: " << (res.yes ? "yes" : "no") << '\n';
        if (res.yes) {
          out << "root:";
          for (const auto& [u, v] : res.root) out << ' ' << u << '-' << v;
          out << '\n';
        } else {
          out << "reason: " << to_string(res.reason) << '\n';
        }
      }
      return cli_detail::exit_code_for(res);
    }

    if (oracle_cmd->parsed()) {
      Graph g = load_graph(input);
      std::optional<FamilyConfig> fam;
      if (!fam_opts.name.empty()) fam = resolve_family(fam_opts, err);
      auto roots = enumerate_minimal_roots(g, fam ? &*fam : nullptr, oracle_cap);
      int minimal = 0;
      for (const auto& w : roots) {
        for (size_t i = 0; i < w.edge_set.size(); ++i)
          out << (i ? " " : "") << w.edge_set[i].first << '-' << w.edge_set[i].second;
        if (w.edge_set.empty()) out << "(empty)";
        out << '\n';
        minimal += w.minimal;
      }
      out << "roots=" << roots.size() << " minimal=" << minimal << '\n';
      return 0;
    }

    if (reduce_cmd->parsed()) {
      Graph g = load_graph(input);
      FamilyConfig fam = resolve_family(fam_opts, err);
      nlohmann::json comps = nlohmann::json::array();
      for (const auto& comp : connected_components(g)) {
        Graph cg = induced_subgraph(g, comp);
        detail::ReductionRun run = detail::run_reduction(cg, fam, true);
        detail::lift_trace(run.trace, comp);
        if (run.trace.status == "running") run.trace.status = "reduced";
        comps.push_back(cli_detail::trace_json(run.trace));
      }
      nlohmann::json j{{"family", fam.name}, {"components", comps}};
      if (with_trace) {
        out << j.dump(2) << '\n';
      } else {
        for (const auto& c : j["components"])
          out << "component " << c["vertices"].size() << " vertices: "
              << c["status"].get<std::string>() << ", edges "
              << c["edges_before"] << " -> "
              << c["rules"][2]["edges_after"] << '\n';
      }
      return 0;
    }

    if (width_cmd->parsed()) {
      Graph g = load_graph(input);
      WidthKind kind = want_path ? WidthKind::path : WidthKind::tree;
      auto [w, dec] = exact_width(g, kind);
      out << (kind == WidthKind::path ? "pathwidth " : "treewidth ") << w << '\n';
      out << format_decomposition(dec);
      return 0;
    }

    if (gen_cmd->parsed()) {
      if (!find_family(gen_family))
        throw std::runtime_error("unknown family '" + gen_family + "'");
      std::vector<Instance> batch;
      for (int i = 0; i < gen_count; ++i) {
        InstanceKind kind = gen_kind == "perturbed" ? InstanceKind::perturbed
                            : gen_kind == "mixed" && i % 2 == 1
                                ? InstanceKind::perturbed
                                : InstanceKind::positive;
        if (gen_kind != "positive" && gen_kind != "perturbed" && gen_kind != "mixed")
          throw std::runtime_error("unknown kind '" + gen_kind + "'");
        batch.push_back(gen_instance(gen_family, gen_n, gen_seed + i, kind));
      }
      write_corpus(gen_out_dir, batch);
      out << "wrote " << batch.size() << " instances to " << gen_out_dir << '\n';
      return 0;
    }

    if (verify_cmd->parsed()) {
      auto corpus = read_corpus(corpus_dir);
      struct Row {
        std::string name, verdict;
      };
      SolveOptions opts;
      opts.timeout_secs = timeout_secs;
      std::vector<std::future<Row>> futures;
      for (const Instance& inst : corpus) {
        futures.push_back(std::async(std::launch::async, [&inst, &fam_opts, opts] {
          Row row{inst.name, "ok"};
          if (inst.label == "unlabeled") {
            row.verdict = "skipped";
            return row;
          }
          auto fam = find_family(inst.family, fam_opts.c1);
          if (!fam) {
            row.verdict = "unknown-family";
            return row;
          }
          SolveOutcome res = solve(inst.square, *fam, opts);
          if (res.reason == SolveReason::search_timeout)
            row.verdict = "timeout";
          else if ((res.yes ? "yes" : "no") != inst.label)
            row.verdict = "mismatch";
          return row;
        }));
      }
      std::vector<Row> rows;
      for (auto& f : futures) rows.push_back(f.get());
      std::sort(rows.begin(), rows.end(),
                [](const Row& a, const Row& b) { return a.name < b.name; });
      int mismatches = 0, timeouts = 0, skipped = 0;
      for (const Row& row : rows) {
        out << row.name << ": " << row.verdict << '\n';
        mismatches += row.verdict == "mismatch" || row.verdict == "unknown-family";
        timeouts += row.verdict == "timeout";
        skipped += row.verdict == "skipped";
      }
      out << "checked=" << (rows.size() - skipped) << " mismatches=" << mismatches
          << " timeouts=" << timeouts << " skipped=" << skipped << '\n';
      if (mismatches > 0) return 1;
      if (timeouts > 0) return 2;
      return 0;
    }

    if (power_cmd->parsed()) {
      Graph g = load_graph(input);
      Graph p = kth_power(g, power_k);
      out << (dot_out ? format_dot(p) : format_edge_list(p));
      return 0;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const WidthCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const OracleCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
  err << "error: no command\n";
  return 3;
}

}  // namespace sqroot
