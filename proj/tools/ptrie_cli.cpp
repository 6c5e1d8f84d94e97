// ptrie: command-line front end for the PTrie graph algorithms.
//
//   ptrie mst     --input g.g [--root A]
//   ptrie sssp    --input g.g --source A
//   ptrie sdsp    --input g.g --dest A
//   ptrie trace   --input g.g --source A [--verbose]
//   ptrie bench   [--n 100000] [--queue all|ptrie|binary_heap] [--seed 1]
//   ptrie analyze [--n 256] [--k 4] [--levels 8] [--trials 200]
//
// Every command accepts --json. Exit codes: 0 ok, 1 usage, 2 input error,
// 3 internal invariant failure.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptrie/analysis.hpp"
#include "ptrie/bench.hpp"
#include "ptrie/graph.hpp"
#include "ptrie/mst.hpp"
#include "ptrie/ptrie.hpp"
#include "ptrie/shortest_paths.hpp"

namespace {

using nlohmann::ordered_json;
using namespace ptrie;

enum ExitCode : int { kOk = 0, kUsage = 1, kInput = 2, kInternal = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string input;
  std::string vertex;  // source, destination or root
  unsigned k = 4;
  unsigned m = 32;
  bool json = false;
  bool verbose = false;
  bool stats = false;
  // bench
  std::size_t n = 100000;
  std::string queue = "all";
  std::uint64_t seed = 1;
  bool timing = false;
  std::size_t vertices = 0;
  // analyze
  std::uint64_t keys = 256;
  unsigned levels = 0;
  std::uint64_t trials = 200;
};

PTrieConfig trie_config(const RunConfig& rc) {
  try {
    return PTrieConfig(rc.m, rc.k);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Graph load_graph(const RunConfig& rc) {
  std::ifstream in(rc.input);
  if (!in) throw InputError("cannot open '" + rc.input + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph(buf.str(), rc.m);
  } catch (const ParseError& e) {
    throw InputError(rc.input + ":" + e.what());
  }
}

VertexId resolve(const Graph& g, const std::string& label, const char* role) {
  if (auto v = g.find(label)) return *v;
  throw InputError(std::string("unknown vertex '") + label + "' given as " + role);
}

ordered_json summary_json(const StepSummary& s, const PTrieConfig& cfg) {
  ordered_json j;
  j["operations"] = s.operations;
  j["mean_steps"] = s.mean_steps();
  j["max_steps"] = s.max_steps;
  j["mean_layers"] = s.mean_layers();
  j["max_layers"] = s.max_layers;
  j["step_bound"] = cfg.depth_max() + cfg.stride_bits();
  return j;
}

std::string summary_text(const StepSummary& s, const PTrieConfig& cfg) {
  std::ostringstream o;
  o << "queue ops=" << s.operations << " mean_steps=" << std::fixed << std::setprecision(3)
    << s.mean_steps() << " max_steps=" << s.max_steps << " max_layers=" << s.max_layers
    << " bound=" << cfg.depth_max() + cfg.stride_bits();
  return o.str();
}

ordered_json nullable(const std::optional<std::uint64_t>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json tree_json(const Graph& g, const PathTree& t) {
  ordered_json vs = ordered_json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    ordered_json j;
    j["label"] = g.label(v);
    j["dist"] = nullable(t.dist[v]);
    j["hops"] = t.hops[v] ? ordered_json(*t.hops[v]) : ordered_json(nullptr);
    j["back"] = t.back[v] ? ordered_json(g.label(t.back[v]->parent)) : ordered_json(nullptr);
    j["back_weight"] = t.back[v] ? ordered_json(t.back[v]->weight) : ordered_json(nullptr);
    auto w = walk(t, v);
    j["walk"] = w ? ordered_json(format_walk(g, *w)) : ordered_json(nullptr);
    vs.push_back(std::move(j));
  }
  return vs;
}

void print_tree_text(std::ostream& out, const Graph& g, const PathTree& t) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << g.label(v);
    if (!t.dist[v]) {
      out << " unreachable\n";
      continue;
    }
    out << " dist=" << *t.dist[v] << " hops=" << *t.hops[v] << " path="
        << format_walk(g, *walk(t, v)) << "\n";
  }
}

ordered_json entry_json(const Graph& g, const QueueEntry& e) {
  ordered_json j;
  j["tail"] = g.label(e.tail);
  j["head"] = g.label(e.head);
  j["pathWeight"] = e.path_weight;
  j["weight"] = e.weight;
  return j;
}

void emit(const RunConfig& rc, const ordered_json& j) {
  if (rc.json) std::cout << j.dump(2) << "\n";
}

int run_paths(const RunConfig& rc) {
  const PTrieConfig cfg = trie_config(rc);
  const Graph g = load_graph(rc);
  const bool dest = rc.command == "sdsp";
  const VertexId v = resolve(g, rc.vertex, dest ? "--dest" : "--source");
  const PathTree t = dest ? sdsp(g, v, cfg) : sssp(g, v, cfg);
  if (rc.json) {
    ordered_json j;
    j["command"] = rc.command;
    j["root"] = g.label(v);
    j["vertices"] = tree_json(g, t);
    if (rc.stats) j["stats"] = summary_json(t.queue_stats, cfg);
    emit(rc, j);
  } else {
    print_tree_text(std::cout, g, t);
    if (rc.stats) std::cout << summary_text(t.queue_stats, cfg) << "\n";
  }
  return kOk;
}

int run_trace(const RunConfig& rc) {
  const PTrieConfig cfg = trie_config(rc);
  const Graph g = load_graph(rc);
  const VertexId s = resolve(g, rc.vertex, "--source");
  const Trace tr = sssp_trace(g, s, cfg);
  if (rc.json) {
    ordered_json j;
    j["command"] = "trace";
    j["root"] = g.label(s);
    ordered_json evs = ordered_json::array();
    for (const auto& e : tr.events) {
      ordered_json ev;
      ev["step"] = e.step;
      ev["tail"] = g.label(e.extracted.tail);
      ev["head"] = g.label(e.extracted.head);
      ev["pathWeight"] = e.extracted.path_weight;
      ev["rejected"] = e.rejected;
      ordered_json q = ordered_json::array();
      for (const auto& qe : e.queue) q.push_back(entry_json(g, qe));
      ev["queue"] = std::move(q);
      evs.push_back(std::move(ev));
    }
    j["events"] = std::move(evs);
    j["vertices"] = tree_json(g, tr.tree);
    if (rc.stats) j["stats"] = summary_json(tr.tree.queue_stats, cfg);
    emit(rc, j);
    return kOk;
  }
  for (const auto& e : tr.events) {
    std::cout << "step=" << e.step << " extract=" << g.label(e.extracted.tail) << "->"
              << g.label(e.extracted.head) << " w=" << e.extracted.path_weight << " "
              << (e.rejected ? "reject" : "accept") << "\n";
    if (rc.verbose) {
      for (const auto& qe : e.queue) {
        std::cout << "    " << qe.path_weight << " " << g.label(qe.tail) << "->" << g.label(qe.head)
                  << "\n";
      }
    }
  }
  if (rc.stats) std::cout << summary_text(tr.tree.queue_stats, cfg) << "\n";
  return kOk;
}

int run_mst(const RunConfig& rc) {
  const PTrieConfig cfg = trie_config(rc);
  const Graph g = load_graph(rc);
  if (g.vertex_count() == 0) throw InputError("graph has no vertices");
  const VertexId root = rc.vertex.empty() ? 0 : resolve(g, rc.vertex, "--root");
  const MstResult r = mst_prim(g, root, cfg);
  if (rc.json) {
    ordered_json j;
    j["command"] = "mst";
    j["root"] = g.label(root);
    j["total_weight"] = r.total_weight;
    ordered_json es = ordered_json::array();
    for (const auto& e : r.edges) {
      es.push_back({{"u", g.label(e.u)}, {"v", g.label(e.v)}, {"weight", e.weight}});
    }
    j["edges"] = std::move(es);
    ordered_json sp = ordered_json::array();
    for (auto v : r.spanned) sp.push_back(g.label(v));
    j["spanned"] = std::move(sp);
    if (rc.stats) j["stats"] = summary_json(r.queue_stats, cfg);
    emit(rc, j);
    return kOk;
  }
  for (const auto& e : r.edges) {
    std::cout << g.label(e.u) << " - " << g.label(e.v) << " " << e.weight << "\n";
  }
  std::cout << "total " << r.total_weight << "\n";
  if (rc.stats) std::cout << summary_text(r.queue_stats, cfg) << "\n";
  return kOk;
}

int run_bench(const RunConfig& rc) {
  bench::BenchConfig bc;
  bc.trie = trie_config(rc);
  if (rc.n == 0) throw UsageError("--n must be at least 1");
  bc.n = rc.n;
  bc.seed = rc.seed;
  bc.timing = rc.timing;
  bc.graph_vertices = rc.vertices;
  if (rc.queue != "all") {
    auto k = bench::parse_queue_kind(rc.queue);
    if (!k) throw UsageError("unknown queue kind '" + rc.queue + "'");
    bc.kinds = {*k};
  }
  const auto rep = bench::run_bench(bc);

  if (rc.json) {
    ordered_json j;
    j["command"] = "bench";
    j["n"] = bc.n;
    j["seed"] = bc.seed;
    j["word_bits"] = bc.trie.word_bits();
    j["stride_bits"] = bc.trie.stride_bits();
    ordered_json ws = ordered_json::array();
    for (const auto& w : rep.workloads) {
      ordered_json x;
      x["queue"] = std::string(bench::to_string(w.kind));
      x["operations"] = w.operations;
      x["drain_checksum"] = w.drain_checksum;
      if (w.all_steps) {
        x["steps"] = {{"insert", summary_json(*w.insert_steps, bc.trie)},
                      {"delete_min", summary_json(*w.delete_steps, bc.trie)},
                      {"all", summary_json(*w.all_steps, bc.trie)}};
      }
      if (w.ops_per_sec) x["ops_per_sec"] = *w.ops_per_sec;
      ws.push_back(std::move(x));
    }
    j["workloads"] = std::move(ws);
    ordered_json ds = ordered_json::array();
    for (const auto& d : rep.dijkstra) {
      ordered_json x;
      x["queue"] = std::string(bench::to_string(d.kind));
      x["vertices"] = d.vertices;
      x["arcs"] = d.arcs;
      x["reached"] = d.reached;
      x["distance_sum"] = d.distance_sum;
      if (d.steps) x["steps"] = summary_json(*d.steps, bc.trie);
      if (d.millis) x["millis"] = *d.millis;
      ds.push_back(std::move(x));
    }
    j["dijkstra"] = std::move(ds);
    emit(rc, j);
    return kOk;
  }

  std::cout << "n=" << bc.n << " seed=" << bc.seed << " M=" << bc.trie.word_bits()
            << " K=" << bc.trie.stride_bits() << "\n";
  for (const auto& w : rep.workloads) {
    std::cout << "workload " << bench::to_string(w.kind) << " ops=" << w.operations
              << " checksum=" << w.drain_checksum;
    if (w.ops_per_sec) std::cout << " ops/s=" << std::fixed << std::setprecision(0) << *w.ops_per_sec;
    std::cout << "\n";
    if (w.all_steps) std::cout << "  " << summary_text(*w.all_steps, bc.trie) << "\n";
  }
  for (const auto& d : rep.dijkstra) {
    std::cout << "dijkstra " << bench::to_string(d.kind) << " V=" << d.vertices << " E=" << d.arcs
              << " reached=" << d.reached << " dist_sum=" << d.distance_sum;
    if (d.millis) std::cout << " ms=" << std::fixed << std::setprecision(2) << *d.millis;
    std::cout << "\n";
    if (d.steps) std::cout << "  " << summary_text(*d.steps, bc.trie) << "\n";
  }
  return kOk;
}

int run_analyze(const RunConfig& rc) {
  const PTrieConfig cfg = trie_config(rc);
  if (rc.trials < 2) throw UsageError("--trials must be at least 2");
  const auto sim = analysis::simulate_layers(rc.keys, cfg, rc.trials, rc.seed, rc.levels);
  if (rc.json) {
    ordered_json j;
    j["command"] = "analyze";
    j["n"] = sim.keys;
    j["word_bits"] = cfg.word_bits();
    j["stride_bits"] = cfg.stride_bits();
    j["trials"] = sim.trials;
    ordered_json ls = ordered_json::array();
    auto row = [](const analysis::LevelSample& s) {
      return ordered_json{{"level", s.level},
                          {"expected", s.expected},
                          {"observed_mean", s.observed_mean},
                          {"standard_error", s.standard_error}};
    };
    for (const auto& s : sim.levels) ls.push_back(row(s));
    j["levels"] = std::move(ls);
    j["total"] = row(sim.total);
    emit(rc, j);
    return kOk;
  }
  std::cout << "N=" << sim.keys << " P=" << cfg.degree() << " trials=" << sim.trials << "\n";
  std::cout << std::setw(6) << "level" << std::setw(14) << "expected" << std::setw(14) << "observed"
            << std::setw(12) << "stderr" << "\n";
  std::cout << std::fixed << std::setprecision(4);
  for (const auto& s : sim.levels) {
    std::cout << std::setw(6) << s.level << std::setw(14) << s.expected << std::setw(14)
              << s.observed_mean << std::setw(12) << s.standard_error << "\n";
  }
  std::cout << std::setw(6) << "total" << std::setw(14) << sim.total.expected << std::setw(14)
            << sim.total.observed_mean << std::setw(12) << sim.total.standard_error << "\n";
  return kOk;
}

void add_common(CLI::App* sub, RunConfig& rc) {
  sub->add_option("-k,--k", rc.k, "stride bits K")->capture_default_str();
  sub->add_option("-m,--m", rc.m, "word bits M")->capture_default_str();
  sub->add_flag("--json", rc.json, "emit JSON");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PTrie priority queue and graph algorithms"};
  app.require_subcommand(1);
  RunConfig rc;

  auto graph_cmd = [&](const char* name, const char* desc, const char* vflag, const char* vdesc,
                       bool vrequired) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("-i,--input", rc.input, "graph file")->required();
    auto* opt = sub->add_option(vflag, rc.vertex, vdesc);
    if (vrequired) opt->required();
    sub->add_flag("--stats", rc.stats, "report PTrie step counts");
    add_common(sub, rc);
    return sub;
  };

  graph_cmd("mst", "Jarnik-Prim minimum spanning tree", "-r,--root", "root vertex label", false);
  graph_cmd("sssp", "single-source shortest paths", "-s,--source", "source vertex label", true);
  graph_cmd("sdsp", "single-destination shortest paths", "-d,--dest", "destination vertex label",
            true);
  auto* trace = graph_cmd("trace", "step-by-step SSSP extraction log", "-s,--source",
                          "source vertex label", true);
  trace->add_flag("-v,--verbose", rc.verbose, "print the queue before each extraction");

  auto* bench = app.add_subcommand("bench", "queue benchmark (step counts; --timing adds wall clock)");
  bench->add_option("-n,--n", rc.n, "operations per workload phase")->capture_default_str();
  bench->add_option("-q,--queue", rc.queue, "all | ptrie | binary_heap")->capture_default_str();
  bench->add_option("--seed", rc.seed)->capture_default_str();
  bench->add_option("--vertices", rc.vertices, "Dijkstra graph size (default min(n, 1e5))");
  bench->add_flag("--timing", rc.timing, "include wall-clock throughput");
  add_common(bench, rc);

  auto* analyze = app.add_subcommand("analyze", "expected vs simulated layer counts per level");
  analyze->add_option("-n,--n", rc.keys, "keys per trie")->capture_default_str();
  analyze->add_option("--levels", rc.levels, "levels to report (default M/K)");
  analyze->add_option("--trials", rc.trials)->capture_default_str();
  analyze->add_option("--seed", rc.seed)->capture_default_str();
  add_common(analyze, rc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  rc.command = app.get_subcommands().front()->get_name();

  try {
    if (rc.command == "mst") return run_mst(rc);
    if (rc.command == "sssp" || rc.command == "sdsp") return run_paths(rc);
    if (rc.command == "trace") return run_trace(rc);
    if (rc.command == "bench") return run_bench(rc);
    if (rc.command == "analyze") return run_analyze(rc);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kUsage;
}
