#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <random>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "ptrie/graph.hpp"
#include "ptrie/ptrie.hpp"

namespace ptrie::bench {

enum class QueueKind { ptrie, binary_heap };

inline std::string_view to_string(QueueKind k) {
  return k == QueueKind::ptrie ? "ptrie" : "binary_heap";
}

inline std::optional<QueueKind> parse_queue_kind(std::string_view s) {
  if (s == "ptrie") return QueueKind::ptrie;
  if (s == "binary_heap" || s == "heap") return QueueKind::binary_heap;
  return std::nullopt;
}

// Binary min-heap made stable by a sequence number; same interface as PTrie
// for the operations the benchmark uses.
template <typename Payload>
class StableBinaryHeap {
 public:
  struct Item {
    Key key;
    Payload payload;
  };

  void insert(Key key, Payload p) { heap_.push({key, seq_++, std::move(p)}); }

  std::optional<Item> delete_min() {
    if (heap_.empty()) return std::nullopt;
    Entry e = heap_.top();
    heap_.pop();
    return Item{e.key, std::move(e.payload)};
  }

  bool empty() const noexcept { return heap_.empty(); }
  std::size_t size() const noexcept { return heap_.size(); }

 private:
  struct Entry {
    Key key;
    std::uint64_t seq;
    Payload payload;
  };
  struct Later {
    bool operator()(const Entry& a, const Entry& b) const noexcept {
      return a.key != b.key ? a.key > b.key : a.seq > b.seq;
    }
  };

  std::priority_queue<Entry, std::vector<Entry>, Later> heap_;
  std::uint64_t seq_ = 0;
};

struct BenchConfig {
  std::size_t n = 100000;
  std::vector<QueueKind> kinds{QueueKind::ptrie, QueueKind::binary_heap};
  PTrieConfig trie;
  std::uint64_t seed = 1;
  bool timing = false;
  bool dijkstra = true;
  std::size_t graph_vertices = 0;  // 0: min(n, 100000)
  std::size_t arcs_per_vertex = 4;
  Weight max_arc_weight = 255;
};

struct WorkloadResult {
  QueueKind kind = QueueKind::ptrie;
  std::uint64_t operations = 0;
  std::uint64_t drain_checksum = 0;
  std::optional<StepSummary> insert_steps;
  std::optional<StepSummary> delete_steps;
  std::optional<StepSummary> all_steps;
  std::optional<double> ops_per_sec;
};

struct DijkstraResult {
  QueueKind kind = QueueKind::ptrie;
  std::size_t vertices = 0;
  std::size_t arcs = 0;
  std::size_t reached = 0;
  std::uint64_t distance_sum = 0;
  std::optional<StepSummary> steps;
  std::optional<double> millis;
};

struct BenchReport {
  BenchConfig config;
  std::vector<WorkloadResult> workloads;
  std::vector<DijkstraResult> dijkstra;
};

inline Graph random_graph(std::size_t vertices, std::size_t arcs_per_vertex, Weight max_weight,
                          std::mt19937_64& rng, unsigned weight_bits = 32) {
  Graph g(weight_bits);
  for (std::size_t v = 0; v < vertices; ++v) g.add_vertex("v" + std::to_string(v));
  for (std::size_t v = 0; v < vertices; ++v) {
    for (std::size_t i = 0; i < arcs_per_vertex; ++i) {
      g.add_arc(v, static_cast<VertexId>(rng() % vertices), rng() % (max_weight + 1));
    }
  }
  return g;
}

namespace detail {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <typename Queue>
WorkloadResult run_workload(Queue& q, QueueKind kind, const BenchConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  const Key mask = cfg.trie.max_key();
  WorkloadResult r;
  r.kind = kind;
  StepSummary ins, del;
  constexpr bool instrumented = std::is_same_v<Queue, PTrie<std::uint64_t>>;

  const auto t0 = Clock::now();
  for (std::size_t i = 0; i < cfg.n; ++i) {
    q.insert(rng() & mask, i);
    if constexpr (instrumented) ins.record(q.last_op_stats());
  }
  std::uint64_t h = 0;
  while (auto item = q.delete_min()) {
    if constexpr (instrumented) del.record(q.last_op_stats());
    h = mix(mix(h, item->key), item->payload);
  }
  const double secs = seconds_since(t0);

  r.operations = 2 * cfg.n;
  r.drain_checksum = h;
  if constexpr (instrumented) {
    StepSummary all = ins;
    all.merge(del);
    r.insert_steps = ins;
    r.delete_steps = del;
    r.all_steps = all;
  }
  if (cfg.timing && secs > 0) r.ops_per_sec = static_cast<double>(r.operations) / secs;
  return r;
}

// Lazy-deletion Dijkstra over any queue exposing insert/delete_min.
template <typename Queue>
std::vector<std::optional<Weight>> lazy_dijkstra(const Graph& g, VertexId s, Queue& q) {
  std::vector<std::optional<Weight>> dist(g.vertex_count());
  dist[s] = 0;
  for (const Arc& a : g.arcs(s)) q.insert(a.weight, a.head);
  while (auto item = q.delete_min()) {
    const VertexId v = item->payload;
    if (dist[v]) continue;
    dist[v] = item->key;
    for (const Arc& a : g.arcs(v)) {
      if (!dist[a.head]) q.insert(item->key + a.weight, a.head);
    }
  }
  return dist;
}

}  // namespace detail

/// Seeded insert-then-drain workload plus a Dijkstra run on a random graph,
/// for each requested queue kind. Step counts come from PTrie instrumentation;
/// wall-clock figures are only filled in when cfg.timing is set.
inline BenchReport run_bench(const BenchConfig& cfg) {
  BenchReport rep;
  rep.config = cfg;

  for (QueueKind kind : cfg.kinds) {
    if (kind == QueueKind::ptrie) {
      PTrie<std::uint64_t> q(cfg.trie);
      rep.workloads.push_back(detail::run_workload(q, kind, cfg));
    } else {
      StableBinaryHeap<std::uint64_t> q;
      rep.workloads.push_back(detail::run_workload(q, kind, cfg));
    }
  }

  if (!cfg.dijkstra) return rep;
  const std::size_t nv =
      cfg.graph_vertices != 0 ? cfg.graph_vertices : std::max<std::size_t>(2, std::min<std::size_t>(cfg.n, 100000));
  std::mt19937_64 rng(cfg.seed ^ 0x5bd1e995ull);
  const Graph g = random_graph(nv, cfg.arcs_per_vertex, cfg.max_arc_weight, rng, cfg.trie.word_bits());

  for (QueueKind kind : cfg.kinds) {
    DijkstraResult d;
    d.kind = kind;
    d.vertices = g.vertex_count();
    d.arcs = g.arc_count();
    std::vector<std::optional<Weight>> dist;
    const auto t0 = detail::Clock::now();
    if (kind == QueueKind::ptrie) {
      PTrie<VertexId> q(cfg.trie);
      dist = detail::lazy_dijkstra(g, 0, q);
      d.steps = q.cumulative_stats();
    } else {
      StableBinaryHeap<VertexId> q;
      dist = detail::lazy_dijkstra(g, 0, q);
    }
    if (cfg.timing) d.millis = detail::seconds_since(t0) * 1000.0;
    for (const auto& x : dist) {
      if (x) {
        ++d.reached;
        d.distance_sum += *x;
      }
    }
    rep.dijkstra.push_back(d);
  }
  return rep;
}

}  // namespace ptrie::bench
