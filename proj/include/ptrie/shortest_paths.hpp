#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptrie/graph.hpp"
#include "ptrie/ptrie.hpp"

namespace ptrie {

// One arc waiting in the queue. path_weight is the queue key.
struct QueueEntry {
  Weight weight = 0;
  Weight path_weight = 0;
  VertexId tail = 0;
  VertexId head = 0;

  friend bool operator==(const QueueEntry&, const QueueEntry&) = default;
};

struct BackLink {
  VertexId parent;
  Weight weight;  // weight of the final arc parent->v, not the distance

  friend bool operator==(const BackLink&, const BackLink&) = default;
};

struct PathTree {
  VertexId source = 0;
  std::vector<std::optional<BackLink>> back;
  std::vector<std::optional<Weight>> dist;
  std::vector<std::optional<std::size_t>> hops;
  StepSummary queue_stats;

  bool reachable(VertexId v) const { return dist.at(v).has_value(); }
};

struct TraceEvent {
  std::size_t step = 0;  // 1-based
  QueueEntry extracted;
  bool rejected = false;
  std::vector<QueueEntry> queue;  // before extraction, in drain order
};

namespace detail {

inline std::vector<QueueEntry> snapshot(const PTrie<QueueEntry>& q) {
  std::vector<QueueEntry> out;
  out.reserve(q.size());
  for (auto* n = q.minimum(); n != nullptr; n = n->next()) {
    out.insert(out.end(), n->queue().begin(), n->queue().end());
  }
  return out;
}

inline void push_arcs(const Graph& g, VertexId from, Weight base, PTrie<QueueEntry>& q) {
  const Key limit = q.config().max_key();
  for (const Arc& a : g.arcs(from)) {
    if (a.weight > limit - base) {
      throw std::overflow_error("path weight through '" + g.label(from) + "' exceeds " +
                                std::to_string(q.config().word_bits()) + "-bit key");
    }
    const Weight pw = base + a.weight;
    q.insert(pw, QueueEntry{a.weight, pw, a.tail, a.head});
  }
}

inline PathTree run_sssp(const Graph& g, VertexId s, const PTrieConfig& config,
                         std::vector<TraceEvent>* trace) {
  if (s >= g.vertex_count()) throw GraphError("unknown source vertex id " + std::to_string(s));
  const std::size_t n = g.vertex_count();
  PathTree t;
  t.source = s;
  t.back.assign(n, std::nullopt);
  t.dist.assign(n, std::nullopt);
  t.hops.assign(n, std::nullopt);
  t.dist[s] = 0;
  t.hops[s] = 0;

  PTrie<QueueEntry> q(config);
  push_arcs(g, s, 0, q);
  std::size_t step = 0;
  while (!q.empty()) {
    TraceEvent ev;
    if (trace) ev.queue = snapshot(q);
    QueueEntry e = std::move(q.delete_min()->payload);
    const bool accept = e.head != s && !t.back[e.head].has_value();
    if (accept) {
      t.back[e.head] = BackLink{e.tail, e.weight};
      t.dist[e.head] = e.path_weight;
      t.hops[e.head] = *t.hops[e.tail] + 1;
      push_arcs(g, e.head, e.path_weight, q);
    }
    if (trace) {
      ev.step = ++step;
      ev.extracted = e;
      ev.rejected = !accept;
      trace->push_back(std::move(ev));
    }
  }
  t.queue_stats = q.cumulative_stats();
  return t;
}

}  // namespace detail

/// Dijkstra from `s` with a PTrie queue and lazy deletion: every arc leaving a
/// newly settled vertex is queued with its accumulated path weight, and an
/// extracted arc whose head is already settled is discarded. Equal path
/// weights leave the queue in insertion order.
inline PathTree sssp(const Graph& g, VertexId s, const PTrieConfig& config = {}) {
  return detail::run_sssp(g, s, config, nullptr);
}

/// Shortest paths from every vertex to `d`, following original arc
/// directions. back[v] is the next vertex on v's path toward d.
inline PathTree sdsp(const Graph& g, VertexId d, const PTrieConfig& config = {}) {
  return sssp(reverse(g), d, config);
}

struct Trace {
  PathTree tree;
  std::vector<TraceEvent> events;
};

inline Trace sssp_trace(const Graph& g, VertexId s, const PTrieConfig& config = {}) {
  Trace out;
  out.tree = detail::run_sssp(g, s, config, &out.events);
  return out;
}

struct WalkStep {
  VertexId vertex;
  std::optional<Weight> back_weight;  // absent on the source
};

// Back chain from v to the source, inclusive. Absent when v is unreachable.
inline std::optional<std::vector<WalkStep>> walk(const PathTree& tree, VertexId v) {
  if (v >= tree.dist.size()) throw GraphError("vertex id " + std::to_string(v) + " out of range");
  if (!tree.dist[v]) return std::nullopt;
  std::vector<WalkStep> out;
  for (VertexId cur = v;;) {
    const auto& b = tree.back[cur];
    out.push_back({cur, b ? std::optional<Weight>(b->weight) : std::nullopt});
    if (!b) break;
    cur = b->parent;
    if (out.size() > tree.back.size()) throw std::logic_error("cycle in back pointers");
  }
  return out;
}

// "E-(0)->G-(1)->F-(2)->D-(1)->A"
inline std::string format_walk(const Graph& g, const std::vector<WalkStep>& steps) {
  std::string out;
  for (const auto& s : steps) {
    out += g.label(s.vertex);
    if (s.back_weight) out += "-(" + std::to_string(*s.back_weight) + ")->";
  }
  return out;
}

}  // namespace ptrie
