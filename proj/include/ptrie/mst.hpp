#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ptrie/graph.hpp"
#include "ptrie/ptrie.hpp"

namespace ptrie {

struct MstEdge {
  VertexId u;  // inside the tree when chosen
  VertexId v;  // the vertex the edge brought in
  Weight weight;

  friend bool operator==(const MstEdge&, const MstEdge&) = default;
};

struct MstResult {
  std::vector<MstEdge> edges;  // in acceptance order
  Weight total_weight = 0;
  std::vector<VertexId> spanned;  // in the order vertices joined
  StepSummary queue_stats;
};

/// Jarnik-Prim from `root`, with the PTrie keyed by raw edge weight. Frontier
/// arcs are queued as their tail joins; an extracted arc whose head is
/// already in the tree is dropped. Spans the connected component of `root`.
///
/// `g` must hold each undirected edge as two opposed arcs (Graph::add_edge).
inline MstResult mst_prim(const Graph& g, VertexId root, const PTrieConfig& config = {}) {
  if (root >= g.vertex_count()) throw GraphError("unknown root vertex id " + std::to_string(root));
  MstResult r;
  std::vector<bool> in_tree(g.vertex_count(), false);
  PTrie<Arc> q(config);

  auto join = [&](VertexId v) {
    in_tree[v] = true;
    r.spanned.push_back(v);
    for (const Arc& a : g.arcs(v)) {
      if (!in_tree[a.head]) q.insert(a.weight, a);
    }
  };

  join(root);
  while (auto item = q.delete_min()) {
    const Arc& a = item->payload;
    if (in_tree[a.head]) continue;
    r.edges.push_back({a.tail, a.head, a.weight});
    r.total_weight += a.weight;
    join(a.head);
  }
  r.queue_stats = q.cumulative_stats();
  return r;
}

}  // namespace ptrie
