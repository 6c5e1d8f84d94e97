#pragma once

#include <algorithm>
#include <charconv>
#include <concepts>
#include <type_traits>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ptrie {

using VertexId = std::size_t;
using Weight = std::uint64_t;

struct Arc {
  VertexId tail;
  VertexId head;
  Weight weight;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Directed multigraph with labelled vertices. Each vertex keeps its outgoing
/// arcs in the order they were added; that order is the iteration order every
/// algorithm sees.
class Graph {
 public:
  explicit Graph(unsigned weight_bits = 32) : weight_bits_(weight_bits) {
    if (weight_bits == 0 || weight_bits > 64) throw GraphError("weight_bits must be in [1, 64]");
  }

  unsigned weight_bits() const noexcept { return weight_bits_; }
  Weight max_weight() const noexcept {
    return weight_bits_ == 64 ? ~Weight{0} : (Weight{1} << weight_bits_) - 1;
  }

  VertexId add_vertex(std::string label) {
    if (label.empty()) throw GraphError("empty vertex label");
    if (index_.contains(label)) throw GraphError("duplicate vertex '" + label + "'");
    const VertexId id = labels_.size();
    index_.emplace(label, id);
    labels_.push_back(std::move(label));
    adjacency_.emplace_back();
    return id;
  }

  template <std::integral W>
  void add_arc(VertexId tail, VertexId head, W weight) {
    check_vertex(tail);
    check_vertex(head);
    if constexpr (std::is_signed_v<W>) {
      if (weight < 0) throw GraphError("negative weight " + std::to_string(weight));
    }
    const auto w = static_cast<Weight>(weight);
    if (w > max_weight()) {
      throw GraphError("weight " + std::to_string(w) + " exceeds " + std::to_string(weight_bits_) +
                       " bits");
    }
    adjacency_[tail].push_back({tail, head, w});
    ++arc_count_;
  }

  template <std::integral W>
  void add_arc(std::string_view tail, std::string_view head, W weight) {
    add_arc(id(tail), id(head), weight);
  }

  // Undirected edge: u->v then v->u.
  template <std::integral W>
  void add_edge(VertexId u, VertexId v, W weight) {
    add_arc(u, v, weight);
    add_arc(v, u, weight);
  }

  template <std::integral W>
  void add_edge(std::string_view u, std::string_view v, W weight) {
    add_edge(id(u), id(v), weight);
  }

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t arc_count() const noexcept { return arc_count_; }

  const std::string& label(VertexId v) const {
    check_vertex(v);
    return labels_[v];
  }

  std::optional<VertexId> find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  VertexId id(std::string_view label) const {
    if (auto v = find(label)) return *v;
    throw GraphError("unknown vertex '" + std::string(label) + "'");
  }

  std::span<const Arc> arcs(VertexId v) const {
    check_vertex(v);
    return adjacency_[v];
  }

  // All arcs, grouped by tail in vertex order, each group in adjacency order.
  std::vector<Arc> all_arcs() const {
    std::vector<Arc> out;
    out.reserve(arc_count_);
    for (const auto& list : adjacency_) out.insert(out.end(), list.begin(), list.end());
    return out;
  }

 private:
  void check_vertex(VertexId v) const {
    if (v >= labels_.size()) throw GraphError("vertex id " + std::to_string(v) + " out of range");
  }

  unsigned weight_bits_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::vector<Arc>> adjacency_;
  std::size_t arc_count_ = 0;
};

// Same vertices, every arc (t, h, w) turned into (h, t, w).
inline Graph reverse(const Graph& g) {
  Graph r(g.weight_bits());
  for (VertexId v = 0; v < g.vertex_count(); ++v) r.add_vertex(g.label(v));
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (const Arc& a : g.arcs(v)) r.add_arc(a.head, a.tail, a.weight);
  }
  return r;
}

/// Reads the line-oriented graph format:
///
///   # comment
///   v <label>
///   a <tail> <head> <weight>     directed arc
///   e <u> <v> <weight>           undirected edge, stored as u->v then v->u
inline Graph parse_graph(std::string_view text, unsigned weight_bits = 32) {
  Graph g(weight_bits);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream in(line);
    std::vector<std::string> tok;
    for (std::string t; in >> t;) tok.push_back(std::move(t));
    if (tok.empty()) continue;

    const std::string& kind = tok[0];
    try {
      if (kind == "v") {
        if (tok.size() != 2) throw ParseError(line_no, "expected 'v <label>'");
        g.add_vertex(tok[1]);
      } else if (kind == "a" || kind == "e") {
        if (tok.size() != 4) throw ParseError(line_no, "expected '" + kind + " <tail> <head> <weight>'");
        const std::string& w = tok[3];
        if (!w.empty() && w[0] == '-') throw ParseError(line_no, "negative weight '" + w + "'");
        Weight value = 0;
        auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
        if (ec == std::errc::result_out_of_range) {
          throw ParseError(line_no, "weight '" + w + "' overflows");
        }
        if (ec != std::errc{} || ptr != w.data() + w.size()) {
          throw ParseError(line_no, "bad weight token '" + w + "'");
        }
        if (kind == "a") {
          g.add_arc(std::string_view(tok[1]), std::string_view(tok[2]), value);
        } else {
          g.add_edge(std::string_view(tok[1]), std::string_view(tok[2]), value);
        }
      } else {
        throw ParseError(line_no, "unknown record '" + kind + "'");
      }
    } catch (const GraphError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return g;
}

inline std::string serialize_graph(const Graph& g) {
  std::string out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) out += "v " + g.label(v) + "\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (const Arc& a : g.arcs(v)) {
      out += "a " + g.label(a.tail) + " " + g.label(a.head) + " " + std::to_string(a.weight) + "\n";
    }
  }
  return out;
}

}  // namespace ptrie
