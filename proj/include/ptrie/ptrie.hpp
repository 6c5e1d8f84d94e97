#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ptrie {

using Key = std::uint64_t;

// Word length M and stride K. Keys are M-bit unsigned values read MSB-first,
// K bits per trie level, so a root-to-leaf path has at most M/K layers.
class PTrieConfig {
 public:
  static constexpr unsigned kMaxStrideBits = 8;
  static constexpr unsigned kMaxWordBits = 64;

  PTrieConfig() = default;

  PTrieConfig(unsigned word_bits, unsigned stride_bits)
      : word_bits_(word_bits), stride_bits_(stride_bits) {
    if (word_bits == 0 || word_bits > kMaxWordBits) {
      throw std::invalid_argument("word_bits must be in [1, 64], got " +
                                  std::to_string(word_bits));
    }
    if (stride_bits == 0 || stride_bits > kMaxStrideBits) {
      throw std::invalid_argument("stride_bits must be in [1, 8], got " +
                                  std::to_string(stride_bits));
    }
    if (word_bits % stride_bits != 0) {
      throw std::invalid_argument("stride_bits (" + std::to_string(stride_bits) +
                                  ") must divide word_bits (" +
                                  std::to_string(word_bits) + ")");
    }
  }

  unsigned word_bits() const noexcept { return word_bits_; }
  unsigned stride_bits() const noexcept { return stride_bits_; }
  unsigned degree() const noexcept { return 1u << stride_bits_; }
  unsigned depth_max() const noexcept { return word_bits_ / stride_bits_; }

  Key max_key() const noexcept {
    return word_bits_ == 64 ? ~Key{0} : (Key{1} << word_bits_) - 1;
  }

  // Slot index of `key` in a layer at 0-based depth `depth`.
  unsigned chunk(Key key, unsigned depth) const noexcept {
    const unsigned shift = word_bits_ - (depth + 1) * stride_bits_;
    return static_cast<unsigned>((key >> shift) & (degree() - 1));
  }

  friend bool operator==(const PTrieConfig&, const PTrieConfig&) = default;

 private:
  unsigned word_bits_ = 32;
  unsigned stride_bits_ = 4;
};

// Counters for a single public operation.
//
// layers_visited counts every layer the operation walks through, creates or
// frees. index_ops counts ordered-index-set queries and updates on layers that
// existed before the operation. A layer created by a push-down is built with
// its one or two entries already in place, which is part of its creation step.
struct OpStats {
  std::uint64_t layers_visited = 0;
  std::uint64_t index_ops = 0;
  std::uint64_t nodes_spliced = 0;

  std::uint64_t steps() const noexcept { return layers_visited + index_ops; }
};

// Running aggregate of OpStats over many operations.
struct StepSummary {
  std::uint64_t operations = 0;
  std::uint64_t total_steps = 0;
  std::uint64_t max_steps = 0;
  std::uint64_t total_layers = 0;
  std::uint64_t max_layers = 0;

  void record(const OpStats& s) noexcept {
    ++operations;
    total_steps += s.steps();
    max_steps = std::max(max_steps, s.steps());
    total_layers += s.layers_visited;
    max_layers = std::max(max_layers, s.layers_visited);
  }

  void merge(const StepSummary& o) noexcept {
    operations += o.operations;
    total_steps += o.total_steps;
    max_steps = std::max(max_steps, o.max_steps);
    total_layers += o.total_layers;
    max_layers = std::max(max_layers, o.max_layers);
  }

  double mean_steps() const noexcept {
    return operations == 0 ? 0.0
                           : static_cast<double>(total_steps) / static_cast<double>(operations);
  }
  double mean_layers() const noexcept {
    return operations == 0 ? 0.0
                           : static_cast<double>(total_layers) / static_cast<double>(operations);
  }
};

struct ValidationReport {
  bool ok = true;
  std::string first_violation;

  explicit operator bool() const noexcept { return ok; }
};

// Ordered set over [0, 256) backed by a bitmap. predecessor/successor touch at
// most four 64-bit words; for K <= 6 a single word.
class IndexSet {
 public:
  void insert(unsigned i) noexcept { words_[i >> 6] |= bit(i); }
  void erase(unsigned i) noexcept { words_[i >> 6] &= ~bit(i); }
  bool contains(unsigned i) const noexcept { return (words_[i >> 6] & bit(i)) != 0; }

  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  unsigned size() const noexcept {
    unsigned n = 0;
    for (auto w : words_) n += static_cast<unsigned>(std::popcount(w));
    return n;
  }

  // Largest element < i.
  std::optional<unsigned> predecessor(unsigned i) const noexcept {
    int w = static_cast<int>(i >> 6);
    std::uint64_t masked = words_[w] & (bit(i) - 1);
    while (true) {
      if (masked != 0) {
        return static_cast<unsigned>(w * 64 + 63 - std::countl_zero(masked));
      }
      if (--w < 0) return std::nullopt;
      masked = words_[w];
    }
  }

  // Smallest element > i.
  std::optional<unsigned> successor(unsigned i) const noexcept {
    unsigned w = i >> 6;
    std::uint64_t masked = (i & 63) == 63 ? 0 : words_[w] & ~((bit(i) << 1) - 1);
    while (true) {
      if (masked != 0) {
        return w * 64 + static_cast<unsigned>(std::countr_zero(masked));
      }
      if (++w >= words_.size()) return std::nullopt;
      masked = words_[w];
    }
  }

  std::optional<unsigned> first() const noexcept {
    for (unsigned w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) return w * 64 + static_cast<unsigned>(std::countr_zero(words_[w]));
    }
    return std::nullopt;
  }

  std::optional<unsigned> last() const noexcept {
    for (int w = static_cast<int>(words_.size()) - 1; w >= 0; --w) {
      if (words_[w] != 0) return static_cast<unsigned>(w * 64 + 63 - std::countl_zero(words_[w]));
    }
    return std::nullopt;
  }

 private:
  static constexpr std::uint64_t bit(unsigned i) noexcept { return std::uint64_t{1} << (i & 63); }

  std::array<std::uint64_t, 4> words_{};
};

struct TestAccess;

/// Stable priority queue over M-bit integer keys.
///
/// A stride-K prefix tree routes each key to a leaf; the leaves form a doubly
/// linked list sorted by key, and each leaf holds a FIFO queue of the payloads
/// inserted under that key. minimum() and maximum() read the list ends in O(1);
/// insert and remove walk one root-to-leaf path of at most M/K layers.
///
/// Every layer caches the leftmost and rightmost leaf of its subtree. Both
/// insert and remove update those caches on the way down, so neither operation
/// climbs back up the trie.
template <typename Payload>
class PTrie {
 public:
  class Node {
   public:
    Key key() const noexcept { return key_; }
    const Payload& front() const noexcept { return queue_.front(); }
    const std::deque<Payload>& queue() const noexcept { return queue_; }
    const Node* next() const noexcept { return next_; }
    const Node* prev() const noexcept { return prev_; }

   private:
    friend class PTrie;
    friend struct TestAccess;

    explicit Node(Key key) : key_(key) {}

    Key key_;
    std::deque<Payload> queue_;
    Node* prev_ = nullptr;
    Node* next_ = nullptr;
  };

  struct Item {
    Key key;
    Payload payload;
  };

  explicit PTrie(PTrieConfig config = {})
      : config_(config), root_(std::make_unique<Layer>(1, config.degree())) {}

  PTrie(const PTrie&) = delete;
  PTrie& operator=(const PTrie&) = delete;

  PTrie(PTrie&& other) noexcept
      : config_(other.config_),
        root_(std::exchange(other.root_, std::make_unique<Layer>(1, other.config_.degree()))),
        head_(std::exchange(other.head_, nullptr)),
        tail_(std::exchange(other.tail_, nullptr)),
        count_(std::exchange(other.count_, 0)),
        last_(other.last_),
        summary_(other.summary_) {}

  PTrie& operator=(PTrie&& other) noexcept {
    if (this != &other) {
      PTrie tmp(std::move(other));
      swap(tmp);
    }
    return *this;
  }

  void swap(PTrie& other) noexcept {
    std::swap(config_, other.config_);
    std::swap(root_, other.root_);
    std::swap(head_, other.head_);
    std::swap(tail_, other.tail_);
    std::swap(count_, other.count_);
    std::swap(last_, other.last_);
    std::swap(summary_, other.summary_);
  }

  const PTrieConfig& config() const noexcept { return config_; }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  const Node* minimum() const noexcept { return head_; }
  const Node* maximum() const noexcept { return tail_; }

  void insert(Key key, Payload payload) {
    if (key > config_.max_key()) {
      throw std::out_of_range("key " + std::to_string(key) + " exceeds " +
                              std::to_string(config_.word_bits()) + "-bit word");
    }
    OpStats st;
    std::unique_ptr<Node> pending;
    auto fresh = [&]() -> Node* {
      if (!pending) pending.reset(new Node(key));
      return pending.get();
    };

    Layer* layer = root_.get();
    unsigned depth = 0;
    while (true) {
      ++st.layers_visited;
      if (layer->min_leaf == nullptr) {
        // Only the root can be empty.
        Node* n = fresh();
        n->queue_.push_back(std::move(payload));
        layer->min_leaf = layer->max_leaf = n;
        head_ = tail_ = n;
        const unsigned c = config_.chunk(key, depth);
        layer->occupied.insert(c);
        ++st.index_ops;
        layer->slots[c] = std::move(pending);
        ++st.nodes_spliced;
        break;
      }
      if (key < layer->min_leaf->key_) layer->min_leaf = fresh();
      if (key > layer->max_leaf->key_) layer->max_leaf = fresh();

      const unsigned c = config_.chunk(key, depth);
      Slot& slot = layer->slots[c];

      if (std::holds_alternative<std::monostate>(slot)) {
        Node* n = fresh();
        n->queue_.push_back(std::move(payload));
        ++st.index_ops;
        if (auto p = layer->occupied.predecessor(c)) {
          link_after(slot_max(layer->slots[*p]), n);
        } else {
          ++st.index_ops;
          auto s = layer->occupied.successor(c);
          assert(s);
          link_before(slot_min(layer->slots[*s]), n);
        }
        layer->occupied.insert(c);
        ++st.index_ops;
        slot = std::move(pending);
        ++st.nodes_spliced;
        break;
      }

      if (auto* child = std::get_if<std::unique_ptr<Layer>>(&slot)) {
        layer = child->get();
        ++depth;
        continue;
      }

      Node* resident = std::get<std::unique_ptr<Node>>(slot).get();
      if (resident->key_ == key) {
        assert(!pending);
        resident->queue_.push_back(std::move(payload));
        break;
      }

      // Push-down: the resident leaf moves into a new child layer, repeated
      // while both keys still share the next chunk.
      Node* n = fresh();
      n->queue_.push_back(std::move(payload));
      std::unique_ptr<Node> displaced = std::move(std::get<std::unique_ptr<Node>>(slot));
      Node* lo = key < resident->key_ ? n : resident;
      Node* hi = key < resident->key_ ? resident : n;
      Slot* target = &slot;
      while (true) {
        ++depth;
        if (depth >= config_.depth_max()) {
          throw std::logic_error("ptrie: push-down exceeded depth_max");
        }
        auto child = std::make_unique<Layer>(depth + 1, config_.degree());
        ++st.layers_visited;
        child->min_leaf = lo;
        child->max_leaf = hi;
        const unsigned cr = config_.chunk(resident->key_, depth);
        const unsigned cn = config_.chunk(key, depth);
        Layer* raw = child.get();
        *target = std::move(child);
        if (cr == cn) {
          raw->occupied.insert(cr);
          target = &raw->slots[cr];
          continue;
        }
        raw->occupied.insert(cr);
        raw->occupied.insert(cn);
        raw->slots[cr] = std::move(displaced);
        raw->slots[cn] = std::move(pending);
        break;
      }
      ++st.index_ops;
      if (n == hi) {
        link_after(resident, n);
      } else {
        link_before(resident, n);
      }
      ++st.nodes_spliced;
      break;
    }
    ++count_;
    finish(st);
  }

  // Dequeues the oldest payload stored under `key`.
  std::optional<Payload> remove(Key key) {
    OpStats st;
    std::optional<Payload> out = remove_impl(key, st);
    finish(st);
    return out;
  }

  std::optional<Item> delete_min() {
    if (head_ == nullptr) {
      finish(OpStats{});
      return std::nullopt;
    }
    const Key k = head_->key_;
    auto p = remove(k);
    return Item{k, std::move(*p)};
  }

  std::optional<Item> delete_max() {
    if (tail_ == nullptr) {
      finish(OpStats{});
      return std::nullopt;
    }
    const Key k = tail_->key_;
    auto p = remove(k);
    return Item{k, std::move(*p)};
  }

  const Node* find(Key key) const {
    OpStats st;
    const Node* found = nullptr;
    if (key <= config_.max_key()) {
      const Layer* layer = root_.get();
      unsigned depth = 0;
      while (true) {
        ++st.layers_visited;
        const Slot& slot = layer->slots[config_.chunk(key, depth)];
        if (auto* child = std::get_if<std::unique_ptr<Layer>>(&slot)) {
          layer = child->get();
          ++depth;
          continue;
        }
        if (auto* leaf = std::get_if<std::unique_ptr<Node>>(&slot)) {
          if ((*leaf)->key_ == key) found = leaf->get();
        }
        break;
      }
    }
    finish(st);
    return found;
  }

  bool search(Key key) const { return find(key) != nullptr; }

  /// Counters of the most recent public operation.
  const OpStats& last_op_stats() const noexcept { return last_; }
  /// Aggregate over every operation since construction or reset_stats().
  const StepSummary& cumulative_stats() const noexcept { return summary_; }
  void reset_stats() noexcept {
    last_ = {};
    summary_ = {};
  }

  // Number of layers per level; index 0 is the root.
  std::vector<std::size_t> layers_per_level() const {
    std::vector<std::size_t> out;
    count_layers(*root_, 0, out);
    return out;
  }

  std::size_t layer_count() const {
    std::size_t n = 0;
    for (auto c : layers_per_level()) n += c;
    return n;
  }

  // Layers on the path from the root to the leaf holding `key`.
  std::optional<unsigned> depth_of(Key key) const {
    if (key > config_.max_key()) return std::nullopt;
    const Layer* layer = root_.get();
    for (unsigned depth = 0;; ++depth) {
      const Slot& slot = layer->slots[config_.chunk(key, depth)];
      if (auto* child = std::get_if<std::unique_ptr<Layer>>(&slot)) {
        layer = child->get();
        continue;
      }
      if (auto* leaf = std::get_if<std::unique_ptr<Node>>(&slot)) {
        if ((*leaf)->key_ == key) return depth + 1;
      }
      return std::nullopt;
    }
  }

  ValidationReport validate() const;

  // Hash of the full structure: layers, occupied slots, leaf keys and queue
  // lengths, in trie order.
  std::uint64_t fingerprint() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
      for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xff;
        h *= 1099511628211ull;
      }
    };
    mix(count_);
    fingerprint_layer(*root_, mix);
    return h;
  }

 private:
  friend struct TestAccess;

  struct Layer;
  using Slot = std::variant<std::monostate, std::unique_ptr<Layer>, std::unique_ptr<Node>>;

  struct Layer {
    Layer(unsigned lvl, unsigned degree) : level(lvl), slots(degree) {}

    unsigned level;  // 1 for the root
    std::vector<Slot> slots;
    IndexSet occupied;
    Node* min_leaf = nullptr;
    Node* max_leaf = nullptr;
  };

  static Node* slot_min(const Slot& s) noexcept {
    if (auto* l = std::get_if<std::unique_ptr<Layer>>(&s)) return (*l)->min_leaf;
    if (auto* n = std::get_if<std::unique_ptr<Node>>(&s)) return n->get();
    return nullptr;
  }

  static Node* slot_max(const Slot& s) noexcept {
    if (auto* l = std::get_if<std::unique_ptr<Layer>>(&s)) return (*l)->max_leaf;
    if (auto* n = std::get_if<std::unique_ptr<Node>>(&s)) return n->get();
    return nullptr;
  }

  void link_after(Node* at, Node* n) noexcept {
    n->prev_ = at;
    n->next_ = at->next_;
    if (at->next_) {
      at->next_->prev_ = n;
    } else {
      tail_ = n;
    }
    at->next_ = n;
  }

  void link_before(Node* at, Node* n) noexcept {
    n->next_ = at;
    n->prev_ = at->prev_;
    if (at->prev_) {
      at->prev_->next_ = n;
    } else {
      head_ = n;
    }
    at->prev_ = n;
  }

  void unlink(Node* n) noexcept {
    if (n->prev_) {
      n->prev_->next_ = n->next_;
    } else {
      head_ = n->next_;
    }
    if (n->next_) {
      n->next_->prev_ = n->prev_;
    } else {
      tail_ = n->prev_;
    }
    n->prev_ = n->next_ = nullptr;
  }

  // Moves the cache of `layer` off `x`, which is about to leave the list.
  static void retarget_caches(Layer* layer, const Node* x) noexcept {
    const bool only = layer->min_leaf == x && layer->max_leaf == x;
    if (only) {
      layer->min_leaf = layer->max_leaf = nullptr;
      return;
    }
    if (layer->min_leaf == x) layer->min_leaf = x->next_;
    if (layer->max_leaf == x) layer->max_leaf = x->prev_;
  }

  std::optional<Payload> remove_impl(Key key, OpStats& st) {
    if (key > config_.max_key()) return std::nullopt;
    Layer* layer = root_.get();
    unsigned depth = 0;
    while (true) {
      ++st.layers_visited;
      if (layer->min_leaf == nullptr) return std::nullopt;

      // If the target is one of this layer's cached extremes, it exists and
      // the cache can be fixed now, before descending further.
      Node* x = nullptr;
      if (layer->min_leaf->key_ == key) {
        x = layer->min_leaf;
      } else if (layer->max_leaf->key_ == key) {
        x = layer->max_leaf;
      }
      if (x != nullptr && x->queue_.size() == 1) retarget_caches(layer, x);

      const unsigned c = config_.chunk(key, depth);
      Slot& slot = layer->slots[c];

      if (std::holds_alternative<std::monostate>(slot)) return std::nullopt;

      if (auto* leaf = std::get_if<std::unique_ptr<Node>>(&slot)) {
        Node* n = leaf->get();
        if (n->key_ != key) return std::nullopt;
        Payload out = std::move(n->queue_.front());
        n->queue_.pop_front();
        if (n->queue_.empty()) {
          unlink(n);
          ++st.nodes_spliced;
          layer->occupied.erase(c);
          ++st.index_ops;
          slot = std::monostate{};
        }
        --count_;
        return out;
      }

      Layer* child = std::get<std::unique_ptr<Layer>>(slot).get();
      Node* only = child->min_leaf;
      if (only == child->max_leaf && only->key_ == key && only->queue_.size() == 1) {
        // The whole child subtree is this one leaf: drop the chain of layers
        // leading to it in one go.
        Payload out = std::move(only->queue_.front());
        only->queue_.pop_front();
        unlink(only);
        ++st.nodes_spliced;
        for (const Layer* l = child; l != nullptr;) {
          ++st.layers_visited;
          const Slot& s = l->slots[config_.chunk(key, l->level - 1)];
          auto* next = std::get_if<std::unique_ptr<Layer>>(&s);
          l = next ? next->get() : nullptr;
        }
        layer->occupied.erase(c);
        ++st.index_ops;
        slot = std::monostate{};
        --count_;
        return out;
      }
      layer = child;
      ++depth;
    }
  }

  void finish(const OpStats& st) const noexcept {
    last_ = st;
    summary_.record(st);
  }

  static void count_layers(const Layer& l, std::size_t depth, std::vector<std::size_t>& out) {
    if (out.size() <= depth) out.resize(depth + 1, 0);
    ++out[depth];
    for (const auto& s : l.slots) {
      if (auto* c = std::get_if<std::unique_ptr<Layer>>(&s)) count_layers(**c, depth + 1, out);
    }
  }

  template <typename Mix>
  static void fingerprint_layer(const Layer& l, Mix& mix) {
    mix(0x4c00000000000000ull | l.level);
    for (unsigned i = 0; i < l.slots.size(); ++i) {
      const Slot& s = l.slots[i];
      if (std::holds_alternative<std::monostate>(s)) continue;
      mix(i);
      if (auto* c = std::get_if<std::unique_ptr<Layer>>(&s)) {
        fingerprint_layer(**c, mix);
      } else {
        const Node& n = *std::get<std::unique_ptr<Node>>(s);
        mix(n.key_);
        mix(n.queue_.size());
      }
    }
    mix(l.min_leaf ? l.min_leaf->key_ : ~0ull);
    mix(l.max_leaf ? l.max_leaf->key_ : ~0ull);
  }

  struct WalkState {
    std::vector<const Node*> leaves;
    std::string error;
  };

  void validate_layer(const Layer& l, Key prefix, unsigned depth, WalkState& ws) const;

  PTrieConfig config_;
  std::unique_ptr<Layer> root_;
  Node* head_ = nullptr;
  Node* tail_ = nullptr;
  std::size_t count_ = 0;
  mutable OpStats last_;
  mutable StepSummary summary_;
};

template <typename Payload>
void PTrie<Payload>::validate_layer(const Layer& l, Key prefix, unsigned depth,
                                    WalkState& ws) const {
  auto fail = [&ws](std::string msg) {
    if (ws.error.empty()) ws.error = std::move(msg);
  };
  const std::string where = "layer at level " + std::to_string(l.level);
  if (l.level != depth + 1) fail(where + ": level field disagrees with depth");
  if (l.level > config_.depth_max()) fail(where + ": depth exceeds M/K");
  if (l.slots.size() != config_.degree()) fail(where + ": wrong slot count");

  const std::size_t first_leaf = ws.leaves.size();
  bool any = false;
  for (unsigned i = 0; i < l.slots.size(); ++i) {
    const Slot& s = l.slots[i];
    const bool filled = !std::holds_alternative<std::monostate>(s);
    if (filled != l.occupied.contains(i)) {
      fail(where + ": occupied set disagrees with slot " + std::to_string(i));
    }
    if (!filled) continue;
    any = true;
    const Key child_prefix = (prefix << config_.stride_bits()) | i;
    if (auto* c = std::get_if<std::unique_ptr<Layer>>(&s)) {
      if (depth + 1 >= config_.depth_max()) fail(where + ": child layer below depth_max");
      validate_layer(**c, child_prefix, depth + 1, ws);
    } else {
      const Node* n = std::get<std::unique_ptr<Node>>(s).get();
      const unsigned shift = config_.word_bits() - (depth + 1) * config_.stride_bits();
      const Key top = shift >= 64 ? 0 : n->key_ >> shift;
      if (top != child_prefix) fail(where + ": leaf key does not match its path");
      if (n->queue_.empty()) fail(where + ": leaf with empty queue");
      ws.leaves.push_back(n);
    }
  }
  if (!any && depth != 0) fail(where + ": empty non-root layer");
  if (!any && (l.min_leaf != nullptr || l.max_leaf != nullptr)) {
    fail(where + ": min_leaf mismatch on empty layer");
  }
  if (any) {
    const Node* lo = ws.leaves.size() > first_leaf ? ws.leaves[first_leaf] : nullptr;
    const Node* hi = ws.leaves.size() > first_leaf ? ws.leaves.back() : nullptr;
    if (l.min_leaf != lo) fail(where + ": min_leaf mismatch");
    if (l.max_leaf != hi) fail(where + ": max_leaf mismatch");
  }
}

template <typename Payload>
ValidationReport PTrie<Payload>::validate() const {
  WalkState ws;
  validate_layer(*root_, 0, 0, ws);
  if (!ws.error.empty()) return {false, ws.error};

  std::size_t payloads = 0;
  std::size_t i = 0;
  const Node* prev = nullptr;
  for (const Node* n = head_; n != nullptr; prev = n, n = n->next_, ++i) {
    if (n->prev_ != prev) return {false, "list: prev link inconsistent"};
    if (prev != nullptr && !(prev->key_ < n->key_)) {
      return {false, "list: keys not strictly increasing"};
    }
    if (i >= ws.leaves.size() || ws.leaves[i] != n) {
      return {false, "list: order differs from trie leaf order"};
    }
    payloads += n->queue_.size();
  }
  if (i != ws.leaves.size()) return {false, "list: trie holds leaves missing from list"};
  if (tail_ != prev) return {false, "list: tail does not match last node"};
  if (payloads != count_) return {false, "count mismatch"};
  return {};
}

}  // namespace ptrie
