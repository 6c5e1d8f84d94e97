#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "ptrie/ptrie.hpp"

namespace ptrie {

// Identity embedding of an unsigned weight into an M-bit key.
inline Key encode_unsigned(std::uint64_t w, const PTrieConfig& config) {
  if (w > config.max_key()) {
    throw std::out_of_range("value " + std::to_string(w) + " does not fit in " +
                            std::to_string(config.word_bits()) + " bits");
  }
  return w;
}

/// Priority queue over signed integers built from two PTries.
///
/// Non-negative values go to one trie keyed by value. Negative values go to a
/// second trie keyed by magnitude, where the list runs in reverse numeric
/// order, so the smallest negative is read from that trie's maximum.
template <typename Payload>
class SignedPTrie {
 public:
  struct Item {
    std::int64_t value;
    Payload payload;
  };

  explicit SignedPTrie(PTrieConfig config = {})
      : config_(config), pos_(config), neg_(config) {}

  // Values must satisfy |v| < 2^(M-1).
  std::int64_t max_magnitude() const noexcept {
    return config_.word_bits() >= 64 ? INT64_MAX
                                     : static_cast<std::int64_t>((Key{1} << (config_.word_bits() - 1)) - 1);
  }

  void insert(std::int64_t v, Payload payload) {
    if (v > max_magnitude() || v < -max_magnitude()) {
      throw std::out_of_range("signed value " + std::to_string(v) + " needs more than " +
                              std::to_string(config_.word_bits() - 1) + " magnitude bits");
    }
    if (v < 0) {
      neg_.insert(static_cast<Key>(-v), std::move(payload));
    } else {
      pos_.insert(static_cast<Key>(v), std::move(payload));
    }
  }

  std::optional<Item> delete_min() {
    if (!neg_.empty()) {
      auto it = neg_.delete_max();
      return Item{-static_cast<std::int64_t>(it->key), std::move(it->payload)};
    }
    if (auto it = pos_.delete_min()) {
      return Item{static_cast<std::int64_t>(it->key), std::move(it->payload)};
    }
    return std::nullopt;
  }

  std::optional<Payload> remove(std::int64_t v) {
    if (v < 0) return neg_.remove(static_cast<Key>(-v));
    return pos_.remove(static_cast<Key>(v));
  }

  bool search(std::int64_t v) const {
    return v < 0 ? neg_.search(static_cast<Key>(-v)) : pos_.search(static_cast<Key>(v));
  }

  std::optional<std::int64_t> minimum() const {
    if (auto* n = neg_.maximum()) return -static_cast<std::int64_t>(n->key());
    if (auto* n = pos_.minimum()) return static_cast<std::int64_t>(n->key());
    return std::nullopt;
  }

  std::size_t size() const noexcept { return pos_.size() + neg_.size(); }
  bool empty() const noexcept { return size() == 0; }

  const PTrie<Payload>& positive() const noexcept { return pos_; }
  const PTrie<Payload>& negative() const noexcept { return neg_; }

  ValidationReport validate() const {
    if (auto r = pos_.validate(); !r) return {false, "positive trie: " + r.first_violation};
    if (auto r = neg_.validate(); !r) return {false, "negative trie: " + r.first_violation};
    return {};
  }

 private:
  PTrieConfig config_;
  PTrie<Payload> pos_;
  PTrie<Payload> neg_;
};

}  // namespace ptrie
