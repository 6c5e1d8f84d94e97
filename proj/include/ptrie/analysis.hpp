#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ptrie/ptrie.hpp"

namespace ptrie::analysis {

namespace detail {

inline void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

inline double log_binomial(std::uint64_t n, std::uint64_t k) {
  return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

}  // namespace detail

/// Probability that exactly `g` of `n` random keys fall on one given pattern
/// of leading `level` chunks in a trie of degree `p`:
/// C(n, g) * p^(-g*level) * (1 - p^(-level))^(n - g).
inline double prob_exact_occupancy(std::uint64_t n, std::uint64_t p, unsigned level,
                                   std::uint64_t g) {
  detail::require(p >= 2, "degree must be at least 2");
  detail::require(g <= n, "occupancy must not exceed key count");
  const double hit = std::pow(static_cast<double>(p), -static_cast<double>(level));
  const double miss = 1.0 - hit;
  const double gd = static_cast<double>(g);
  const double rest = static_cast<double>(n - g);
  if (miss == 0.0) return g == n ? 1.0 : 0.0;
  const double log_term = detail::log_binomial(n, g) + gd * std::log(hit) + rest * std::log(miss);
  return std::exp(log_term);
}

/// Expected number of layers on `level` (root = 0) of a trie of degree `p`
/// holding `n` random keys: p^L (1 - (1 - p^-L)^n) - n (1 - p^-L)^(n-1).
inline double expected_layers_at_level(std::uint64_t n, std::uint64_t p, unsigned level) {
  detail::require(p >= 2, "degree must be at least 2");
  if (n == 0) return 0.0;
  const double pl = std::pow(static_cast<double>(p), static_cast<double>(level));
  const double nd = static_cast<double>(n);
  if (level == 0) return n >= 2 ? 1.0 : 0.0;
  // log1p/expm1 keep the two nearly equal terms accurate at deep levels.
  const double log_miss = std::log1p(-1.0 / pl);
  return -pl * std::expm1(nd * log_miss) - nd * std::exp((nd - 1.0) * log_miss);
}

inline double expected_total_layers(std::uint64_t n, std::uint64_t p, unsigned levels) {
  double sum = 0.0;
  for (unsigned l = 0; l < levels; ++l) sum += expected_layers_at_level(n, p, l);
  return sum;
}

struct LevelSample {
  unsigned level = 0;
  double expected = 0.0;
  double observed_mean = 0.0;
  double standard_error = 0.0;
};

struct LayerSimulation {
  std::uint64_t keys = 0;
  unsigned stride_bits = 0;
  std::uint64_t trials = 0;
  std::vector<LevelSample> levels;
  LevelSample total;
};

/// Inserts `n` uniform random M-bit keys into a fresh PTrie per trial and
/// records how many layers sit on each level. The root counts only once it
/// holds two distinct keys, matching the formula's notion of a branching node.
inline LayerSimulation simulate_layers(std::uint64_t n, const PTrieConfig& config,
                                       std::uint64_t trials, std::uint64_t seed,
                                       unsigned levels = 0) {
  detail::require(trials >= 2, "need at least two trials");
  if (levels == 0) levels = config.depth_max();
  std::mt19937_64 rng(seed);
  const Key mask = config.max_key();

  std::vector<double> sum(levels, 0.0), sum_sq(levels, 0.0);
  double tot = 0.0, tot_sq = 0.0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    PTrie<std::uint32_t> trie(config);
    for (std::uint64_t i = 0; i < n; ++i) trie.insert(rng() & mask, 0);
    auto per = trie.layers_per_level();
    const bool root_branches =
        trie.minimum() != nullptr && trie.minimum() != trie.maximum();
    if (!per.empty() && !root_branches) per[0] = 0;
    double trial_total = 0.0;
    for (unsigned l = 0; l < levels; ++l) {
      const double v = l < per.size() ? static_cast<double>(per[l]) : 0.0;
      sum[l] += v;
      sum_sq[l] += v * v;
      trial_total += v;
    }
    tot += trial_total;
    tot_sq += trial_total * trial_total;
  }

  const double tn = static_cast<double>(trials);
  auto finish = [tn](double s, double sq) {
    const double mean = s / tn;
    const double var = std::max(0.0, (sq - tn * mean * mean) / (tn - 1.0));
    return std::pair{mean, std::sqrt(var / tn)};
  };

  LayerSimulation out;
  out.keys = n;
  out.stride_bits = config.stride_bits();
  out.trials = trials;
  for (unsigned l = 0; l < levels; ++l) {
    auto [mean, se] = finish(sum[l], sum_sq[l]);
    out.levels.push_back({l, expected_layers_at_level(n, config.degree(), l), mean, se});
  }
  auto [mean, se] = finish(tot, tot_sq);
  out.total = {levels, expected_total_layers(n, config.degree(), levels), mean, se};
  return out;
}

}  // namespace ptrie::analysis
