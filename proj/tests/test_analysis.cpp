#include <cmath>
#include <cstdint>

#include <gtest/gtest.h>

#include "ptrie/analysis.hpp"

namespace {

namespace an = ptrie::analysis;

TEST(ProbExactOccupancy, LevelZeroPutsEveryKeyOnTheRootPattern) {
  for (std::uint64_t n : {1u, 5u, 40u}) {
    for (std::uint64_t g = 0; g <= n; ++g) {
      EXPECT_EQ(an::prob_exact_occupancy(n, 16, 0, g), g == n ? 1.0 : 0.0);
    }
  }
}

TEST(ProbExactOccupancy, TwoKeysOneLevelMatchesEnumeration) {
  // Enumerate the first chunk of two keys over all 16 x 16 outcomes and count
  // how often both land on pattern 0.
  int both = 0, one = 0, none = 0;
  for (int a = 0; a < 16; ++a) {
    for (int b = 0; b < 16; ++b) {
      const int hits = (a == 0) + (b == 0);
      both += hits == 2;
      one += hits == 1;
      none += hits == 0;
    }
  }
  EXPECT_DOUBLE_EQ(an::prob_exact_occupancy(2, 16, 1, 2), both / 256.0);
  EXPECT_DOUBLE_EQ(an::prob_exact_occupancy(2, 16, 1, 2), 1.0 / 256.0);
  EXPECT_NEAR(an::prob_exact_occupancy(2, 16, 1, 1), one / 256.0, 1e-15);
  EXPECT_NEAR(an::prob_exact_occupancy(2, 16, 1, 0), none / 256.0, 1e-15);
}

TEST(ProbExactOccupancy, SumsToOne) {
  for (std::uint64_t n : {1u, 16u, 256u, 4096u}) {
    for (unsigned level : {0u, 1u, 2u, 5u}) {
      double sum = 0.0;
      for (std::uint64_t g = 0; g <= n; ++g) sum += an::prob_exact_occupancy(n, 16, level, g);
      EXPECT_NEAR(sum, 1.0, 1e-9) << "n=" << n << " level=" << level;
    }
  }
}

TEST(ProbExactOccupancy, RejectsDomainViolations) {
  EXPECT_THROW(an::prob_exact_occupancy(3, 16, 1, 4), std::domain_error);
  EXPECT_THROW(an::prob_exact_occupancy(3, 1, 1, 1), std::domain_error);
}

TEST(ExpectedLayers, RootLevel) {
  EXPECT_EQ(an::expected_layers_at_level(1, 16, 0), 0.0);
  for (std::uint64_t n : {2u, 3u, 100u}) EXPECT_EQ(an::expected_layers_at_level(n, 16, 0), 1.0);
}

TEST(ExpectedLayers, SingleKeyNeverBranches) {
  for (unsigned l = 0; l < 8; ++l) EXPECT_NEAR(an::expected_layers_at_level(1, 16, l), 0.0, 1e-12);
}

TEST(ExpectedLayers, MatchesDirectSumOverPatterns) {
  // P^L patterns, each a layer when it holds >= 2 keys:
  // P^L * (1 - P(0 keys) - P(1 key)).
  for (std::uint64_t n : {2u, 10u, 300u}) {
    for (unsigned l = 1; l < 5; ++l) {
      const double pl = std::pow(16.0, l);
      const double direct =
          pl * (1.0 - an::prob_exact_occupancy(n, 16, l, 0) - an::prob_exact_occupancy(n, 16, l, 1));
      EXPECT_NEAR(an::expected_layers_at_level(n, 16, l), direct, 1e-9 * std::max(1.0, direct));
    }
  }
}

TEST(ExpectedLayers, NondecreasingInKeyCount) {
  for (unsigned p : {2u, 4u, 16u, 256u}) {
    for (unsigned l = 1; l < 6; ++l) {
      double prev = 0.0;
      for (std::uint64_t n = 1; n <= 5000; n += (n < 64 ? 1 : 37)) {
        const double v = an::expected_layers_at_level(n, p, l);
        ASSERT_GE(v, prev - 1e-9) << "p=" << p << " l=" << l << " n=" << n;
        prev = v;
      }
    }
  }
}

TEST(SimulateLayers, SmallRunAgreesWithFormula) {
  const auto sim = an::simulate_layers(256, ptrie::PTrieConfig(32, 4), 300, 5);
  ASSERT_EQ(sim.levels.size(), 8u);
  EXPECT_EQ(sim.levels[0].observed_mean, 1.0);
  const double diff = std::abs(sim.total.observed_mean - sim.total.expected);
  EXPECT_LE(diff, 4 * sim.total.standard_error + 1.0 / 300)
      << sim.total.observed_mean << " vs " << sim.total.expected;
}

TEST(SimulateLayers, Deterministic) {
  const auto a = an::simulate_layers(64, ptrie::PTrieConfig(16, 4), 20, 9);
  const auto b = an::simulate_layers(64, ptrie::PTrieConfig(16, 4), 20, 9);
  EXPECT_EQ(a.total.observed_mean, b.total.observed_mean);
}

}  // namespace
