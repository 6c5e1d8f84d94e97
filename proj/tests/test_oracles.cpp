#include <random>

#include <gtest/gtest.h>

#include "oracles/oracles.hpp"

namespace {

using oracle::ArcList;

ArcList small_digraph() {
  // A B C D E = 0..4
  return {5, {{0, 1, 1}, {0, 2, 2}, {0, 3, 5}, {1, 0, 2}, {1, 2, 1}, {1, 4, 2},
              {2, 3, 2}, {2, 4, 1}, {3, 4, 1}, {4, 3, 1}}};
}

TEST(StableSortedList, EmptyReplay) {
  EXPECT_TRUE(oracle::stable_pq_replay({}).empty());
  const auto r = oracle::stable_pq_replay({oracle::OpDeleteMin{}});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_FALSE(r[0].present);
}

TEST(StableSortedList, FifoWithinKey) {
  oracle::StableSortedList q;
  q.insert(3, 1);
  q.insert(1, 2);
  q.insert(3, 3);
  EXPECT_EQ(q.delete_min(), (std::pair<std::uint64_t, std::uint64_t>{1, 2}));
  EXPECT_EQ(q.remove(3), 1u);
  EXPECT_EQ(q.delete_min(), (std::pair<std::uint64_t, std::uint64_t>{3, 3}));
  EXPECT_FALSE(q.delete_min());
}

TEST(CompareStreams, ReportsFirstDivergence) {
  std::vector<oracle::OpResult> a{{true, 1, 2}, {true, 3, 4}}, b{{true, 1, 2}, {true, 3, 5}};
  EXPECT_TRUE(oracle::compare_streams(a, a, 1));
  const auto v = oracle::compare_streams(a, b, 9);
  EXPECT_FALSE(v);
  EXPECT_NE(v.first_divergence.find("op 1"), std::string::npos);
}

TEST(DijkstraHeap, SmallDigraph) {
  const auto d = oracle::dijkstra_heap(small_digraph(), 0);
  EXPECT_EQ(d, (oracle::Dist{0, 1, 2, 4, 3}));
}

TEST(DijkstraHeap, UnreachableIsAbsent) {
  const auto d = oracle::dijkstra_heap(ArcList{3, {{0, 1, 4}}}, 0);
  EXPECT_EQ(d[1], 4u);
  EXPECT_FALSE(d[2]);
}

TEST(Kruskal, EdgelessGraph) { EXPECT_EQ(oracle::kruskal(ArcList{4, {}}), 0u); }

TEST(BruteForce, PrefersFewerHopsAmongShortest) {
  const auto g = small_digraph();
  EXPECT_EQ(oracle::brute_force_best_path(g, 0, 3), (oracle::BestPath{4, 2}));
  EXPECT_EQ(oracle::brute_force_best_path(g, 2, 2), (oracle::BestPath{0, 0}));
  EXPECT_FALSE(oracle::brute_force_best_path(ArcList{2, {}}, 0, 1));
  EXPECT_THROW(oracle::brute_force_best_path(ArcList{13, {}}, 0, 1), std::invalid_argument);
}

TEST(BruteForce, AgreesWithDijkstraOnTinyGraphs) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 2000; ++i) {
    ArcList g{1 + rng() % 5, {}};
    for (std::size_t t = 0; t < g.vertices; ++t) {
      for (std::size_t h = 0; h < g.vertices; ++h) {
        if (rng() % 3 == 0) g.arcs.emplace_back(t, h, rng() % 3);
      }
    }
    const auto d = oracle::dijkstra_heap(g, 0);
    for (std::size_t v = 0; v < g.vertices; ++v) {
      const auto b = oracle::brute_force_best_path(g, 0, v);
      ASSERT_EQ(b.has_value(), d[v].has_value());
      if (b) ASSERT_EQ(b->weight, *d[v]);
    }
  }
}

}  // namespace
