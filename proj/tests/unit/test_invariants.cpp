#include <gtest/gtest.h>

#include <random>

#include "../oracle/oracle.hpp"
#include "distidx/enumerate.hpp"
#include "distidx/families.hpp"
#include "distidx/graph6.hpp"
#include "distidx/invariants.hpp"
#include "helpers.hpp"

using namespace distidx;

namespace {

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph::from_edges(10, e);
}

}  // namespace

TEST(Invariants, MatchingExamples) {
  EXPECT_EQ(matching_number(path(4)), 2);
  EXPECT_EQ(matching_number(cycle(5)), 2);
  EXPECT_EQ(matching_number(complete_bipartite(3, 3)), 3);
  EXPECT_EQ(matching_number(Graph::from_edges(1, {})), 0);
  EXPECT_EQ(matching_number(petersen()), 5);
}

TEST(Invariants, IndependenceExamples) {
  EXPECT_EQ(independence_number(cycle(5)), 2);
  EXPECT_EQ(independence_number(star(5)), 4);
  // Brute force over all 2^10 subsets.
  EXPECT_EQ(oracle::independence_number(petersen()), 4);
  EXPECT_EQ(independence_number(petersen()), 4);
  EXPECT_EQ(independence_number(complete(7)), 1);
}

TEST(Invariants, MatchingAgreesWithExhaustiveSearch) {
  std::mt19937 rng(21);
  for (int t = 0; t < 400; ++t) {
    const int n = 1 + t % 10;
    const Graph g = testing_helpers::random_connected(n, 0.1 + 0.05 * (t % 7), rng);
    ASSERT_EQ(matching_number(g), oracle::matching_number(g)) << emit_graph6(g);
    ASSERT_EQ(independence_number(g), oracle::independence_number(g))
        << emit_graph6(g);
  }
}

TEST(Invariants, AllSmallGraphsAgreeWithOracles) {
  for (int n = 1; n <= 7; ++n) {
    for_each_connected_graph(n, {}, [&](const Graph& g) {
      ASSERT_EQ(matching_number(g), oracle::matching_number(g));
      ASSERT_EQ(independence_number(g), oracle::independence_number(g));
      ASSERT_LE(matching_number(g) + independence_number(g), n);
    });
  }
}

TEST(Invariants, DisconnectedMatching) {
  // Two disjoint triangles and an isolated vertex.
  const Graph g = Graph::from_edges(
      7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_EQ(matching_number(g), 2);
  EXPECT_EQ(independence_number(g), 3);
}

TEST(Invariants, TreeMatchingIsGreedyLeafMatching) {
  // On a tree, matching a leaf to its parent and deleting both is optimal.
  auto greedy = [](Graph t) {
    int m = 0;
    VertexSet alive = t.vertices();
    bool progress = true;
    while (progress) {
      progress = false;
      for_each_vertex(alive, [&](int v) {
        if (progress || !(alive & bit(v))) return;
        const VertexSet nb = t.neighbors(v) & alive;
        if (popcount(nb) == 1) {
          alive &= ~(bit(v) | nb);
          ++m;
          progress = true;
        }
      });
    }
    return m;
  };
  for (int n = 2; n <= 12; ++n) {
    for_each_tree(n, {}, [&](const Graph& t) {
      ASSERT_EQ(matching_number(t), greedy(t));
    });
  }
}

TEST(Invariants, Eccentricity) {
  EXPECT_EQ(total_eccentricity(path(5)), 16);
  // floor(3k^2/4 - k/2) at k = 5.
  EXPECT_EQ(total_eccentricity(path(5)), (3 * 25 - 2 * 5) / 4);
  EXPECT_EQ(eccentricities(cycle(6)), std::vector<int>(6, 3));
  EXPECT_EQ(total_eccentricity(cycle(6)), 18);
  EXPECT_EQ(total_eccentricity(Graph::from_edges(1, {})), 0);
}

TEST(Invariants, DiameterRadius) {
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(diameter(path(n)), n - 1);
  EXPECT_EQ(diameter(cycle(8)), 4);
  EXPECT_EQ(radius(cycle(8)), 4);
  EXPECT_EQ(diameter(star(4)), 2);
  EXPECT_EQ(radius(star(4)), 1);
  std::mt19937 rng(4);
  for (int t = 0; t < 100; ++t) {
    const Graph g = testing_helpers::random_connected(12, 0.05, rng);
    EXPECT_LE(radius(g), diameter(g));
    EXPECT_LE(diameter(g), 2 * radius(g));
    const auto d = oracle::floyd(g);
    EXPECT_EQ(total_eccentricity(g), oracle::eccentricity_sum(d));
  }
}

TEST(Invariants, Leaves) {
  EXPECT_EQ(leaf_count(path(5)), 2);
  EXPECT_EQ(leaf_count(star(7)), 6);
  EXPECT_EQ(leaf_count(cycle(4)), 0);
}

TEST(Invariants, CycleLengths) {
  const Graph g = cycle_with_path(3, 8);
  EXPECT_TRUE(has_cycle_of_length(g, 6));
  EXPECT_FALSE(has_cycle_of_length(g, 4));
  EXPECT_TRUE(has_cycle_of_length(complete(5), 3));
  EXPECT_TRUE(has_cycle_of_length(complete(5), 5));
  EXPECT_FALSE(has_cycle_of_length(path(6), 3));
  EXPECT_TRUE(is_unicyclic(g));
  EXPECT_FALSE(is_tree(g));
  EXPECT_TRUE(is_tree(path(6)));
}
