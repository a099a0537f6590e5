#include <gtest/gtest.h>

#include "../oracle/oracle.hpp"
#include "distidx/canon.hpp"
#include "distidx/enumerate.hpp"
#include "distidx/error.hpp"
#include "distidx/families.hpp"
#include "distidx/indices.hpp"
#include "distidx/invariants.hpp"

using namespace distidx;

TEST(Families, Basics) {
  EXPECT_EQ(path(1).order(), 1);
  EXPECT_EQ(path(5).edge_count(), 4);
  EXPECT_EQ(cycle(5).edge_count(), 5);
  EXPECT_EQ(star(5).degree(0), 4);
  EXPECT_EQ(complete(6).edge_count(), 15);
  EXPECT_EQ(complete_bipartite(2, 3).edge_count(), 6);
  EXPECT_EQ(bipartition(complete_bipartite(2, 3)), (std::pair{2, 3}));
  EXPECT_THROW(cycle(2), Error);
  EXPECT_THROW(star(1), Error);
  EXPECT_THROW(path(0), Error);
}

TEST(Families, ANm) {
  EXPECT_EQ(wiener(a_nm(6, 2)), 32);
  EXPECT_TRUE(isomorphic(a_nm(8, 4), path(8)));
  EXPECT_TRUE(isomorphic(a_nm(7, 1), star(7)));
  for (int n = 2; n <= 14; ++n) {
    for (int m = 1; 2 * m <= n; ++m) {
      const Graph g = a_nm(n, m);
      ASSERT_EQ(g.order(), n);
      EXPECT_TRUE(is_tree(g));
      EXPECT_EQ(matching_number(g), m);
      EXPECT_TRUE(is_balanced_double_broom(g));
    }
  }
  try {
    a_nm(6, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidMatching);
  }
  EXPECT_THROW(a_nm(6, 0), Error);
}

TEST(Families, Dumbbell) {
  const Graph g = dumbbell(10, 3);
  EXPECT_EQ(g.order(), 10);
  EXPECT_EQ(independence_number(g), 3);
  EXPECT_EQ(diameter(g), 5);
  for (int n = 5; n <= 16; ++n) {
    for (int a = 2; 2 * a < n; ++a) {
      const Graph h = dumbbell(n, a);
      ASSERT_EQ(h.order(), n);
      EXPECT_TRUE(is_connected(h));
      EXPECT_EQ(independence_number(h), oracle::independence_number(h));
      EXPECT_EQ(independence_number(h), a);
      EXPECT_EQ(diameter(h), 2 * a - 1);
    }
  }
  try {
    dumbbell(6, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidAlpha);
  }
  EXPECT_THROW(dumbbell(6, 1), Error);
}

TEST(Families, G4) {
  const Graph g = g4(1, 1, 2);
  EXPECT_EQ(g.order(), 8);
  EXPECT_TRUE(is_unicyclic(g));
  EXPECT_TRUE(has_cycle_of_length(g, 4));
  EXPECT_EQ(wiener(g), 71);
  EXPECT_TRUE(isomorphic(g4(0, 0, 0), cycle(4)));
  for (int k = 3; k <= 10; ++k) {
    const Graph h = g4(1, 1, 2 * k - 6);
    ASSERT_EQ(h.order(), 2 * k);
    EXPECT_EQ(3 * wiener(h), 4 * k * k * k - 19 * k + 33);
    EXPECT_EQ(wiener(cycle(2 * k)), k * k * k);
    EXPECT_EQ(bipartition(h), (std::pair{k - 1, k + 1}));
  }
}

TEST(Families, CycleWithPath) {
  EXPECT_TRUE(isomorphic(cycle_with_path(3, 6), cycle(6)));
  const Graph g = cycle_with_path(2, 7);
  EXPECT_TRUE(is_unicyclic(g));
  EXPECT_TRUE(has_cycle_of_length(g, 4));
  EXPECT_EQ(leaf_count(g), 1);
  EXPECT_THROW(cycle_with_path(4, 7), Error);
}

TEST(Families, SubdividedStar) {
  const Graph g = subdivided_star(7);
  EXPECT_TRUE(is_tree(g));
  EXPECT_EQ(leaf_count(g), 5);
  EXPECT_EQ(diameter(g), 3);
  EXPECT_TRUE(isomorphic(subdivided_star(4), path(4)));
  EXPECT_THROW(subdivided_star(3), Error);
}

TEST(Families, MinWeFamily) {
  for (int n = 4; n <= 12; ++n) {
    const auto fam = min_we_extremal_family(n);
    ASSERT_FALSE(fam.empty());
    const std::int64_t bound = (std::int64_t(n) * (n - 4) + 1) / 2;
    for (const Graph& g : fam) {
      ASSERT_EQ(g.order(), n);
      EXPECT_TRUE(is_connected(g));
      EXPECT_EQ(w_minus_ecc(g), bound) << n;
    }
  }
  EXPECT_EQ(min_we_extremal_family(6).size(), 1u);
  EXPECT_EQ(min_we_extremal_family(7).size(), 2u);
  EXPECT_EQ(min_we_extremal_family(4).size(), 2u);
  EXPECT_EQ(min_we_extremal_family(5).size(), 3u);
  EXPECT_EQ(w_minus_ecc(diamond_with_pendant()), 3);
}

TEST(Families, DoubleBrooms) {
  const Graph g = double_broom(3, 2, 1);
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(double_broom_ends(g), (std::pair{2, 1}));
  EXPECT_TRUE(is_double_broom(g));
  EXPECT_TRUE(is_balanced_double_broom(g));
  EXPECT_FALSE(is_balanced_double_broom(double_broom(3, 3, 1)));
  EXPECT_TRUE(is_double_broom(double_broom(3, 3, 1)));
  EXPECT_EQ(double_broom_ends(star(6)), (std::pair{3, 2}));
  EXPECT_FALSE(double_broom_ends(cycle(5)).has_value());
  // Spider with three legs of length two is not a double broom.
  const Graph spider = Graph::from_edges(
      7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  EXPECT_FALSE(is_double_broom(spider));
  for (int n = 2; n <= 12; ++n) {
    const auto all = balanced_double_brooms(n);
    int count = 0;
    for (const Graph& t : trees(n)) {
      if (is_balanced_double_broom(t)) ++count;
    }
    EXPECT_EQ(int(all.size()), count) << n;
    for (const Graph& t : all) EXPECT_TRUE(is_balanced_double_broom(t));
  }
}

TEST(Families, LeafDistanceBoundOnDoubleBrooms) {
  // Balanced double brooms with l leaves on a path of n - l vertices.
  for (int n = 4; n <= 12; ++n) {
    for (const Graph& t : balanced_double_brooms(n)) {
      const int l = leaf_count(t);
      const std::int64_t tw = terminal_wiener(t, DistanceMatrix(t));
      const auto ends = *double_broom_ends(t);
      const std::int64_t spine = n - l + 1;
      const std::int64_t a = ends.first, b = ends.second;
      EXPECT_EQ(tw, a * (a - 1) + b * (b - 1) + a * b * spine) << n;
    }
  }
}
