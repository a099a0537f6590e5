#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "../oracle/oracle.hpp"
#include "distidx/enumerate.hpp"
#include "distidx/error.hpp"
#include "distidx/families.hpp"
#include "distidx/indices.hpp"
#include "distidx/invariants.hpp"
#include "helpers.hpp"

using namespace distidx;

namespace {

DistanceMatrix dm(const Graph& g) { return DistanceMatrix(g); }

}  // namespace

TEST(Indices, WienerClosedForms) {
  EXPECT_EQ(wiener(dm(path(4))), 10);
  EXPECT_EQ(wiener(dm(cycle(6))), 27);
  for (int k = 2; k <= 30; ++k) {
    EXPECT_EQ(wiener(dm(path(k))), std::int64_t(k + 1) * k * (k - 1) / 6);
    EXPECT_EQ(wiener(dm(complete(k))), std::int64_t(k) * (k - 1) / 2);
  }
  for (int k = 3; k <= 30; ++k) {
    EXPECT_EQ(Rational(wiener(dm(cycle(k)))),
              Rational(k, 2) * Rational(std::int64_t(k) * k / 4));
  }
}

TEST(Indices, GeneralizedWiener) {
  EXPECT_EQ(generalized_wiener(dm(path(3)), ConvexWeight::hyper()), Rational(5));
  EXPECT_EQ(generalized_wiener(dm(cycle(4)), ConvexWeight::power(2)),
            Rational(12));
  EXPECT_EQ(hyper_wiener(dm(path(3))), Rational(5));
  EXPECT_EQ(hyper_wiener(dm(complete(6))), Rational(15));
  EXPECT_EQ(hyper_wiener(dm(path(4))), Rational(15));
}

TEST(Indices, GeneralizedWienerMatchesOracle) {
  std::mt19937 rng(1);
  for (int t = 0; t < 200; ++t) {
    const Graph g = testing_helpers::random_connected(2 + t % 14, 0.1, rng);
    const DistanceMatrix d(g);
    const auto ref = oracle::floyd(g);
    EXPECT_EQ(wiener(d), oracle::wiener(ref));
    EXPECT_EQ(generalized_wiener(d, ConvexWeight::identity()), Rational(wiener(d)));
    EXPECT_EQ(generalized_wiener(d, ConvexWeight::hyper()), hyper_wiener(d));
    EXPECT_EQ(hyper_wiener(d) * Rational(2),
              Rational(oracle::twice_hyper_wiener(ref)));
    EXPECT_EQ(generalized_wiener(d, ConvexWeight::power(3)),
              Rational(oracle::sum_power(ref, 3)));
  }
}

TEST(Indices, MonotoneInWeight) {
  std::mt19937 rng(2);
  const ConvexWeight tab =
      ConvexWeight::table({Rational(1), Rational(3), Rational(6), Rational(10),
                           Rational(15), Rational(21), Rational(28),
                           Rational(36), Rational(45), Rational(55),
                           Rational(66), Rational(78)});
  for (int t = 0; t < 50; ++t) {
    const DistanceMatrix d(testing_helpers::random_connected(12, 0.05, rng));
    // id <= hyper <= pow:2 pointwise; the table spells out hyper.
    EXPECT_LE(generalized_wiener(d, ConvexWeight::identity()),
              generalized_wiener(d, ConvexWeight::hyper()));
    EXPECT_LE(generalized_wiener(d, ConvexWeight::hyper()),
              generalized_wiener(d, ConvexWeight::power(2)));
    EXPECT_EQ(generalized_wiener(d, tab),
              generalized_wiener(d, ConvexWeight::hyper()));
  }
}

TEST(Indices, WeightValidation) {
  EXPECT_THROW(ConvexWeight::table({}), Error);
  EXPECT_THROW(ConvexWeight::table({Rational(1), Rational(1)}), Error);
  // Not convex through the origin: steps 2 then 1.
  EXPECT_THROW(ConvexWeight::table({Rational(2), Rational(3)}), Error);
  EXPECT_NO_THROW(ConvexWeight::table({Rational(1), Rational(2)}));
  EXPECT_THROW(ConvexWeight::power(0), Error);
  const ConvexWeight shortw = ConvexWeight::table({Rational(1), Rational(3)});
  try {
    generalized_wiener(dm(path(4)), shortw);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWeightDomainExceeded);
  }
}

TEST(Indices, WeightSpecRoundTrip) {
  for (std::string s : {"id", "hyper", "pow:2", "pow:3", "table:1,3,6",
                        "table:1/2,3/2,3"}) {
    EXPECT_EQ(ConvexWeight::parse(s).spec(), s);
  }
  EXPECT_THROW(ConvexWeight::parse("table:1,3,7/2"), Error);
  EXPECT_THROW(ConvexWeight::parse("pow:1.5"), Error);
  EXPECT_THROW(ConvexWeight::parse("cube"), Error);
}

TEST(Indices, MeanDistances) {
  EXPECT_EQ(mean_distance(dm(path(4))), Rational(10, 6));
  EXPECT_THROW(mean_distance(dm(Graph::from_edges(1, {}))), Error);
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    const DistanceMatrix d(testing_helpers::random_connected(9, 0.1, rng));
    EXPECT_EQ(power_mean_distance(d, kPlusInfinity), diameter(d));
    EXPECT_EQ(power_mean_distance(d, -kPlusInfinity), 1.0);
    EXPECT_NEAR(power_mean_distance(d, 1.0), mean_distance(d).to_double(), 1e-12);
  }
  EXPECT_NEAR(power_mean_distance(dm(complete(3)), 0.0), 1.0, 1e-12);
  // M_2 over {1,1,2} for P_3.
  EXPECT_NEAR(power_mean_distance(dm(path(3)), 2.0), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(power_mean({1.0, 3.0}, 1.0), 2.0, 1e-12);
}

TEST(Indices, ExternalAndTerminal) {
  const DistanceMatrix s(star(4));
  EXPECT_EQ(external_wiener(star(4), s), 9);
  EXPECT_EQ(terminal_wiener(star(4), s), 6);
  for (int n = 3; n <= 10; ++n) {
    EXPECT_EQ(terminal_wiener(path(n), dm(path(n))), n - 1);
    EXPECT_EQ(external_wiener(cycle(n), dm(cycle(n))), 0);
  }
  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    const Graph g = testing_helpers::random_connected(2 + t % 12, 0.05, rng);
    const auto ref = oracle::floyd(g);
    const DistanceMatrix d(g);
    EXPECT_EQ(external_wiener(g, d), oracle::external_wiener(g, ref));
    EXPECT_EQ(terminal_wiener(g, d), oracle::terminal_wiener(g, ref));
  }
}

TEST(Indices, SideCounts) {
  const auto p3 = edge_side_counts(path(3), dm(path(3)));
  ASSERT_EQ(p3.size(), 2u);
  EXPECT_EQ(p3[0].edge, (Edge{0, 1}));
  EXPECT_EQ(p3[0].n_u, 1);
  EXPECT_EQ(p3[0].n_v, 2);
  for (const auto& e : edge_side_counts(complete(3), dm(complete(3)))) {
    EXPECT_EQ(e.n_u, 1);
    EXPECT_EQ(e.n_v, 1);
  }
  for (const auto& e : edge_side_counts(cycle(4), dm(cycle(4)))) {
    EXPECT_EQ(e.n_u, 2);
    EXPECT_EQ(e.n_v, 2);
    EXPECT_EQ(e.x(), Rational(2));
  }
}

TEST(Indices, Szeged) {
  EXPECT_EQ(szeged(path(3), dm(path(3))), 4);
  EXPECT_EQ(weighted_szeged(complete(3), dm(complete(3))), 12);
  EXPECT_EQ(weighted_szeged(complete_bipartite(1, 2),
                            dm(complete_bipartite(1, 2))),
            12);
  EXPECT_EQ(weighted_szeged(complete_bipartite(2, 2),
                            dm(complete_bipartite(2, 2))),
            64);
  std::mt19937 rng(6);
  for (int t = 0; t < 100; ++t) {
    const Graph g = testing_helpers::random_connected(2 + t % 12, 0.2, rng);
    const auto ref = oracle::floyd(g);
    const DistanceMatrix d(g);
    EXPECT_EQ(szeged(g, d), oracle::szeged(g, ref));
    EXPECT_EQ(weighted_szeged(g, d), oracle::weighted_szeged(g, ref));
  }
}

TEST(Indices, SzegedIdentitiesOnAllSmallGraphs) {
  for (int n = 1; n <= 8; ++n) {
    const std::int64_t quarter = std::int64_t(n) * n / 4;
    for_each_connected_graph(n, {}, [&](const Graph& g) {
      const DistanceMatrix d(g);
      const auto sides = edge_side_counts(g, d);
      std::int64_t squares = 0, ends = 0, slack = 0;
      for (int v = 0; v < n; ++v) squares += g.degree(v) * g.degree(v);
      const bool bip = bipartition(g).has_value();
      for (const auto& e : sides) {
        ASSERT_GE(e.n_u, 1);
        ASSERT_GE(e.n_v, 1);
        ASSERT_LE(e.n_u + e.n_v, n);
        ASSERT_LE(e.n_u + e.n_v + e.degree_sum(), 2 * n);
        ASSERT_LE(Rational(e.degree_sum() * e.n_u * e.n_v),
                  Rational(2 * quarter) * (Rational(n) - e.x()));
        if (bip) ASSERT_EQ(e.n_u + e.n_v, n);
        ends += e.degree_sum();
        slack += 2 * n - e.degree_sum();
      }
      ASSERT_EQ(squares, ends);
      ASSERT_LE(slack, n * quarter);
    });
  }
}

TEST(Indices, WMinusEcc) {
  EXPECT_EQ(w_minus_ecc(path(10)), 95);
  EXPECT_EQ(w_minus_ecc(path(4)), 0);
  EXPECT_EQ(w_minus_ecc(cycle(3)), 0);
  EXPECT_EQ(w_minus_ecc(path(3)), -1);
}

TEST(Indices, SpanningTreeBoundsExternalWiener) {
  std::mt19937 rng(8);
  for (int t = 0; t < 100; ++t) {
    const Graph tree = testing_helpers::random_tree(10, rng);
    Graph g = tree;
    std::uniform_int_distribution<int> pick(0, 9);
    for (int k = 0; k < 3; ++k) {
      const int u = pick(rng), v = pick(rng);
      if (u != v && !g.has_edge(u, v)) g = g.with_edge(u, v);
    }
    EXPECT_LE(external_wiener(g, dm(g)), external_wiener(tree, dm(tree)));
  }
}

TEST(Indices, LabelInvariance) {
  std::mt19937 rng(10);
  for (int t = 0; t < 100; ++t) {
    const Graph g = testing_helpers::random_connected(11, 0.15, rng);
    const Graph h = g.relabeled(testing_helpers::random_permutation(11, rng));
    const DistanceMatrix a(g), b(h);
    EXPECT_EQ(wiener(a), wiener(b));
    EXPECT_EQ(hyper_wiener(a), hyper_wiener(b));
    EXPECT_EQ(external_wiener(g, a), external_wiener(h, b));
    EXPECT_EQ(szeged(g, a), szeged(h, b));
    EXPECT_EQ(weighted_szeged(g, a), weighted_szeged(h, b));
    EXPECT_EQ(w_minus_ecc(a), w_minus_ecc(b));
    EXPECT_EQ(matching_number(g), matching_number(h));
    EXPECT_EQ(independence_number(g), independence_number(h));
  }
}
