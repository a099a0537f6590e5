#include <gtest/gtest.h>

#include <algorithm>

#include "distidx/canon.hpp"
#include "distidx/error.hpp"
#include "distidx/families.hpp"
#include "distidx/graph6.hpp"
#include "distidx/indices.hpp"
#include "distidx/verify.hpp"

using namespace distidx;

namespace {

template <class T>
const T* detail(const CheckReport& r, const std::string& key) {
  for (const auto& [k, v] : r.details) {
    if (k == key) return std::get_if<T>(&v);
  }
  return nullptr;
}

void expect_same(const CheckReport& a, const CheckReport& b) {
  EXPECT_EQ(a.statement, b.statement);
  EXPECT_EQ(a.size, b.size);
  EXPECT_EQ(a.optimum, b.optimum);
  EXPECT_EQ(a.optimizers, b.optimizers);
  EXPECT_EQ(a.margin, b.margin);
  EXPECT_EQ(a.pass, b.pass);
  EXPECT_EQ(a.audit.graphs(), b.audit.graphs());
  EXPECT_EQ(a.audit.violations(), b.audit.violations());
  EXPECT_EQ(a.details, b.details);
}

}  // namespace

TEST(Audit, CleanOnKnownGraphs) {
  BoundAudit audit;
  for (const Graph& g : {path(7), cycle(8), complete(5), star(6),
                         complete_bipartite(3, 4), dumbbell(11, 3)}) {
    audit.observe(g);
  }
  EXPECT_EQ(audit.graphs(), 6);
  EXPECT_TRUE(audit.clean());
  EXPECT_TRUE(audit.witnesses().empty());
  BoundAudit other;
  other.observe(path(3));
  audit.merge(other);
  EXPECT_EQ(audit.graphs(), 7);
}

TEST(Verify, WfMatching) {
  const CheckReport r = check_wf_max_matching(10, 3, ConvexWeight::identity());
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.statement, "wf-matching");
  ASSERT_EQ(r.optimizers.size(), 1u);
  EXPECT_EQ(r.optimizers[0], canonical_form(a_nm(10, 3)));
  ASSERT_TRUE(r.margin.has_value());
  EXPECT_GT(*r.margin, Rational(0));
  EXPECT_TRUE(r.audit.clean());
  try {
    check_wf_max_matching(6, 4, ConvexWeight::identity());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyFamily);
  }
}

TEST(Verify, WfMatchingAllAndMonotone) {
  const auto all = check_wf_max_matching_all(
      9, {ConvexWeight::identity(), ConvexWeight::hyper()});
  EXPECT_EQ(all.size(), 8u);
  for (const auto& r : all) EXPECT_TRUE(r.pass);
  const CheckReport mono = check_monotonicity(9, ConvexWeight::power(2));
  EXPECT_TRUE(mono.pass);
  const bool* inc = detail<bool>(mono, "strictly_increasing");
  ASSERT_NE(inc, nullptr);
  EXPECT_TRUE(*inc);
}

TEST(Verify, WfIndependence) {
  for (int alpha = 1; alpha < 7; ++alpha) {
    const CheckReport r =
        check_wf_max_independence(7, alpha, ConvexWeight::identity());
    EXPECT_TRUE(r.pass) << alpha;
    EXPECT_TRUE(r.audit.clean());
  }
  const CheckReport d = check_wf_max_independence(7, 3, ConvexWeight::hyper());
  ASSERT_EQ(d.optimizers.size(), 1u);
  EXPECT_EQ(d.optimizers[0], canonical_form(dumbbell(7, 3)));
  const CheckReport k = check_wf_max_independence(5, 1, ConvexWeight::identity());
  EXPECT_EQ(k.optimizers[0], canonical_form(complete(5)));
}

TEST(Verify, Chung) {
  const CheckReport r = check_chung(6, 1.0);
  EXPECT_TRUE(r.audit.clean());
  const auto* eq = detail<std::vector<std::string>>(r, "equality_graphs");
  ASSERT_NE(eq, nullptr);
  // At j = 1 the doubled bound is tight for the complete graph.
  EXPECT_NE(std::find(eq->begin(), eq->end(), emit_graph6(complete(6))),
            eq->end());
  const bool* chr = detail<bool>(r, "equality_characterisation_holds");
  ASSERT_NE(chr, nullptr);
  EXPECT_TRUE(*chr);
  const CheckReport r2 = check_chung(6, 2.0);
  EXPECT_TRUE(r2.pass);
  const auto* eq2 = detail<std::vector<std::string>>(r2, "equality_graphs");
  ASSERT_NE(eq2, nullptr);
  EXPECT_TRUE(eq2->empty());
}

TEST(Verify, WexMax) {
  for (int n = 4; n <= 12; ++n) {
    const CheckReport r = check_wex_max(n);
    EXPECT_TRUE(r.pass) << n;
    EXPECT_EQ(r.mode, MatchMode::kSubset);
    for (const auto& f : r.optimizers) {
      EXPECT_TRUE(is_balanced_double_broom(f.graph()));
    }
  }
}

TEST(Verify, BipartiteUnicyclic) {
  const auto reports = check_bipartite_unicyclic(8);
  ASSERT_FALSE(reports.empty());
  for (const auto& r : reports) EXPECT_TRUE(r.pass) << r.statement;
  bool saw_44 = false;
  for (const auto& r : reports) {
    if (r.statement != "bipartite-unicyclic") continue;
    if (r.params.size() >= 3 && r.params[1].second == FieldValue(std::int64_t{4}) &&
        r.params[2].second == FieldValue(std::int64_t{4})) {
      saw_44 = true;
      EXPECT_EQ(r.optimizers[0], canonical_form(g4(0, 0, 4)));
      EXPECT_EQ(*r.optimum, Rational(wiener(g4(0, 0, 4))));
    }
  }
  EXPECT_TRUE(saw_44);
}

TEST(Verify, ClosedForms) {
  EXPECT_TRUE(check_g4_closed_form(10).pass);
  const CheckReport cp = check_cycle_vs_path(50);
  EXPECT_TRUE(cp.pass);
  const auto* strict = detail<std::vector<std::string>>(cp, "strict_k");
  ASSERT_NE(strict, nullptr);
  EXPECT_EQ(*strict, (std::vector<std::string>{"3", "5"}));
}

TEST(Verify, WMinusEcc) {
  for (int n = 4; n <= 7; ++n) {
    const CheckReport r = check_w_minus_ecc_min(n);
    EXPECT_TRUE(r.pass) << n;
  }
  for (int n = 4; n <= 11; ++n) {
    const CheckReport r = check_w_minus_ecc_tree_min(n);
    EXPECT_TRUE(r.pass) << n;
    EXPECT_EQ(r.optimizers.size(), 1u);
  }
  for (const auto& r : check_diameter_fixed_min(10)) EXPECT_TRUE(r.pass);
  const auto trees9 = tree_source(9);
  EXPECT_TRUE(check_w_minus_ecc_max(9, *trees9).pass);
}

TEST(Verify, Wsz) {
  const CheckReport r4 = check_wsz_conjecture(4);
  EXPECT_TRUE(r4.pass);
  EXPECT_EQ(*r4.optimum, Rational(64));
  EXPECT_EQ(*r4.margin, Rational(18));
  const CheckReport r3 = check_wsz_conjecture(3);
  EXPECT_TRUE(r3.pass);
  EXPECT_EQ(r3.optimizers.size(), 2u);
  EXPECT_TRUE(check_wsz_conjecture(7).pass);
}

TEST(Verify, ThreadCountDoesNotChangeReports) {
  for (int t : {1, 2, 3, 7}) {
    const ScanOptions opt{t};
    expect_same(check_wsz_conjecture(6, nullptr, {1}),
                check_wsz_conjecture(6, nullptr, opt));
    expect_same(check_wex_max(11, {1}), check_wex_max(11, opt));
    expect_same(check_chung(6, 1.5, nullptr, {1}),
                check_chung(6, 1.5, nullptr, opt));
    expect_same(check_wf_max_independence(6, 2, ConvexWeight::hyper(), nullptr, {1}),
                check_wf_max_independence(6, 2, ConvexWeight::hyper(), nullptr, opt));
  }
}

TEST(Verify, FileSourceSkipsOtherOrders) {
  const auto src = graph6_file_source(std::string(DISTIDX_TEST_DATA) + "/connected6.g6");
  const CheckReport a = check_wsz_conjecture(6, src.get());
  const CheckReport b = check_wsz_conjecture(6);
  EXPECT_EQ(a.size, b.size);
  EXPECT_EQ(a.optimum, b.optimum);
  EXPECT_EQ(a.optimizers, b.optimizers);
}
