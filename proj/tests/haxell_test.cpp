#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tuza/generators.hpp"
#include "tuza/haxell.hpp"

namespace tuza {
namespace {

TEST(CopyGraph, ExpandsMultiplicities) {
  Multigraph g(3, {{0, 1, 2}, {0, 2, 1}, {1, 2, 3}});
  CopyGraph cg(g);
  EXPECT_EQ(cg.edge_count(), 6);
  EXPECT_EQ(cg.copies(EdgeKey(0, 1)).size(), 2u);
  EXPECT_EQ(cg.triangles().size(), 6u);
  EXPECT_TRUE(cg.copies(EdgeKey(0, 3)).empty());
}

TEST(MaxIndependentFamily, Examples) {
  SearchBudget budget(1'000'000);
  CopyGraph k4(complete_graph(4));
  EXPECT_EQ(max_independent_family(k4.triangles(), {}, budget).size(), 1u);

  CopyGraph w5(wheel_graph(5));
  EXPECT_EQ(max_independent_family(w5.triangles(), {}, budget).size(), 2u);

  // Type-(B,1) triangles against B = {012} in K4.
  auto all = k4.triangles();
  Family b{all[0]};
  std::vector<CopyTriangle> type1;
  auto eb = family_edges(b);
  for (const auto& t : all) {
    int k = 0;
    for (int e : t) k += eb.count(e) ? 1 : 0;
    if (k == 1) type1.push_back(t);
  }
  EXPECT_EQ(type1.size(), 3u);
  EXPECT_EQ(max_independent_family(type1, {}, budget).size(), 1u);
}

TEST(MaxIndependentFamily, MatchesPackingNumber) {
  SearchBudget budget(50'000'000);
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = gen_random(6, 10, 2, rng());
    CopyGraph cg(g);
    auto f = max_independent_family(cg.triangles(), {}, budget);
    EXPECT_TRUE(is_independent(f));
    EXPECT_EQ(static_cast<Weight>(f.size()), oracle::nu(g));
  }
}

TEST(MaxIndependentFamily, BudgetIsEnforced) {
  SearchBudget tiny(3);
  CopyGraph k5(complete_graph(5));
  EXPECT_THROW(max_independent_family(k5.triangles(), {}, tiny), BudgetExceeded);
}

TEST(BuildState, TriangleFree) {
  auto st = build_state(cycle_graph(5));
  EXPECT_EQ(st.nu, 0);
  EXPECT_TRUE(st.B.empty());
  EXPECT_TRUE(st.B1.empty());
  EXPECT_EQ(st.gamma, Rational(0));
}

TEST(BuildState, K4) {
  auto st = build_state(complete_graph(4));
  EXPECT_EQ(st.nu, 1);
  EXPECT_EQ(st.B.size(), 1u);
  EXPECT_EQ(st.B1.size(), 1u);
  EXPECT_EQ(st.gamma, Rational(1));
  int removed = 0;
  for (bool b : st.in_gprime) removed += b ? 0 : 1;
  EXPECT_EQ(removed, 3);
}

TEST(BuildState, W5) {
  auto st = build_state(wheel_graph(5));
  EXPECT_EQ(st.nu, 2);
  EXPECT_EQ(st.B.size(), 2u);
  EXPECT_TRUE(is_independent(st.B1));
  EXPECT_LE(st.alpha + st.eta, Rational(1) - st.gamma);
}

TEST(Candidates, K4) {
  auto k4 = complete_graph(4);
  auto r = haxell_construct(k4);
  ASSERT_EQ(r.candidates.size(), 5u);
  EXPECT_EQ(r.candidates[0].label, "C_a");
  EXPECT_LE(r.candidates[0].size, 2);
  EXPECT_EQ(r.certificate.weight, 2);
  for (const auto& c : r.candidates) {
    EXPECT_TRUE(c.within_bound) << c.label;
    EXPECT_TRUE(verify_transversal(k4, c.certificate));
  }
}

TEST(Candidates, TriangleFreeAllEmpty) {
  auto r = haxell_construct(petersen_graph());
  for (const auto& c : r.candidates) EXPECT_TRUE(c.certificate.edges.empty());
  EXPECT_TRUE(transversal_292(petersen_graph()).edges.empty());
}

TEST(Candidates, K5AndW5) {
  auto k5 = complete_graph(5);
  auto t = transversal_292(k5);
  EXPECT_TRUE(verify_transversal(k5, t));
  EXPECT_LE(t.weight, 5);
  EXPECT_GE(t.weight, 4);

  auto w5 = wheel_graph(5);
  auto r = haxell_construct(w5);
  for (const auto& c : r.candidates) EXPECT_TRUE(c.within_bound) << c.label;
  EXPECT_LE(r.certificate.weight, 5);
}

TEST(Candidates, SmallGraphsRespectBounds) {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& g : oracle::all_graphs(n)) {
      auto r = haxell_construct(g);
      Weight tau = oracle::tau(g);
      for (const auto& c : r.candidates) {
        ASSERT_TRUE(c.within_bound) << c.label;
        ASSERT_GE(c.certificate.weight, tau);
      }
      ASSERT_LE(Rational(25 * r.certificate.weight), Rational(73 * r.state.nu));
    }
  }
}

// Parallel copies give rung sets with two or more edges, which exercises the
// I / switch machinery.
TEST(Candidates, MultigraphsRespectBounds) {
  std::mt19937_64 rng(89);
  std::vector<Multigraph> corpus{complete_graph(4, 2), complete_graph(4, 3),
                                 Multigraph(4, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {1, 3, 1},
                                                {2, 3, 1}, {0, 3, 2}})};
  for (int trial = 0; trial < 30; ++trial) corpus.push_back(gen_random(5, 7, 2, rng()));
  for (const auto& g : corpus) {
    auto r = haxell_construct(g);
    EXPECT_EQ(r.state.nu, oracle::nu(g));
    Weight tau = oracle::tau(g);
    for (const auto& c : r.candidates) {
      EXPECT_TRUE(c.within_bound) << c.label;
      EXPECT_TRUE(verify_transversal(g, c.certificate));
      EXPECT_GE(c.certificate.weight, tau);
      EXPECT_LE(c.certificate.weight, c.size);
    }
    EXPECT_LE(Rational(25 * r.certificate.weight), Rational(73 * r.state.nu));
    EXPECT_LE(r.state.eta_p, Rational(2) * r.state.eta);
  }
}

TEST(Candidates, RungFamiliesOccurAndKeepBounds) {
  std::mt19937_64 rng(89);
  int with_i = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto g = gen_random(5 + trial % 2, 8, 3, rng());
    auto r = haxell_construct(g);
    with_i += r.state.I.empty() ? 0 : 1;
    for (const auto& [t, f] : r.state.fmap) EXPECT_NE(f[0], f[1]);
    for (const auto& c : r.candidates) ASSERT_TRUE(c.within_bound) << c.label;
  }
  EXPECT_GT(with_i, 0);

  Multigraph k_case(6, {{0, 1, 2}, {0, 2, 2}, {0, 4, 1}, {0, 5, 1}, {1, 2, 2}, {1, 4, 1},
                        {1, 5, 2}, {2, 4, 2}, {2, 5, 2}, {3, 5, 2}, {4, 5, 1}});
  auto r = haxell_construct(k_case);
  EXPECT_FALSE(r.state.K.empty());
  for (const auto& c : r.candidates) EXPECT_TRUE(c.within_bound) << c.label;
  EXPECT_GE(r.certificate.weight, oracle::tau(k_case));
}

}  // namespace
}  // namespace tuza
