#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "tuza/exact.hpp"
#include "tuza/generators.hpp"

namespace tuza {
namespace {

TEST(NuExact, Examples) {
  auto k4 = nu_exact(complete_graph(4));
  EXPECT_EQ(k4.value, 1);
  EXPECT_TRUE(verify_packing(complete_graph(4), k4.certificate));

  EXPECT_EQ(nu_exact(wheel_graph(5)).value, 2);
  EXPECT_EQ(oracle::nu(wheel_graph(5)), 2);

  auto k4w2 = complete_graph(4, 2);
  auto r = nu_exact(k4w2);
  EXPECT_EQ(r.value, 4);
  EXPECT_EQ(oracle::nu(k4w2), 4);
  EXPECT_TRUE(verify_packing(k4w2, r.certificate));
  EXPECT_EQ(r.certificate.value(), 4);

  auto empty = nu_exact(cycle_graph(5));
  EXPECT_EQ(empty.value, 0);
  EXPECT_TRUE(empty.certificate.multiplicity.empty());
}

TEST(TauExact, Examples) {
  auto k4 = complete_graph(4);
  auto r = tau_exact(k4);
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(oracle::tau(k4), 2);
  EXPECT_TRUE(verify_transversal(k4, r.certificate));

  EXPECT_EQ(tau_exact(complete_graph(5)).value, 4);
  EXPECT_EQ(oracle::tau(complete_graph(5)), 4);
  EXPECT_EQ(tau_exact(wheel_graph(5)).value, 3);
  EXPECT_EQ(oracle::tau(wheel_graph(5)), 3);
  EXPECT_EQ(tau_exact(cycle_graph(5)).value, 0);
}

TEST(TauExact, ZeroWeightEdgesAreFree) {
  Multigraph g(3, {{0, 1, 0}, {0, 2, 5}, {1, 2, 5}});
  auto r = tau_exact(g);
  EXPECT_EQ(r.value, 0);
  EXPECT_TRUE(verify_transversal(g, r.certificate));
}

TEST(SolversAgreeWithEnumeration, AllGraphsUpToFiveVertices) {
  std::mt19937_64 rng(17);
  for (int n = 3; n <= 5; ++n) {
    for (const auto& base : oracle::all_graphs(n)) {
      std::vector<Weight> ws(static_cast<size_t>(base.edge_count()));
      std::uniform_int_distribution<Weight> d(0, 2);
      for (auto& w : ws) w = d(rng);
      for (const auto& g : {base, base.with_weights(ws)}) {
        auto nu = nu_exact(g);
        auto tau = tau_exact(g);
        ASSERT_EQ(nu.value, oracle::nu(g));
        ASSERT_EQ(tau.value, oracle::tau(g));
        ASSERT_TRUE(verify_packing(g, nu.certificate));
        ASSERT_TRUE(verify_transversal(g, tau.certificate));
        ASSERT_EQ(nu.value, nu_exact(g, {.use_lp_bound = false}).value);
        ASSERT_EQ(tau.value, tau_exact(g, {.use_lp_bound = false}).value);
      }
    }
  }
}

TEST(SolversAgreeWithEnumeration, UniformDoubleWeights) {
  for (int n = 3; n <= 5; n += 2) {
    for (const auto& base : oracle::all_graphs(n)) {
      if (base.edge_count() < 6) continue;
      std::vector<Weight> ws(static_cast<size_t>(base.edge_count()), 2);
      auto g = base.with_weights(ws);
      ASSERT_EQ(nu_exact(g).value, oracle::nu(g));
      ASSERT_EQ(tau_exact(g).value, oracle::tau(g));
    }
  }
}

TEST(LpOptimal, Examples) {
  EXPECT_EQ(lp_optimal(complete_graph(4)).value, Rational(2));
  EXPECT_EQ(lp_optimal(gen_gk(1).graph).value, Rational(5, 2));
  EXPECT_EQ(lp_optimal(gen_gk(2).graph).value, Rational(105, 4));
  auto c5 = lp_optimal(cycle_graph(5));
  EXPECT_EQ(c5.value, Rational(0));
  EXPECT_TRUE(c5.packing.values.empty());
  EXPECT_TRUE(c5.transversal.values.empty());
}

TEST(LpOptimal, StrongDualityAndDeterminism) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = gen_random(7, 15, 3, rng());
    auto s = lp_optimal(g);
    EXPECT_TRUE(is_fractional_packing(g, s.packing));
    EXPECT_TRUE(is_fractional_transversal(g, s.transversal));
    EXPECT_EQ(s.packing.value(), s.transversal.value(g));
    EXPECT_EQ(s.value, s.packing.value());
    auto again = lp_optimal(g);
    EXPECT_EQ(again.packing.values, s.packing.values);
    EXPECT_EQ(again.transversal.values, s.transversal.values);
  }
}

TEST(InequalityChain, RandomMultigraphs) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 6 + trial % 3;
    auto g = gen_random(n, std::min(n * (n - 1) / 2, 10 + trial % 7), 3, rng());
    Rational star = lp_optimal(g).value;
    Weight nu = nu_exact(g).value;
    Weight tau = tau_exact(g).value;
    EXPECT_GE(Rational(tau), star);
    EXPECT_GE(star, Rational(nu));
    EXPECT_GE(Rational(2 * nu), star);
  }
}

TEST(TightSets, SingleTriangle) {
  auto k3 = complete_graph(3);
  LPSolution s;
  s.packing.values[Triangle(0, 1, 2)] = Rational(1);
  for (const auto& k : Triangle(0, 1, 2).edge_keys()) s.transversal.values[k] = Rational(1, 3);
  s.value = Rational(1);
  auto tight = tight_sets(k3, s);
  EXPECT_EQ(tight.edges.size(), 3u);
  EXPECT_EQ(tight.triangles.size(), 1u);
}

TEST(TightSets, FiveWheel) {
  auto w5 = wheel_graph(5);
  LPSolution s;
  for (const auto& t : enumerate_triangles(w5)) s.packing.values[t] = Rational(1, 2);
  for (Vertex i = 1; i <= 5; ++i) s.transversal.values[EdgeKey(0, i)] = Rational(1, 2);
  s.value = Rational(5, 2);
  auto tight = tight_sets(w5, s);
  std::set<EdgeKey> spokes;
  for (Vertex i = 1; i <= 5; ++i) spokes.emplace(0, i);
  EXPECT_EQ(tight.edges, spokes);
  EXPECT_EQ(tight.triangles.size(), 5u);
}

TEST(TightSets, TriangleFreeAndErrors) {
  auto c5 = cycle_graph(5);
  auto tight = tight_sets(c5, lp_optimal(c5));
  // Every C5 edge has zero load, which is below capacity 1.
  EXPECT_TRUE(tight.edges.empty());
  EXPECT_TRUE(tight.triangles.empty());

  auto k3 = complete_graph(3);
  LPSolution bad;
  bad.packing.values[Triangle(0, 1, 2)] = Rational(1, 2);
  bad.transversal.values[EdgeKey(0, 1)] = Rational(1, 2);
  bad.transversal.values[EdgeKey(0, 2)] = Rational(1, 2);
  bad.value = Rational(1, 2);
  EXPECT_THROW(tight_sets(k3, bad), std::logic_error);  // values differ
}

TEST(TightSets, ComplementarySlacknessOnSimplexOutput) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = gen_random(7, 14, 2, rng());
    auto s = lp_optimal(g);
    EXPECT_NO_THROW(tight_sets(g, s));
  }
}

}  // namespace
}  // namespace tuza
