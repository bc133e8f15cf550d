#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "tuza/exact.hpp"
#include "tuza/generators.hpp"

namespace tuza {
namespace {

Rational pow2(int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r *= Rational(2);
  return r;
}

TEST(GenGk, SizesAndTerminals) {
  auto g0 = gen_gk(0);
  EXPECT_EQ(g0.graph.vertex_count(), 2);
  EXPECT_EQ(g0.graph.edge_count(), 1);
  EXPECT_TRUE(g0.height.empty());
  EXPECT_EQ(g0.terminal_edge(), EdgeKey(0, 1));

  auto g1 = gen_gk(1);
  EXPECT_EQ(g1.graph.vertex_count(), 6);
  EXPECT_EQ(g1.graph.edge_count(), 10);
  EXPECT_EQ(g1.graph, wheel_graph(5));
  EXPECT_EQ(g1.height.size(), 5u);
  for (const auto& [t, h] : g1.height) EXPECT_EQ(h, 1);
  EXPECT_EQ(g1.terminal_edge(), EdgeKey(1, 2));

  auto g2 = gen_gk(2);
  EXPECT_EQ(g2.graph.vertex_count(), 46);
  EXPECT_EQ(g2.graph.edge_count(), 100);
  EXPECT_EQ(g2.height.size(), 55u);
  int h1 = 0, h2 = 0;
  for (const auto& [t, h] : g2.height) (h == 1 ? h1 : h2)++;
  EXPECT_EQ(h1, 50);
  EXPECT_EQ(h2, 5);
  auto ts = enumerate_triangles(g2.graph);
  for (const auto& t : ts) EXPECT_TRUE(g2.height.count(t));

  auto g3 = gen_gk(3);
  EXPECT_EQ(g3.graph.edge_count(), 1000);
  EXPECT_EQ(enumerate_triangles(g3.graph).size(), 555u);

  EXPECT_THROW(gen_gk(-1), std::invalid_argument);
  EXPECT_THROW(gen_gk(kMaxRecursiveLevel + 1), std::invalid_argument);
}

TEST(GenGk, Deterministic) { EXPECT_EQ(gen_gk(2).graph, gen_gk(2).graph); }

TEST(FractionalPackingFk, ValuesAndFeasibility) {
  EXPECT_EQ(fractional_packing_fk(1).value(), Rational(5, 2));
  EXPECT_EQ(fractional_packing_fk(2).value(), Rational(105, 4));
  for (int k = 1; k <= 3; ++k) {
    auto f = fractional_packing_fk(k);
    EXPECT_TRUE(is_fractional_packing(gen_gk(k).graph, f));
    EXPECT_EQ(f.value(), gk_fractional_optimum(k));
  }
  auto w5 = wheel_graph(5);
  auto loads = edge_loads(w5, fractional_packing_fk(1));
  for (EdgeId e = 0; e < w5.edge_count(); ++e) {
    bool spoke = w5.edge(e).u == 0;
    EXPECT_EQ(loads[static_cast<size_t>(e)], spoke ? Rational(1) : Rational(1, 2));
  }
  EXPECT_THROW(fractional_packing_fk(0), std::invalid_argument);
}

// Triangles of height <= j load every edge by at most 1 and the terminal edge
// of each copy of G_j by exactly 1 - 2^-j.
TEST(FractionalPackingFk, LayeredLoadInvariant) {
  for (int k = 1; k <= 3; ++k) {
    auto gk = gen_gk(k);
    for (int j = 1; j <= k; ++j) {
      TriangleAssignment partial;
      for (const auto& [t, h] : gk.height)
        if (h <= j) partial.values.emplace(t, Rational(1) / pow2(h));
      auto loads = edge_loads(gk.graph, partial);
      for (const auto& l : loads) EXPECT_LE(l, Rational(1));
      for (const auto& [level, e] : gk.copies)
        if (level == j)
          EXPECT_EQ(loads[static_cast<size_t>(gk.graph.edge_id(e))],
                    Rational(1) - Rational(1) / pow2(j));
    }
  }
}

TEST(FractionalTransversalGka, Examples) {
  auto g0 = fractional_transversal_gka(0, Rational(1, 3));
  ASSERT_EQ(g0.values.size(), 1u);
  EXPECT_EQ(g0.at(EdgeKey(0, 1)), Rational(1, 3));

  EXPECT_EQ(fractional_transversal_gka(1, Rational(0)).value(gen_gk(1).graph), Rational(5, 2));
  EXPECT_EQ(fractional_transversal_gka(1, Rational(1)).value(gen_gk(1).graph), Rational(3));
  EXPECT_THROW(fractional_transversal_gka(1, Rational(2)), std::invalid_argument);
}

// The wheel-level layout: every wheel triangle sums to exactly one and the
// values form the multiset {a, 0 x4, (1-a)/2 x3, (1+a)/2 x2}.
TEST(FractionalTransversalGka, WheelLayoutConstraints) {
  for (const Rational& a : {Rational(0), Rational(1, 3), Rational(1, 2), Rational(1)}) {
    auto g = fractional_transversal_gka(1, a);
    auto w5 = gen_gk(1).graph;
    for (const auto& t : enumerate_triangles(w5)) {
      Rational s;
      for (const auto& k : t.edge_keys()) s += g.at(k);
      EXPECT_EQ(s, Rational(1));
    }
    std::vector<Rational> got;
    for (const auto& e : w5.edges()) got.push_back(g.at(e.key()));
    std::vector<Rational> want{a, 0, 0, 0, 0};
    for (int i = 0; i < 3; ++i) want.push_back((Rational(1) - a) / Rational(2));
    for (int i = 0; i < 2; ++i) want.push_back((Rational(1) + a) / Rational(2));
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want);
    EXPECT_EQ(g.at(EdgeKey(1, 2)), a);
  }
}

TEST(FractionalTransversalGka, ValueFormulaAndTightTopTriangles) {
  for (int k = 1; k <= 3; ++k) {
    auto gk = gen_gk(k);
    for (const Rational& a : {Rational(0), Rational(1, 4), Rational(1)}) {
      auto g = fractional_transversal_gka(k, a);
      EXPECT_TRUE(is_fractional_transversal(gk.graph, g));
      EXPECT_EQ(g.value(gk.graph), gk_fractional_optimum(k) + a / pow2(k));
      EXPECT_EQ(g.at(gk.terminal_edge()), a);
      for (const auto& [t, h] : gk.height) {
        if (h != k) continue;
        Rational s;
        for (const auto& e : t.edge_keys()) s += g.at(e);
        EXPECT_EQ(s, Rational(1));
      }
    }
  }
}

TEST(GkOptimum, Formula) {
  EXPECT_EQ(gk_fractional_optimum(0), Rational(0));
  EXPECT_EQ(gk_fractional_optimum(1), Rational(5, 2));
  EXPECT_EQ(gk_fractional_optimum(2), Rational(105, 4));
  EXPECT_EQ(gk_fractional_optimum(3), Rational(5 * 421, 8));
}

TEST(GenApex, Examples) {
  auto w = gen_apex(cycle_graph(5));
  EXPECT_EQ(w.vertex_count(), 6);
  EXPECT_EQ(w.edge_count(), 10);
  for (Vertex x = 0; x < 5; ++x) EXPECT_TRUE(w.adjacent(x, 5));
  EXPECT_EQ(enumerate_triangles(w).size(), 5u);

  auto k3 = gen_apex(Multigraph(2, {{0, 1, 1}}));
  EXPECT_EQ(k3, complete_graph(3));

  auto p = gen_apex(petersen_graph());
  EXPECT_EQ(p.vertex_count(), 11);
  EXPECT_EQ(tau_exact(p).value, 10 - oracle::independence_number(petersen_graph()));
  EXPECT_EQ(tau_exact(p).value, 6);
  EXPECT_LE(lp_optimal(p).value, Rational(5));

  EXPECT_THROW(gen_apex(complete_graph(3)), GraphError);
}

TEST(GenApex, TauEqualsOrderMinusIndependence) {
  std::vector<Multigraph> bases{cycle_graph(4), cycle_graph(5), cycle_graph(7), petersen_graph(),
                                Multigraph(4, {{0, 1, 1}, {2, 3, 1}})};
  std::mt19937_64 rng(61);
  for (int i = 0; i < 10; ++i) {
    auto h = gen_random(7, 8, 1, rng());
    if (is_triangle_free(h)) bases.push_back(h);
  }
  for (const auto& h : bases) {
    auto g = gen_apex(h);
    EXPECT_EQ(tau_exact(g).value, h.vertex_count() - oracle::independence_number(h));
    EXPECT_LE(Rational(2) * lp_optimal(g).value, Rational(h.vertex_count()));
  }
}

TEST(Named, Factories) {
  auto k4 = gen_named("K", 4);
  EXPECT_EQ(k4.vertex_count(), 4);
  EXPECT_EQ(k4.edge_count(), 6);
  EXPECT_EQ(gen_named("wheel", 5), wheel_graph(5));
  EXPECT_EQ(petersen_graph().edge_count(), 15);
  EXPECT_TRUE(is_triangle_free(petersen_graph()));
  EXPECT_EQ(octahedron_graph().edge_count(), 12);
  EXPECT_EQ(enumerate_triangles(octahedron_graph()).size(), 8u);
  auto st = stacked_triangulation(10, 3);
  EXPECT_EQ(st.edge_count(), 3 * 10 - 6);
  EXPECT_THROW(gen_named("nope"), std::invalid_argument);
}

TEST(Random, Reproducible) {
  EXPECT_EQ(gen_random(6, 10, 3, 1), gen_random(6, 10, 3, 1));
  auto g = gen_random(6, 10, 3, 1);
  EXPECT_EQ(g.edge_count(), 10);
  for (const auto& e : g.edges()) {
    EXPECT_GE(e.w, 1);
    EXPECT_LE(e.w, 3);
  }
  EXPECT_THROW(gen_random(3, 4, 1, 1), std::invalid_argument);
}

}  // namespace
}  // namespace tuza
