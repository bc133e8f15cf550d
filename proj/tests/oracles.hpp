#pragma once

// Brute-force reference computations used only by the tests. None of these
// share code paths with the library solvers beyond the graph container.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "tuza/multigraph.hpp"

namespace tuza::oracle {

// Triangles by checking all vertex triples.
inline std::vector<Triangle> triangles(const Multigraph& g) {
  std::vector<Triangle> out;
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c)) out.emplace_back(a, b, c);
  return out;
}

// max sum x_t subject to per-edge capacities, by full enumeration.
inline Weight nu(const Multigraph& g) {
  auto ts = triangles(g);
  std::vector<Weight> cap(static_cast<size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) cap[static_cast<size_t>(e)] = g.weight(e);
  Weight best = 0;
  std::function<void(size_t, Weight)> rec = [&](size_t i, Weight val) {
    if (i == ts.size()) {
      best = std::max(best, val);
      return;
    }
    auto keys = ts[i].edge_keys();
    Weight room = cap[static_cast<size_t>(g.edge_id(keys[0]))];
    for (const auto& k : keys) room = std::min(room, cap[static_cast<size_t>(g.edge_id(k))]);
    for (Weight x = 0; x <= room; ++x) {
      for (const auto& k : keys) cap[static_cast<size_t>(g.edge_id(k))] -= x;
      rec(i + 1, val + x);
      for (const auto& k : keys) cap[static_cast<size_t>(g.edge_id(k))] += x;
    }
  };
  rec(0, 0);
  return best;
}

// min weight of an edge subset meeting every triangle, over all 2^m subsets.
inline Weight tau(const Multigraph& g) {
  auto ts = triangles(g);
  const int m = g.edge_count();
  Weight best = g.total_weight();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Weight w = 0;
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) w += g.weight(e);
    if (w >= best) continue;
    bool ok = true;
    for (const auto& t : ts) {
      bool hit = false;
      for (const auto& k : t.edge_keys()) hit = hit || (mask >> g.edge_id(k) & 1);
      if (!hit) {
        ok = false;
        break;
      }
    }
    if (ok) best = w;
  }
  return best;
}

inline Weight max_cut(const Multigraph& g) {
  const int n = g.vertex_count();
  Weight best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Weight s = 0;
    for (const auto& e : g.edges())
      if ((mask >> e.u & 1) != (mask >> e.v & 1)) s += e.w;
    best = std::max(best, s);
  }
  return best;
}

inline int independence_number(const Multigraph& g) {
  const int n = g.vertex_count();
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (const auto& e : g.edges())
      if ((mask >> e.u & 1) && (mask >> e.v & 1)) ok = false;
    if (ok) best = std::max(best, __builtin_popcountll(mask));
  }
  return best;
}

// Every simple graph on n labelled vertices, as edge masks over pairs.
inline std::vector<Multigraph> all_graphs(int n) {
  std::vector<EdgeKey> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::vector<Multigraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Edge> es;
    for (size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) es.push_back(Edge{pairs[i].u, pairs[i].v, 1});
    out.emplace_back(n, es);
  }
  return out;
}

// Connected multigraph: a random spanning tree plus extra random pairs.
inline Multigraph random_connected(std::mt19937_64& rng, int n, int extra, Weight max_mult) {
  std::vector<Edge> es;
  std::set<EdgeKey> seen;
  std::uniform_int_distribution<Weight> mult(1, max_mult);
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    int p = parent(rng);
    seen.emplace(p, v);
    es.push_back(Edge{p, v, mult(rng)});
  }
  if (n >= 2) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < extra; ++i) {
      int a = pick(rng);
      int b = pick(rng);
      if (a != b && seen.emplace(a, b).second) es.push_back(Edge{a, b, mult(rng)});
    }
  }
  return Multigraph(n, es);
}

}  // namespace tuza::oracle
