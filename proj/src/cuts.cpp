#include "tuza/cuts.hpp"

#include <algorithm>
#include <numeric>

#include "tuza/rational.hpp"

namespace tuza {

namespace {

size_t at(int i) { return static_cast<size_t>(i); }

// Dense local copy of a (sub)multigraph used by the cut recursion. Local
// indices follow increasing original vertex id.
struct Dense {
  std::vector<std::vector<Weight>> m;

  int size() const { return static_cast<int>(m.size()); }
  Weight degree(int x) const {
    return std::accumulate(m[at(x)].begin(), m[at(x)].end(), Weight{0});
  }

  Dense induced(const std::vector<int>& keep) const {
    Dense d;
    d.m.assign(keep.size(), std::vector<Weight>(keep.size(), 0));
    for (size_t i = 0; i < keep.size(); ++i)
      for (size_t j = 0; j < keep.size(); ++j) d.m[i][j] = m[at(keep[i])][at(keep[j])];
    return d;
  }

  // Components of the graph with vertex `skip` removed (skip = -1 keeps all).
  std::vector<std::vector<int>> components(int skip) const {
    std::vector<int> comp(at(size()), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < size(); ++s) {
      if (s == skip || comp[at(s)] != -1) continue;
      int id = static_cast<int>(out.size());
      out.emplace_back();
      std::vector<int> stack{s};
      comp[at(s)] = id;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        out.back().push_back(x);
        for (int y = 0; y < size(); ++y) {
          if (y == skip || comp[at(y)] != -1 || m[at(x)][at(y)] == 0) continue;
          comp[at(y)] = id;
          stack.push_back(y);
        }
      }
      std::sort(out.back().begin(), out.back().end());
    }
    return out;
  }
};

std::vector<int> all_but(int n, int skip) {
  std::vector<int> v;
  for (int i = 0; i < n; ++i)
    if (i != skip) v.push_back(i);
  return v;
}

// Re-insert x next to a cut of G - x, on the side that cuts more of its edges.
std::vector<bool> add_back(const Dense& g, int x, const std::vector<bool>& rest_side) {
  std::vector<bool> side(at(g.size()));
  Weight cross_if_in = 0;
  Weight cross_if_out = 0;
  int k = 0;
  for (int y = 0; y < g.size(); ++y) {
    if (y == x) continue;
    side[at(y)] = rest_side[at(k++)];
    if (side[at(y)])
      cross_if_out += g.m[at(x)][at(y)];
    else
      cross_if_in += g.m[at(x)][at(y)];
  }
  side[at(x)] = cross_if_in >= cross_if_out;
  return side;
}

std::vector<bool> connected_cut(const Dense& g);

// x is a cut vertex; split off component `part` of G - x, cut C+x and G-C
// separately and glue them at x.
std::vector<bool> glue_at_cut_vertex(const Dense& g, int x, const std::vector<int>& part) {
  std::vector<int> first = part;
  first.push_back(x);
  std::sort(first.begin(), first.end());
  std::vector<int> second;
  for (int y = 0; y < g.size(); ++y)
    if (!std::binary_search(part.begin(), part.end(), y)) second.push_back(y);

  auto s1 = connected_cut(g.induced(first));
  auto s2 = connected_cut(g.induced(second));
  auto pos = [](const std::vector<int>& v, int y) {
    return static_cast<size_t>(std::lower_bound(v.begin(), v.end(), y) - v.begin());
  };
  bool flip = s1[pos(first, x)] != s2[pos(second, x)];
  std::vector<bool> side(at(g.size()));
  for (size_t i = 0; i < first.size(); ++i) side[at(first[i])] = s1[i] != flip;
  for (size_t i = 0; i < second.size(); ++i) side[at(second[i])] = s2[i];
  return side;
}

std::vector<bool> remove_vertex_and_recurse(const Dense& g, int x) {
  auto comps = g.components(x);
  if (comps.size() == 1) return add_back(g, x, connected_cut(g.induced(all_but(g.size(), x))));
  return glue_at_cut_vertex(g, x, comps.front());
}

std::vector<bool> connected_cut(const Dense& g) {
  const int n = g.size();
  if (n == 1) return {false};
  if (n == 2) return {true, false};

  for (int x = 0; x < n; ++x) {
    if (g.degree(x) % 2 == 0) continue;
    auto comps = g.components(x);
    if (comps.size() == 1) return remove_vertex_and_recurse(g, x);
    // Some component receives an odd number of x's edges.
    for (const auto& c : comps) {
      Weight d = 0;
      for (int y : c) d += g.m[at(x)][at(y)];
      if (d % 2 == 1) return glue_at_cut_vertex(g, x, c);
    }
  }

  bool all_even = true;
  for (int i = 0; i < n && all_even; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.m[at(i)][at(j)] % 2 != 0) {
        all_even = false;
        break;
      }
  if (all_even) {
    Dense half = g;
    for (auto& row : half.m)
      for (auto& w : row) w /= 2;
    return connected_cut(half);
  }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.m[at(i)][at(j)] % 2 != 0) return remove_vertex_and_recurse(g, i);
  return {};  // unreachable
}

Dense dense_of(const Multigraph& g, const std::vector<Vertex>& vertices) {
  Dense d;
  d.m.assign(vertices.size(), std::vector<Weight>(vertices.size(), 0));
  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = i + 1; j < vertices.size(); ++j) {
      auto e = g.find_edge(vertices[i], vertices[j]);
      if (e) d.m[i][j] = d.m[j][i] = g.weight(*e);
    }
  return d;
}

// Components over positive-weight edges.
std::vector<std::vector<Vertex>> positive_components(const Multigraph& g) {
  std::vector<bool> keep(at(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) keep[at(e)] = g.weight(e) > 0;
  return connected_components(g.edge_subgraph(keep));
}

}  // namespace

std::set<Vertex> EdgeCut::shore_set() const {
  std::set<Vertex> s;
  for (size_t i = 0; i < shore.size(); ++i)
    if (shore[i]) s.insert(static_cast<Vertex>(i));
  return s;
}

EdgeCut make_cut(const Multigraph& g, std::vector<bool> shore) {
  if (shore.size() != at(g.vertex_count())) throw GraphError("shore size mismatch");
  EdgeCut c;
  c.shore = std::move(shore);
  for (const auto& e : g.edges()) {
    if (e.w > 0 && c.shore[at(e.u)] != c.shore[at(e.v)]) {
      c.cut_edges.push_back(e.key());
      c.size += e.w;
    }
  }
  return c;
}

std::set<Vertex> independent_set_triangle_free(const Multigraph& h) {
  if (!is_triangle_free(h)) throw GraphError("independent_set_triangle_free: graph has a triangle");
  const long long v = h.vertex_count();
  std::set<Vertex> out;
  for (Vertex x = 0; x < h.vertex_count(); ++x) {
    auto d = static_cast<long long>(h.neighbors(x).size());
    if (d > 0 && 4 * d * d >= v) {
      out.insert(h.neighbors(x).begin(), h.neighbors(x).end());
      return out;
    }
  }
  std::vector<bool> gone(at(h.vertex_count()), false);
  for (Vertex x = 0; x < h.vertex_count(); ++x) {
    if (gone[at(x)]) continue;
    out.insert(x);
    gone[at(x)] = true;
    for (Vertex y : h.neighbors(x)) gone[at(y)] = true;
  }
  return out;
}

EdgeCut cut_connected(const Multigraph& g) {
  auto comps = positive_components(g);
  if (comps.size() != 1 || g.total_weight() == 0)
    throw GraphError("cut_connected: graph must be connected with at least one edge");
  std::vector<Vertex> all(at(g.vertex_count()));
  std::iota(all.begin(), all.end(), 0);
  return make_cut(g, connected_cut(dense_of(g, all)));
}

EdgeCut balanced_cut(const Multigraph& g, const std::vector<Vertex>& vertices) {
  std::vector<Vertex> vs = vertices;
  std::sort(vs.begin(), vs.end());
  std::vector<int> local(at(g.vertex_count()), -1);
  for (size_t i = 0; i < vs.size(); ++i) local[at(vs[i])] = static_cast<int>(i);

  struct LocalEdge {
    int a;
    int b;
    Weight w;
  };
  std::vector<LocalEdge> es;
  for (const auto& e : g.edges())
    if (e.w > 0 && local[at(e.u)] >= 0 && local[at(e.v)] >= 0)
      es.push_back({local[at(e.u)], local[at(e.v)], e.w});

  const long long v = static_cast<long long>(vs.size());
  const long long target = v / 2;
  std::vector<int> state(vs.size(), -1);  // -1 unplaced, 1 in W, 0 outside

  // Expected crossing weight when the unplaced vertices complete W uniformly.
  auto expectation = [&](long long placed_in, long long unplaced) {
    long long q = target - placed_in;
    Rational total;
    for (const auto& e : es) {
      int sa = state[at(e.a)];
      int sb = state[at(e.b)];
      Rational p;
      if (sa >= 0 && sb >= 0) {
        p = Rational(sa != sb ? 1 : 0);
      } else if (sa >= 0 || sb >= 0) {
        int known = sa >= 0 ? sa : sb;
        p = known == 1 ? Rational(unplaced - q, unplaced) : Rational(q, unplaced);
      } else {
        p = Rational(2 * q * (unplaced - q), unplaced * (unplaced - 1));
      }
      total += p * Rational(e.w);
    }
    return total;
  };

  long long placed_in = 0;
  for (size_t i = 0; i < vs.size(); ++i) {
    long long unplaced_after = v - static_cast<long long>(i) - 1;
    long long need = target - placed_in;
    bool can_in = need >= 1;
    bool can_out = unplaced_after >= need;
    bool choose_in = can_in;
    if (can_in && can_out) {
      state[i] = 1;
      Rational e_in = expectation(placed_in + 1, unplaced_after);
      state[i] = 0;
      Rational e_out = expectation(placed_in, unplaced_after);
      choose_in = e_in >= e_out;
    }
    state[i] = choose_in ? 1 : 0;
    if (choose_in) ++placed_in;
  }

  std::vector<bool> shore(at(g.vertex_count()), false);
  for (size_t i = 0; i < vs.size(); ++i) shore[at(vs[i])] = state[i] == 1;
  return make_cut(g, shore);
}

EdgeCut cut_large(const Multigraph& g) {
  if (g.total_weight() == 0) throw GraphError("cut_large: graph has no edges");
  std::vector<bool> shore(at(g.vertex_count()), false);
  for (const auto& comp : positive_components(g)) {
    if (comp.size() < 2) continue;
    Dense d = dense_of(g, comp);
    Weight e = 0;
    for (int i = 0; i < d.size(); ++i) e += d.degree(i);
    e /= 2;
    const auto v = static_cast<Weight>(comp.size());
    if (v * v >= 4 * e) {
      auto side = connected_cut(d);
      for (size_t i = 0; i < comp.size(); ++i) shore[at(comp[i])] = side[i];
    } else {
      auto c = balanced_cut(g, comp);
      for (Vertex x : comp) shore[at(x)] = c.shore[at(x)];
    }
  }
  return make_cut(g, shore);
}

}  // namespace tuza
