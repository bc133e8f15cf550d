#include "tuza/multigraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tuza {

Multigraph::Multigraph(int n) : Multigraph(n, std::span<const Edge>{}) {}

Multigraph::Multigraph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw GraphError("negative vertex count");
  std::map<EdgeKey, Weight> merged;
  for (const auto& e : edges) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
    if (e.w < 0) throw GraphError("negative weight on " + e.key().str());
    merged[e.key()] += e.w;
  }
  edges_.reserve(merged.size());
  adj_.assign(static_cast<size_t>(n), {});
  for (const auto& [k, w] : merged) {
    auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(Edge{k.u, k.v, w});
    index_.emplace(pack(k.u, k.v), id);
    adj_[static_cast<size_t>(k.u)].push_back(k.v);
    adj_[static_cast<size_t>(k.v)].push_back(k.u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void Multigraph::check_vertex(Vertex x) const {
  if (x < 0 || x >= n_) throw GraphError("vertex id " + std::to_string(x) + " out of range");
}

std::uint64_t Multigraph::pack(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

Weight Multigraph::total_weight() const {
  Weight s = 0;
  for (const auto& e : edges_) s += e.w;
  return s;
}

std::optional<EdgeId> Multigraph::find_edge(Vertex a, Vertex b) const {
  if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) return std::nullopt;
  auto it = index_.find(pack(a, b));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

EdgeId Multigraph::edge_id(Vertex a, Vertex b) const {
  auto id = find_edge(a, b);
  if (!id) throw GraphError("no edge " + EdgeKey(a, b).str());
  return *id;
}

Weight Multigraph::degree(Vertex x) const {
  Weight d = 0;
  for (Vertex y : neighbors(x)) d += edges_[static_cast<size_t>(*find_edge(x, y))].w;
  return d;
}

Multigraph Multigraph::with_weights(std::span<const Weight> weights) const {
  if (weights.size() != edges_.size()) throw GraphError("weight vector size mismatch");
  std::vector<Edge> es = edges_;
  for (size_t i = 0; i < es.size(); ++i) es[i].w = weights[i];
  return Multigraph(n_, es);
}

Multigraph Multigraph::edge_subgraph(const std::vector<bool>& keep) const {
  if (keep.size() != edges_.size()) throw GraphError("edge mask size mismatch");
  std::vector<Edge> es;
  for (size_t i = 0; i < edges_.size(); ++i)
    if (keep[i]) es.push_back(edges_[i]);
  return Multigraph(n_, es);
}

Triangle::Triangle(Vertex a, Vertex b, Vertex c) : v{a, b, c} {
  std::sort(v.begin(), v.end());
  if (v[0] == v[1] || v[1] == v[2]) throw GraphError("degenerate triangle");
}

std::string Triangle::str() const {
  return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) +
         ")";
}

std::vector<Triangle> enumerate_triangles(const Multigraph& g) {
  std::vector<Triangle> out;
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    const auto& na = g.neighbors(a);
    for (Vertex b : na) {
      if (b <= a) continue;
      const auto& nb = g.neighbors(b);
      // Common neighbours c > b.
      auto ia = std::upper_bound(na.begin(), na.end(), b);
      auto ib = std::upper_bound(nb.begin(), nb.end(), b);
      while (ia != na.end() && ib != nb.end()) {
        if (*ia < *ib) {
          ++ia;
        } else if (*ib < *ia) {
          ++ib;
        } else {
          out.emplace_back(a, b, *ia);
          ++ia;
          ++ib;
        }
      }
    }
  }
  return out;
}

bool is_triangle_free(const Multigraph& g) { return enumerate_triangles(g).empty(); }

int Incidence::at(EdgeId e, int t) const {
  const auto& te = triangle_edges.at(static_cast<size_t>(t));
  return std::find(te.begin(), te.end(), e) != te.end() ? 1 : 0;
}

Incidence incidence(const Multigraph& g) {
  Incidence inc;
  inc.triangles = enumerate_triangles(g);
  inc.edge_triangles.assign(static_cast<size_t>(g.edge_count()), {});
  inc.triangle_edges.reserve(inc.triangles.size());
  for (size_t t = 0; t < inc.triangles.size(); ++t) {
    std::array<EdgeId, 3> ids{};
    auto keys = inc.triangles[t].edge_keys();
    for (int i = 0; i < 3; ++i) {
      ids[static_cast<size_t>(i)] = g.edge_id(keys[static_cast<size_t>(i)]);
      inc.edge_triangles[static_cast<size_t>(ids[static_cast<size_t>(i)])].push_back(
          static_cast<int>(t));
    }
    inc.triangle_edges.push_back(ids);
  }
  return inc;
}

std::vector<std::vector<Vertex>> connected_components(const Multigraph& g) {
  std::vector<int> comp(static_cast<size_t>(g.vertex_count()), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (comp[static_cast<size_t>(s)] != -1) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<Vertex> stack{s};
    comp[static_cast<size_t>(s)] = id;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      out.back().push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (comp[static_cast<size_t>(y)] == -1) {
          comp[static_cast<size_t>(y)] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

}  // namespace tuza
