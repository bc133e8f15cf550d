#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tuza {

using Vertex = int;
using EdgeId = int;
using Weight = long long;

// Unordered vertex pair, stored with u < v.
struct EdgeKey {
  Vertex u = 0;
  Vertex v = 0;

  EdgeKey() = default;
  EdgeKey(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
  std::string str() const { return "{" + std::to_string(u) + "," + std::to_string(v) + "}"; }
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Weight w = 1;

  EdgeKey key() const { return EdgeKey(u, v); }
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Edge-weighted simple graph; the weight of a pair is its multiplicity in the
// corresponding multigraph. Edges are kept in canonical (u, v) order and EdgeId
// indexes that order. Immutable after construction.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int n);
  // Entries for the same unordered pair are merged by summing weights.
  Multigraph(int n, std::span<const Edge> edges);
  Multigraph(int n, std::initializer_list<Edge> edges)
      : Multigraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(static_cast<size_t>(id)); }
  Weight weight(EdgeId id) const { return edge(id).w; }
  Weight total_weight() const;

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
  EdgeId edge_id(Vertex a, Vertex b) const;  // throws GraphError if absent
  EdgeId edge_id(const EdgeKey& k) const { return edge_id(k.u, k.v); }
  bool adjacent(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }

  // Sorted distinct neighbours.
  const std::vector<Vertex>& neighbors(Vertex x) const { return adj_.at(static_cast<size_t>(x)); }
  // Number of incident edges counted with multiplicity.
  Weight degree(Vertex x) const;

  // New graph with the given per-edge weights (same pairs, same ids).
  Multigraph with_weights(std::span<const Weight> weights) const;
  // New graph keeping only edges whose id satisfies keep[id].
  Multigraph edge_subgraph(const std::vector<bool>& keep) const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) return false;
    for (size_t i = 0; i < a.edges_.size(); ++i) {
      const auto& x = a.edges_[i];
      const auto& y = b.edges_[i];
      if (x.u != y.u || x.v != y.v || x.w != y.w) return false;
    }
    return true;
  }

 private:
  void check_vertex(Vertex x) const;
  std::uint64_t pack(Vertex a, Vertex b) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::unordered_map<std::uint64_t, EdgeId> index_;
};

// Sorted vertex triple a < b < c; parallel edges never create distinct triangles.
struct Triangle {
  std::array<Vertex, 3> v{};

  Triangle() = default;
  Triangle(Vertex a, Vertex b, Vertex c);

  // Pairs in canonical order: ab, ac, bc.
  std::array<EdgeKey, 3> edge_keys() const {
    return {EdgeKey(v[0], v[1]), EdgeKey(v[0], v[2]), EdgeKey(v[1], v[2])};
  }
  bool contains(Vertex x) const { return v[0] == x || v[1] == x || v[2] == x; }
  bool contains(const EdgeKey& e) const { return contains(e.u) && contains(e.v); }

  friend auto operator<=>(const Triangle&, const Triangle&) = default;
  std::string str() const;
};

std::vector<Triangle> enumerate_triangles(const Multigraph& g);

bool is_triangle_free(const Multigraph& g);

// Sparse edge-triangle incidence: rows are edges (EdgeId), columns follow the
// canonical triangle order of enumerate_triangles.
struct Incidence {
  std::vector<Triangle> triangles;
  std::vector<std::array<EdgeId, 3>> triangle_edges;  // column -> its three rows
  std::vector<std::vector<int>> edge_triangles;       // row -> columns containing it

  int rows() const { return static_cast<int>(edge_triangles.size()); }
  int cols() const { return static_cast<int>(triangles.size()); }
  int at(EdgeId e, int t) const;
};

Incidence incidence(const Multigraph& g);

// Connected components of the vertex set, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Multigraph& g);

}  // namespace tuza
