#pragma once

#include <set>
#include <vector>

#include "tuza/multigraph.hpp"

namespace tuza {

// delta(W): edges with exactly one endpoint in the shore W, counted with multiplicity.
struct EdgeCut {
  std::vector<bool> shore;          // shore[x] == true iff x in W
  std::vector<EdgeKey> cut_edges;   // pairs crossing the cut (positive weight only)
  Weight size = 0;

  std::set<Vertex> shore_set() const;
};

EdgeCut make_cut(const Multigraph& g, std::vector<bool> shore);

// Independent set of size >= sqrt(v)/2 in a triangle-free graph.
// Throws GraphError if h contains a triangle.
std::set<Vertex> independent_set_triangle_free(const Multigraph& h);

// Cut of size >= e/2 + (v-1)/4 (>= e/2 + v/4 if some degree is odd) by the
// odd-degree / halving / odd-pair recursion. Edges of weight 0 are ignored.
// Throws GraphError unless g is connected with at least one edge.
EdgeCut cut_connected(const Multigraph& g);

// Cut of size >= e/2 + sqrt(e)/4, per component: cut_connected on sparse
// components, derandomized balanced bipartition on dense ones.
// Throws GraphError if g has no edge of positive weight.
EdgeCut cut_large(const Multigraph& g);

// Balanced bipartition (floor(v/2) / ceil(v/2)) reaching the expected
// crossing count of a uniform random one, by conditional expectations.
// Only vertices listed in `vertices` are placed; others stay off the shore.
EdgeCut balanced_cut(const Multigraph& g, const std::vector<Vertex>& vertices);

}  // namespace tuza
