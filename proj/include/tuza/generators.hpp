#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "tuza/certificates.hpp"
#include "tuza/multigraph.hpp"
#include "tuza/rational.hpp"

namespace tuza {

// Graph with two distinguished terminal vertices joined by the terminal edge.
struct TerminalGraph {
  Multigraph graph;
  Vertex t1 = 0;
  Vertex t2 = 1;
  // Height of each triangle: the smallest level i whose copy of G_i contains it.
  std::map<Triangle, int> height;
  // Terminal edge of every copy of G_j used in the construction (j, edge),
  // including the top level.
  std::vector<std::pair<int, EdgeKey>> copies;

  EdgeKey terminal_edge() const { return EdgeKey(t1, t2); }
};

inline constexpr int kMaxRecursiveLevel = 4;

// G_0 is a single edge; G_k substitutes a copy of G_{k-1} for each of the ten
// edges of the 5-wheel (hub 0, rim 1..5 at the top level, terminals 1 and 2).
// Throws std::invalid_argument for k < 0 or k > kMaxRecursiveLevel.
TerminalGraph gen_gk(int k);

// f(t) = 2^-height(t).
TriangleAssignment fractional_packing_fk(int k);

// g_{k,a}: terminal edge valued a, value (5/2^k)(20^k-1)/19 + a/2^k.
EdgeAssignment fractional_transversal_gka(int k, const Rational& a);

// (5/2^k)(20^k-1)/19.
Rational gk_fractional_optimum(int k);

// Joins a new vertex (id n) to every vertex of a triangle-free h with weight 1.
Multigraph gen_apex(const Multigraph& h);

Multigraph complete_graph(int n, Weight w = 1);
Multigraph cycle_graph(int n);
// Hub 0, rim 1..k in cyclic order.
Multigraph wheel_graph(int k);
Multigraph petersen_graph();
Multigraph octahedron_graph();
// Planar triangulation grown from a triangle by repeatedly inserting a vertex
// into a (seeded) random face.
Multigraph stacked_triangulation(int n, std::uint64_t seed);

// Factory by name: complete|K, cycle|C, wheel|W, petersen, octahedron,
// stacked, gk. `param` is the size parameter where one applies.
Multigraph gen_named(std::string_view name, int param = 0, std::uint64_t seed = 1);

// m distinct pairs on n vertices, multiplicities uniform in [1, max_mult].
Multigraph gen_random(int n, int m, Weight max_mult, std::uint64_t seed);

// Same graph with weights drawn uniformly from [lo, hi].
Multigraph randomize_weights(const Multigraph& g, Weight lo, Weight hi, std::uint64_t seed);

}  // namespace tuza
