#pragma once

#include <map>
#include <set>
#include <vector>

#include "tuza/multigraph.hpp"
#include "tuza/rational.hpp"

namespace tuza {

// Integral packing: how many times each triangle is used.
struct PackingCertificate {
  std::map<Triangle, Weight> multiplicity;

  Weight value() const;
  void add(const Triangle& t, Weight times = 1);
};

// 0/1 transversal: the support of y.
struct TransversalCertificate {
  std::set<EdgeKey> edges;
  Weight weight = 0;
};

// Fractional packing f on triangles.
struct TriangleAssignment {
  std::map<Triangle, Rational> values;
  Rational value() const;
};

// Fractional transversal g on edges; its value is sum w(e) g(e).
struct EdgeAssignment {
  std::map<EdgeKey, Rational> values;
  Rational at(const EdgeKey& e) const;
  Rational value(const Multigraph& g) const;
};

// Sum of weights; unknown edges throw GraphError.
Weight weight(const Multigraph& g, const std::set<EdgeKey>& edges);

TransversalCertificate make_transversal(const Multigraph& g, std::set<EdgeKey> edges);

// Throws GraphError if p names a triangle that is not in g.
bool verify_packing(const Multigraph& g, const PackingCertificate& p);
// Throws GraphError if c names an edge that is not in g.
bool verify_transversal(const Multigraph& g, const TransversalCertificate& c);
bool covers_all_triangles(const Multigraph& g, const std::set<EdgeKey>& edges);

// Exact feasibility for the fractional LPs with capacities w.
bool is_fractional_packing(const Multigraph& g, const TriangleAssignment& f);
bool is_fractional_transversal(const Multigraph& g, const EdgeAssignment& y);

// Per-edge load sum_{t containing e} f(t), indexed by EdgeId.
std::vector<Rational> edge_loads(const Multigraph& g, const TriangleAssignment& f);

}  // namespace tuza
