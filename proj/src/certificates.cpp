#include "tuza/certificates.hpp"

namespace tuza {

namespace {

void require_triangle(const Multigraph& g, const Triangle& t) {
  for (const auto& k : t.edge_keys())
    if (!g.adjacent(k.u, k.v)) throw GraphError("triangle " + t.str() + " is not in the graph");
}

}  // namespace

Weight PackingCertificate::value() const {
  Weight s = 0;
  for (const auto& [t, x] : multiplicity) s += x;
  return s;
}

void PackingCertificate::add(const Triangle& t, Weight times) {
  if (times <= 0) return;
  multiplicity[t] += times;
}

Rational TriangleAssignment::value() const {
  Rational s;
  for (const auto& [t, x] : values) s += x;
  return s;
}

Rational EdgeAssignment::at(const EdgeKey& e) const {
  auto it = values.find(e);
  return it == values.end() ? Rational() : it->second;
}

Rational EdgeAssignment::value(const Multigraph& g) const {
  Rational s;
  for (const auto& [e, y] : values) s += y * Rational(g.weight(g.edge_id(e)));
  return s;
}

Weight weight(const Multigraph& g, const std::set<EdgeKey>& edges) {
  Weight s = 0;
  for (const auto& e : edges) s += g.weight(g.edge_id(e));
  return s;
}

TransversalCertificate make_transversal(const Multigraph& g, std::set<EdgeKey> edges) {
  TransversalCertificate c;
  c.weight = weight(g, edges);
  c.edges = std::move(edges);
  return c;
}

bool verify_packing(const Multigraph& g, const PackingCertificate& p) {
  std::vector<Weight> load(static_cast<size_t>(g.edge_count()), 0);
  for (const auto& [t, x] : p.multiplicity) {
    require_triangle(g, t);
    if (x < 0) return false;
    for (const auto& k : t.edge_keys()) load[static_cast<size_t>(g.edge_id(k))] += x;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (load[static_cast<size_t>(e)] > g.weight(e)) return false;
  return true;
}

bool covers_all_triangles(const Multigraph& g, const std::set<EdgeKey>& edges) {
  for (const auto& t : enumerate_triangles(g)) {
    bool hit = false;
    for (const auto& k : t.edge_keys()) hit = hit || edges.count(k) > 0;
    if (!hit) return false;
  }
  return true;
}

bool verify_transversal(const Multigraph& g, const TransversalCertificate& c) {
  for (const auto& e : c.edges)
    if (!g.adjacent(e.u, e.v)) throw GraphError("edge " + e.str() + " is not in the graph");
  return covers_all_triangles(g, c.edges);
}

std::vector<Rational> edge_loads(const Multigraph& g, const TriangleAssignment& f) {
  std::vector<Rational> load(static_cast<size_t>(g.edge_count()));
  for (const auto& [t, x] : f.values) {
    require_triangle(g, t);
    for (const auto& k : t.edge_keys()) load[static_cast<size_t>(g.edge_id(k))] += x;
  }
  return load;
}

bool is_fractional_packing(const Multigraph& g, const TriangleAssignment& f) {
  for (const auto& [t, x] : f.values)
    if (x.sign() < 0) return false;
  auto load = edge_loads(g, f);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (load[static_cast<size_t>(e)] > Rational(g.weight(e))) return false;
  return true;
}

bool is_fractional_transversal(const Multigraph& g, const EdgeAssignment& y) {
  for (const auto& [e, x] : y.values) {
    if (!g.adjacent(e.u, e.v)) throw GraphError("edge " + e.str() + " is not in the graph");
    if (x.sign() < 0) return false;
  }
  for (const auto& t : enumerate_triangles(g)) {
    Rational s;
    for (const auto& k : t.edge_keys()) s += y.at(k);
    if (s < Rational(1)) return false;
  }
  return true;
}

}  // namespace tuza
