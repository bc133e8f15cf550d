#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tuza/certificates.hpp"

namespace tuza {

enum class ReductionKind {
  ZeroEdge,                 // w(e) = 0: delete e
  TrianglelessEdge,         // e in no triangle while triangles remain: delete e
  SingleTriangleEdge,       // e in exactly one triangle: decrement its three edges
  DoubleTriangleHeavyEdge,  // e in exactly two triangles, w(e) >= 2
  CycleNeighborhood,        // N(v) induces a cycle with unit spokes: delete v
};

std::string to_string(ReductionKind k);

struct ReductionStep {
  ReductionKind kind = ReductionKind::ZeroEdge;
  EdgeKey edge;                        // witness edge (all kinds but CycleNeighborhood)
  Vertex vertex = -1;                  // witness vertex (CycleNeighborhood)
  std::vector<Vertex> cycle;           // u_1..u_k in cyclic order
  std::vector<Triangle> triangles;     // triangles added to the packing on unwind
  std::map<EdgeKey, Weight> decrements;
  std::vector<EdgeKey> removed;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  Multigraph residual;
};

// First applicable step, kinds in declaration order, witnesses in canonical
// order. Empty iff no step applies.
std::optional<ReductionStep> find_reduction(const Multigraph& g);

Multigraph apply_reduction(const Multigraph& g, const ReductionStep& s);

enum class PlanarStatus { Complete, Incomplete };

struct PlanarResult {
  PackingCertificate packing;
  TransversalCertificate transversal;
  PlanarStatus status = PlanarStatus::Incomplete;
  ReductionTrace trace;
};

// Reduces until no step applies, then unwinds. Complete iff the residual is
// triangle-free; certificates are empty on Incomplete. Throws
// std::logic_error if an unwinding invariant fails.
PlanarResult reduce_and_certify(const Multigraph& g);

// Greedily drops edges, in canonical order, while coverage holds.
std::set<EdgeKey> minimalize(const Multigraph& g, std::set<EdgeKey> c);

}  // namespace tuza
