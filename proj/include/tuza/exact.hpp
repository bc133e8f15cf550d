#pragma once

#include <set>
#include <utility>

#include "tuza/certificates.hpp"

namespace tuza {

// Primal/dual optimal pair of the fractional packing / transversal LPs.
struct LPSolution {
  TriangleAssignment packing;   // f
  EdgeAssignment transversal;   // g
  Rational value;               // f(T) = sum w(e) g(e)
  int pivots = 0;
};

struct TightSets {
  std::set<EdgeKey> edges;         // load equals capacity
  std::set<Triangle> triangles;    // g sums to exactly 1
};

struct ExactOptions {
  // Use the LP optimum to cap the search (nu <= floor(nu*), tau >= ceil(tau*)).
  bool use_lp_bound = true;
};

struct NuResult {
  Weight value = 0;
  PackingCertificate certificate;
  long long nodes = 0;
};

struct TauResult {
  Weight value = 0;
  TransversalCertificate certificate;
  long long nodes = 0;
};

// Exact rational simplex with Bland's rule on max{1x : Ax <= w, x >= 0}; the
// dual is read off the final tableau.
LPSolution lp_optimal(const Multigraph& g);

// Throws std::logic_error if s is not an optimal pair for g.
TightSets tight_sets(const Multigraph& g, const LPSolution& s);

NuResult nu_exact(const Multigraph& g, const ExactOptions& opts = {});
TauResult tau_exact(const Multigraph& g, const ExactOptions& opts = {});

}  // namespace tuza
