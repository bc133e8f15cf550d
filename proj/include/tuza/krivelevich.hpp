#pragma once

#include <array>
#include <set>

#include "tuza/cuts.hpp"
#include "tuza/exact.hpp"

namespace tuza {

// Edges split by their value under an optimal fractional transversal g.
// Counts a, b, c, c1, c_mid are taken with multiplicity.
struct EdgePartition {
  std::set<EdgeKey> Z;   // g = 0
  std::set<EdgeKey> A;   // 0 < g < 1/2
  std::set<EdgeKey> B;   // g = 1/2
  std::set<EdgeKey> C;   // g > 1/2
  std::set<EdgeKey> C1;  // g = 1, subset of C
  Weight a = 0;
  Weight b = 0;
  Weight c = 0;
  Weight c1 = 0;     // copies in C1
  Weight c_mid = 0;  // copies in C with 1/2 < g < 1
};

// Tight triangles (g sums to 1) by type:
// T[0..2]: exactly 1..3 edges in A; T[3]: Z, Z, C; T[4]: Z, B, B.
struct TightTrianglePartition {
  std::array<std::set<Triangle>, 5> T;
  std::array<Rational, 5> f;  // f(T_i) under the packing of the LP pair
};

struct Classification {
  EdgePartition edges;
  TightTrianglePartition triangles;
};

// Throws std::logic_error if s is not an optimal pair for g, if a tight
// triangle fits none of the five types, if either counting identity fails,
// or if a < c_mid.
Classification classify(const Multigraph& g, const LPSolution& s);

struct KrivelevichReport {
  TransversalCertificate certificate;
  LPSolution lp;             // on the positive-weight part of g
  Classification parts;
  Weight independent = 0;    // |I|, copies of B-edges
  Weight cut_graph_size = 0; // e' = a + |I|
  Weight cut_size = 0;       // |S|
  Weight copy_size = 0;      // |L| = (b - |I|) + c + |R|
};

// L = (B \ I) u C u R. Edges of weight 0 are removed first and returned in
// the certificate at no cost. Throws std::logic_error if an internal bound or
// the validity check fails.
KrivelevichReport krivelevich_construct(const Multigraph& g);

TransversalCertificate transversal_2nustar(const Multigraph& g);

// True iff value <= 2 nu* - sqrt(nu*)/4, compared exactly.
bool within_2nustar_bound(const Rational& value, const Rational& nu_star);

}  // namespace tuza
