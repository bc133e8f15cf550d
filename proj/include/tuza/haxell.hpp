#pragma once

#include <array>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tuza/certificates.hpp"

namespace tuza {

// A multigraph with every unit of multiplicity as its own edge. Copies of a
// pair get consecutive ids in canonical pair order.
struct CopyEdge {
  Vertex u = 0;
  Vertex v = 0;
};

// Three copy ids, sorted.
using CopyTriangle = std::array<int, 3>;
using Family = std::vector<CopyTriangle>;

class CopyGraph {
 public:
  explicit CopyGraph(const Multigraph& g);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const CopyEdge& edge(int id) const { return edges_.at(static_cast<size_t>(id)); }
  EdgeKey pair(int id) const;
  // Empty if the pair is absent or has weight 0.
  const std::vector<int>& copies(const EdgeKey& e) const;
  std::array<Vertex, 3> vertices(const CopyTriangle& t) const;

  std::vector<CopyTriangle> triangles() const;
  // Triangles using only copies with allowed[id] == true.
  std::vector<CopyTriangle> triangles(const std::vector<bool>& allowed) const;

 private:
  int n_;
  std::vector<CopyEdge> edges_;
  std::map<EdgeKey, std::vector<int>> by_pair_;
  std::vector<Triangle> pair_triangles_;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SearchBudget {
 public:
  explicit SearchBudget(long long limit) : limit_(limit) {}
  void tick();
  long long used() const { return used_; }

 private:
  long long limit_;
  long long used_ = 0;
};

std::set<int> family_edges(const Family& f);
bool is_independent(const Family& f);

// Maximum pairwise edge-disjoint subfamily of `candidates` accepted by
// `accept` (all families if empty); first maximum in include-first order.
Family max_independent_family(const std::vector<CopyTriangle>& candidates,
                              const std::function<bool(const Family&)>& accept,
                              SearchBudget& budget);

// T of type (F,1) against its partner hat in F: shared copy e(T), apexes
// v(T), v^(T), and the rung copies E'(T) between the apexes in the host.
struct Anchor {
  CopyTriangle hat{};
  int shared = -1;
  Vertex apex = -1;
  Vertex hat_apex = -1;
  std::vector<int> rungs;
};

struct HaxellOptions {
  long long node_budget = 20'000'000;
  int max_switch = 12;  // largest B1' for which switch variants are enumerated
};

struct HaxellState {
  explicit HaxellState(const Multigraph& g) : graph(g) {}

  CopyGraph graph;
  Weight nu = 0;
  std::vector<bool> in_gprime;  // copies of G' = G - E[B1]

  Family B, B1, B2, Bp, B1p, I, Ip, K;
  std::map<CopyTriangle, Anchor> anchor1;   // B1 against B, host G
  std::map<CopyTriangle, Anchor> anchor1p;  // B1' against B', host G'
  std::map<CopyTriangle, std::array<int, 2>> fmap;

  Rational gamma, beta, alpha, delta, eta, eta_p, delta0;
  unsigned long long switch_mask = 0;  // S as a subset of the pre-switch B1'
  long long nodes = 0;
};

struct Candidate {
  std::string label;
  std::set<int> copies;
  Weight size = 0;  // |copies|
  TransversalCertificate certificate;
  Rational coefficient;  // bound = coefficient * nu
  Rational bound;
  bool within_bound = false;
};

// Throws BudgetExceeded when a family search runs out of nodes, and
// std::logic_error when an invariant of the construction fails.
HaxellState build_state(const Multigraph& g, const HaxellOptions& opts = {});

// C_a..C_e in order. Throws std::logic_error if a set fails to cover.
std::vector<Candidate> candidate_transversals(const Multigraph& g, const HaxellState& st);

struct HaxellResult {
  HaxellState state;
  std::vector<Candidate> candidates;
  size_t best = 0;
  TransversalCertificate certificate;
};

HaxellResult haxell_construct(const Multigraph& g, const HaxellOptions& opts = {});
TransversalCertificate transversal_292(const Multigraph& g, const HaxellOptions& opts = {});

}  // namespace tuza
