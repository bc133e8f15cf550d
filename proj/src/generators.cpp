#include "tuza/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace tuza {

namespace {

Rational pow2(int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r *= Rational(2);
  return r;
}

// Emits G_k in the canonical numbering, optionally together with g_{k,a}.
class RecursiveBuilder {
 public:
  explicit RecursiveBuilder(EdgeAssignment* g) : g_(g) {}

  TerminalGraph build(int k, const Rational& a) {
    TerminalGraph out;
    if (k == 0) {
      next_ = 2;
      emit(0, 0, 1, a);
      out.t1 = 0;
      out.t2 = 1;
    } else {
      Vertex u = next_++;
      Vertex v1 = next_++;
      Vertex v2 = next_++;
      wheel(k, u, v1, v2, a);
      out.t1 = v1;
      out.t2 = v2;
    }
    out.graph = Multigraph(next_, edges_);
    out.height = std::move(height_);
    out.copies = std::move(copies_);
    return out;
  }

 private:
  void emit(int k, Vertex x, Vertex y, const Rational& a) {
    if (k == 0) {
      edges_.push_back(Edge{x, y, 1});
      copies_.emplace_back(0, EdgeKey(x, y));
      if (g_ && !a.is_zero()) g_->values[EdgeKey(x, y)] = a;
      return;
    }
    Vertex u = next_++;
    wheel(k, u, x, y, a);
  }

  void wheel(int k, Vertex u, Vertex v1, Vertex v2, const Rational& a) {
    copies_.emplace_back(k, EdgeKey(v1, v2));
    std::array<Vertex, 5> v{v1, v2, 0, 0, 0};
    for (int i = 2; i < 5; ++i) v[static_cast<size_t>(i)] = next_++;

    const Rational half(1, 2);
    const Rational lo = (Rational(1) - a) * half;
    const Rational hi = (Rational(1) + a) * half;
    // Rim r_i = v_i v_{i+1} (r_1 terminal), spokes s_i = u v_i; every wheel
    // triangle sums to exactly 1.
    const std::array<Rational, 5> rim{a, Rational(), Rational(), Rational(), Rational()};
    const std::array<Rational, 5> spoke{lo, lo, hi, lo, hi};
    for (size_t i = 0; i < 5; ++i) emit(k - 1, v[i], v[(i + 1) % 5], rim[i]);
    for (size_t i = 0; i < 5; ++i) emit(k - 1, u, v[i], spoke[i]);
    for (size_t i = 0; i < 5; ++i) height_.emplace(Triangle(u, v[i], v[(i + 1) % 5]), k);
  }

  EdgeAssignment* g_;
  Vertex next_ = 0;
  std::vector<Edge> edges_;
  std::map<Triangle, int> height_;
  std::vector<std::pair<int, EdgeKey>> copies_;
};

void check_level(int k) {
  if (k < 0 || k > kMaxRecursiveLevel)
    throw std::invalid_argument("recursive level k=" + std::to_string(k) + " outside [0, " +
                                std::to_string(kMaxRecursiveLevel) + "]");
}

}  // namespace

TerminalGraph gen_gk(int k) {
  check_level(k);
  return RecursiveBuilder(nullptr).build(k, Rational());
}

TriangleAssignment fractional_packing_fk(int k) {
  if (k < 1) throw std::invalid_argument("fractional_packing_fk: k must be >= 1");
  auto gk = gen_gk(k);
  TriangleAssignment f;
  for (const auto& [t, h] : gk.height) f.values.emplace(t, Rational(1) / pow2(h));
  return f;
}

EdgeAssignment fractional_transversal_gka(int k, const Rational& a) {
  check_level(k);
  if (a.sign() < 0 || a > Rational(1))
    throw std::invalid_argument("fractional_transversal_gka: a must lie in [0, 1]");
  EdgeAssignment g;
  RecursiveBuilder(&g).build(k, a);
  return g;
}

Rational gk_fractional_optimum(int k) {
  if (k < 0) throw std::invalid_argument("gk_fractional_optimum: negative k");
  Rational twenty_k(1);
  for (int i = 0; i < k; ++i) twenty_k *= Rational(20);
  return Rational(5) / pow2(k) * (twenty_k - Rational(1)) / Rational(19);
}

Multigraph gen_apex(const Multigraph& h) {
  if (!is_triangle_free(h)) throw GraphError("gen_apex: base graph has a triangle");
  std::vector<Edge> es = h.edges();
  const Vertex apex = h.vertex_count();
  for (Vertex x = 0; x < apex; ++x) es.push_back(Edge{x, apex, 1});
  return Multigraph(apex + 1, es);
}

Multigraph complete_graph(int n, Weight w) {
  std::vector<Edge> es;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) es.push_back(Edge{a, b, w});
  return Multigraph(n, es);
}

Multigraph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
  std::vector<Edge> es;
  for (Vertex a = 0; a < n; ++a) es.push_back(Edge{a, (a + 1) % n, 1});
  return Multigraph(n, es);
}

Multigraph wheel_graph(int k) {
  if (k < 3) throw std::invalid_argument("wheel_graph: rim must have >= 3 vertices");
  std::vector<Edge> es;
  for (Vertex i = 1; i <= k; ++i) {
    es.push_back(Edge{0, i, 1});
    es.push_back(Edge{i, i % k + 1, 1});
  }
  return Multigraph(k + 1, es);
}

Multigraph petersen_graph() {
  std::vector<Edge> es;
  for (Vertex i = 0; i < 5; ++i) {
    es.push_back(Edge{i, (i + 1) % 5, 1});
    es.push_back(Edge{i, i + 5, 1});
    es.push_back(Edge{i + 5, (i + 2) % 5 + 5, 1});
  }
  return Multigraph(10, es);
}

Multigraph octahedron_graph() {
  std::vector<Edge> es;
  for (Vertex a = 0; a < 6; ++a)
    for (Vertex b = a + 1; b < 6; ++b)
      if (!(a % 2 == 0 && b == a + 1)) es.push_back(Edge{a, b, 1});
  return Multigraph(6, es);
}

Multigraph stacked_triangulation(int n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("stacked_triangulation: n must be >= 3");
  std::mt19937_64 rng(seed);
  std::vector<Edge> es{{0, 1, 1}, {0, 2, 1}, {1, 2, 1}};
  std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}, {0, 1, 2}};
  for (Vertex x = 3; x < n; ++x) {
    std::uniform_int_distribution<size_t> pick(0, faces.size() - 1);
    size_t f = pick(rng);
    auto [a, b, c] = faces[f];
    es.push_back(Edge{a, x, 1});
    es.push_back(Edge{b, x, 1});
    es.push_back(Edge{c, x, 1});
    faces[f] = {a, b, x};
    faces.push_back({a, c, x});
    faces.push_back({b, c, x});
  }
  return Multigraph(n, es);
}

Multigraph gen_named(std::string_view name, int param, std::uint64_t seed) {
  if (name == "complete" || name == "K") return complete_graph(param);
  if (name == "cycle" || name == "C") return cycle_graph(param);
  if (name == "wheel" || name == "W") return wheel_graph(param);
  if (name == "petersen") return petersen_graph();
  if (name == "octahedron") return octahedron_graph();
  if (name == "stacked") return stacked_triangulation(param, seed);
  if (name == "gk") return gen_gk(param).graph;
  throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
}

Multigraph gen_random(int n, int m, Weight max_mult, std::uint64_t seed) {
  if (n < 0 || m < 0 || max_mult < 1) throw std::invalid_argument("gen_random: bad parameters");
  std::vector<EdgeKey> pairs;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  if (static_cast<size_t>(m) > pairs.size())
    throw std::invalid_argument("gen_random: more edges than vertex pairs");
  std::mt19937_64 rng(seed);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::uniform_int_distribution<Weight> mult(1, max_mult);
  std::vector<Edge> es;
  for (int i = 0; i < m; ++i) {
    const auto& p = pairs[static_cast<size_t>(i)];
    es.push_back(Edge{p.u, p.v, mult(rng)});
  }
  return Multigraph(n, es);
}

Multigraph randomize_weights(const Multigraph& g, Weight lo, Weight hi, std::uint64_t seed) {
  if (lo < 0 || hi < lo) throw std::invalid_argument("randomize_weights: bad range");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Weight> dist(lo, hi);
  std::vector<Weight> ws;
  for (EdgeId e = 0; e < g.edge_count(); ++e) ws.push_back(dist(rng));
  return g.with_weights(ws);
}

}  // namespace tuza
