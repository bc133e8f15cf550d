#include "tuza/krivelevich.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace tuza {

namespace {

enum class Part { Z, A, B, C };

Part part_of(const EdgePartition& p, const EdgeKey& e) {
  if (p.A.count(e)) return Part::A;
  if (p.B.count(e)) return Part::B;
  if (p.C.count(e)) return Part::C;
  return Part::Z;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("krivelevich: ") + what);
}

}  // namespace

Classification classify(const Multigraph& g, const LPSolution& s) {
  TightSets tight = tight_sets(g, s);
  Classification out;
  EdgePartition& p = out.edges;
  const Rational half(1, 2);
  for (const auto& e : g.edges()) {
    Rational y = s.transversal.at(e.key());
    if (y.is_zero()) {
      p.Z.insert(e.key());
      continue;
    }
    require(tight.edges.count(e.key()) > 0, "edge with g > 0 is not tight");
    if (y < half) {
      p.A.insert(e.key());
      p.a += e.w;
    } else if (y == half) {
      p.B.insert(e.key());
      p.b += e.w;
    } else {
      p.C.insert(e.key());
      p.c += e.w;
      if (y >= Rational(1)) {
        p.C1.insert(e.key());
        p.c1 += e.w;
      } else {
        p.c_mid += e.w;
      }
    }
  }

  TightTrianglePartition& tp = out.triangles;
  for (const auto& t : tight.triangles) {
    int n[4] = {0, 0, 0, 0};
    for (const auto& k : t.edge_keys()) ++n[static_cast<int>(part_of(p, k))];
    const int z = n[0], a = n[1], b = n[2], c = n[3];
    if (a > 0) {
      tp.T[static_cast<size_t>(a - 1)].insert(t);
    } else if (z == 2 && c == 1) {
      tp.T[3].insert(t);
    } else if (z == 1 && b == 2) {
      tp.T[4].insert(t);
    } else {
      throw std::logic_error("krivelevich: tight triangle " + t.str() + " has no type");
    }
  }
  for (const auto& [t, x] : s.packing.values) {
    bool found = false;
    for (size_t i = 0; i < 5; ++i) {
      if (tp.T[i].count(t)) {
        tp.f[i] += x;
        found = true;
      }
    }
    require(found, "packed triangle is not tight");
  }

  const auto& f = tp.f;
  require(Rational(p.a) == f[0] + Rational(2) * f[1] + Rational(3) * f[2], "a != f(T1)+2f(T2)+3f(T3)");
  require(Rational(p.b + p.c) == f[0] + f[1] + f[3] + Rational(2) * f[4],
          "b+c != f(T1)+f(T2)+f(T4)+2f(T5)");
  require(Rational(p.c1) == f[3], "c1 != f(T4)");
  require(p.a >= p.c_mid, "a < |C \\ C1| contradicts optimality");
  return out;
}

bool within_2nustar_bound(const Rational& value, const Rational& nu_star) {
  return at_most_minus_sqrt(value, Rational(2) * nu_star, Rational(1, 4), nu_star);
}

KrivelevichReport krivelevich_construct(const Multigraph& g) {
  KrivelevichReport rep;
  std::set<EdgeKey> chosen;

  // Zero-weight edges inside triangles are free; the rest of the work is on
  // the positive part.
  std::vector<bool> keep(static_cast<size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) keep[static_cast<size_t>(e)] = g.weight(e) > 0;
  for (const auto& t : enumerate_triangles(g))
    for (const auto& k : t.edge_keys())
      if (g.weight(g.edge_id(k)) == 0) chosen.insert(k);
  const Multigraph gp = g.edge_subgraph(keep);

  rep.lp = lp_optimal(gp);
  rep.parts = classify(gp, rep.lp);
  const EdgePartition& p = rep.parts.edges;

  // H: one vertex per copy of a B-edge; copies of two B-edges of a common
  // tight triangle are adjacent.
  std::vector<EdgeKey> bclass(p.B.begin(), p.B.end());
  std::map<EdgeKey, int> first_copy;
  int nb = 0;
  for (const auto& e : bclass) {
    first_copy[e] = nb;
    nb += static_cast<int>(gp.weight(gp.edge_id(e)));
  }
  std::set<EdgeKey> h_edges;
  for (const auto& family : rep.parts.triangles.T) {
    for (const auto& t : family) {
      auto ks = t.edge_keys();
      for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j) {
          if (!p.B.count(ks[i]) || !p.B.count(ks[j])) continue;
          int oi = first_copy[ks[i]], oj = first_copy[ks[j]];
          Weight wi = gp.weight(gp.edge_id(ks[i])), wj = gp.weight(gp.edge_id(ks[j]));
          for (Weight x = 0; x < wi; ++x)
            for (Weight y = 0; y < wj; ++y)
              h_edges.emplace(oi + static_cast<int>(x), oj + static_cast<int>(y));
        }
    }
  }
  std::vector<Edge> hes;
  for (const auto& k : h_edges) hes.push_back(Edge{k.u, k.v, 1});
  Multigraph h(nb, hes);
  require(is_triangle_free(h), "H has a triangle");

  std::map<EdgeKey, Weight> in_i;
  if (nb > 0) {
    auto indep = independent_set_triangle_free(h);
    rep.independent = static_cast<Weight>(indep.size());
    require(4 * rep.independent * rep.independent >= nb, "|I| < sqrt(b)/2");
    for (int x : indep) {
      auto it = std::prev(std::upper_bound(
          bclass.begin(), bclass.end(), x,
          [&](int v, const EdgeKey& e) { return v < first_copy[e]; }));
      ++in_i[*it];
    }
  }

  // G' = G[A u I] with multiplicities.
  std::vector<Edge> ges;
  for (const auto& e : p.A) ges.push_back(Edge{e.u, e.v, gp.weight(gp.edge_id(e))});
  for (const auto& [e, k] : in_i) ges.push_back(Edge{e.u, e.v, k});
  Multigraph gprime(g.vertex_count(), ges);
  rep.cut_graph_size = gprime.total_weight();
  require(rep.cut_graph_size == p.a + rep.independent, "e' != a + |I|");

  std::set<EdgeKey> rest;
  Weight r_size = 0;
  if (rep.cut_graph_size > 0) {
    EdgeCut cut = cut_large(gprime);
    rep.cut_size = cut.size;
    require(at_least_plus_sqrt(Rational(cut.size), Rational(rep.cut_graph_size, 2), Rational(1, 4),
                               Rational(rep.cut_graph_size)),
            "cut below e'/2 + sqrt(e')/4");
    for (const auto& e : gprime.edges()) {
      if (cut.shore[static_cast<size_t>(e.u)] == cut.shore[static_cast<size_t>(e.v)]) {
        rest.insert(e.key());
        r_size += e.w;
      }
    }
  }
  rep.copy_size = (p.b - rep.independent) + p.c + r_size;

  // A pair is taken iff every copy of it lies in L.
  for (const auto& e : p.C) chosen.insert(e);
  for (const auto& e : p.B)
    if (!in_i.count(e) || rest.count(e)) chosen.insert(e);
  for (const auto& e : p.A)
    if (rest.count(e)) chosen.insert(e);
  rep.certificate = make_transversal(g, chosen);

  require(verify_transversal(g, rep.certificate), "L is not a transversal");
  require(rep.certificate.weight <= rep.copy_size, "pair weight exceeds |L|");

  const Rational nu_star = rep.lp.value;
  if (nu_star.is_zero()) {
    require(rep.copy_size == 0, "nu* = 0 but L is nonempty");
    return rep;
  }
  const Rational x_plain = Rational(p.a, 4) + Rational(p.b + p.c, 2);
  const Rational x_split = Rational(p.a, 4) + Rational(p.b + p.c_mid, 2) + Rational(p.c1);
  require(x_plain <= nu_star, "nu* < a/4 + (b+c)/2");
  require(x_split <= nu_star, "nu* < a/4 + (b+c')/2 + c1");
  require(within_2nustar_bound(Rational(rep.copy_size), x_split), "|L| above 2x - sqrt(x)/4");
  require(within_2nustar_bound(Rational(rep.copy_size), nu_star), "|L| above 2nu* - sqrt(nu*)/4");
  return rep;
}

TransversalCertificate transversal_2nustar(const Multigraph& g) {
  return krivelevich_construct(g).certificate;
}

}  // namespace tuza
