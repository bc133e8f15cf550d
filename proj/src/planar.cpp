#include "tuza/planar.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tuza {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("planar: " + what);
}

Weight measure(const Multigraph& g) { return g.edge_count() + g.total_weight(); }

// Cyclic order of N(v) if it induces a single cycle on >= 3 vertices,
// starting at the lowest neighbor and continuing to its lower cycle-neighbor.
std::optional<std::vector<Vertex>> neighborhood_cycle(const Multigraph& g, Vertex v) {
  auto nb = g.neighbors(v);
  if (nb.size() < 3) return std::nullopt;
  std::set<Vertex> in(nb.begin(), nb.end());
  std::map<Vertex, std::vector<Vertex>> inner;
  for (Vertex u : nb) {
    for (Vertex x : g.neighbors(u))
      if (in.count(x)) inner[u].push_back(x);
    if (inner[u].size() != 2) return std::nullopt;
  }
  std::vector<Vertex> cyc{nb.front()};
  Vertex prev = nb.front();
  Vertex cur = std::min(inner[prev][0], inner[prev][1]);
  while (cur != nb.front()) {
    cyc.push_back(cur);
    const auto& two = inner[cur];
    Vertex next = two[0] == prev ? two[1] : two[0];
    prev = cur;
    cur = next;
    if (cyc.size() > nb.size()) return std::nullopt;
  }
  if (cyc.size() != nb.size()) return std::nullopt;
  return cyc;
}

Weight weight_under(const Multigraph& g, const std::set<EdgeKey>& c) { return weight(g, c); }

bool hits(const std::set<EdgeKey>& c, const Triangle& t) {
  for (const auto& k : t.edge_keys())
    if (c.count(k)) return true;
  return false;
}

}  // namespace

std::string to_string(ReductionKind k) {
  switch (k) {
    case ReductionKind::ZeroEdge: return "zero-edge";
    case ReductionKind::TrianglelessEdge: return "triangleless-edge";
    case ReductionKind::SingleTriangleEdge: return "single-triangle-edge";
    case ReductionKind::DoubleTriangleHeavyEdge: return "double-triangle-heavy-edge";
    case ReductionKind::CycleNeighborhood: return "cycle-neighborhood";
  }
  return "unknown";
}

std::optional<ReductionStep> find_reduction(const Multigraph& g) {
  for (const auto& e : g.edges()) {
    if (e.w == 0) {
      ReductionStep s;
      s.kind = ReductionKind::ZeroEdge;
      s.edge = e.key();
      s.removed = {e.key()};
      return s;
    }
  }
  Incidence inc = incidence(g);
  if (inc.triangles.empty()) return std::nullopt;
  auto tris_of = [&](EdgeId e) {
    std::vector<Triangle> out;
    for (int t : inc.edge_triangles[static_cast<size_t>(e)])
      out.push_back(inc.triangles[static_cast<size_t>(t)]);
    return out;
  };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (inc.edge_triangles[static_cast<size_t>(e)].empty()) {
      ReductionStep s;
      s.kind = ReductionKind::TrianglelessEdge;
      s.edge = g.edge(e).key();
      s.removed = {s.edge};
      return s;
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto ts = tris_of(e);
    if (ts.size() != 1) continue;
    ReductionStep s;
    s.kind = ReductionKind::SingleTriangleEdge;
    s.edge = g.edge(e).key();
    s.triangles = ts;
    for (const auto& k : ts[0].edge_keys()) s.decrements[k] = 1;
    return s;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto ts = tris_of(e);
    if (ts.size() != 2 || g.weight(e) < 2) continue;
    ReductionStep s;
    s.kind = ReductionKind::DoubleTriangleHeavyEdge;
    s.edge = g.edge(e).key();
    s.triangles = ts;
    for (const auto& t : ts)
      for (const auto& k : t.edge_keys()) s.decrements[k] += 1;
    bool ok = true;
    for (const auto& [k, d] : s.decrements) ok = ok && g.weight(g.edge_id(k)) >= d;
    if (!ok) continue;
    return s;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto cyc = neighborhood_cycle(g, v);
    if (!cyc) continue;
    bool unit = std::all_of(cyc->begin(), cyc->end(),
                            [&](Vertex u) { return g.weight(g.edge_id(v, u)) == 1; });
    if (!unit) continue;
    ReductionStep s;
    s.kind = ReductionKind::CycleNeighborhood;
    s.vertex = v;
    s.cycle = *cyc;
    const size_t k = cyc->size();
    for (size_t i = 0; i + 1 < k; i += 2) {
      Vertex a = (*cyc)[i], b = (*cyc)[i + 1];
      s.decrements[EdgeKey(a, b)] = 1;
      s.triangles.emplace_back(v, a, b);
    }
    for (Vertex u : *cyc) s.removed.emplace_back(v, u);
    return s;
  }
  return std::nullopt;
}

Multigraph apply_reduction(const Multigraph& g, const ReductionStep& s) {
  std::set<EdgeKey> gone(s.removed.begin(), s.removed.end());
  std::vector<Edge> es;
  for (const auto& e : g.edges()) {
    if (gone.count(e.key())) continue;
    Edge x = e;
    auto it = s.decrements.find(e.key());
    if (it != s.decrements.end()) x.w -= it->second;
    require(x.w >= 0, "negative weight after " + to_string(s.kind));
    es.push_back(x);
  }
  return Multigraph(g.vertex_count(), es);
}

std::set<EdgeKey> minimalize(const Multigraph& g, std::set<EdgeKey> c) {
  std::vector<EdgeKey> order(c.begin(), c.end());
  for (const auto& e : order) {
    c.erase(e);
    if (!covers_all_triangles(g, c)) c.insert(e);
  }
  return c;
}

PlanarResult reduce_and_certify(const Multigraph& g) {
  PlanarResult res;
  std::vector<Multigraph> levels{g};
  while (auto s = find_reduction(levels.back())) {
    Multigraph next = apply_reduction(levels.back(), *s);
    require(measure(next) < measure(levels.back()), "measure did not decrease");
    res.trace.steps.push_back(*s);
    levels.push_back(std::move(next));
  }
  res.trace.residual = levels.back();
  if (!is_triangle_free(res.trace.residual)) {
    res.status = PlanarStatus::Incomplete;
    return res;
  }

  PackingCertificate p;
  std::set<EdgeKey> c;
  for (size_t i = res.trace.steps.size(); i-- > 0;) {
    const ReductionStep& s = res.trace.steps[i];
    const Multigraph& here = levels[i];
    const Multigraph& inner = levels[i + 1];
    const Weight before = weight_under(inner, c);
    Weight extra = 0;
    switch (s.kind) {
      case ReductionKind::ZeroEdge:
        for (const auto& t : enumerate_triangles(here))
          if (t.contains(s.edge) && !hits(c, t)) c.insert(s.edge);
        break;
      case ReductionKind::TrianglelessEdge:
        break;
      case ReductionKind::SingleTriangleEdge:
        c = minimalize(inner, c);
        p.add(s.triangles[0]);
        extra = 2;
        break;
      case ReductionKind::DoubleTriangleHeavyEdge:
        c = minimalize(inner, c);
        for (const auto& t : s.triangles) p.add(t);
        extra = 4;
        break;
      case ReductionKind::CycleNeighborhood: {
        const auto& u = s.cycle;
        const size_t k = u.size();
        bool touched = std::any_of(s.decrements.begin(), s.decrements.end(),
                                   [&](const auto& kv) { return c.count(kv.first) > 0; });
        if (!touched) {
          // Minimum vertex cover of the rim cycle.
          for (size_t j = 1; j < k; j += 2) c.emplace(s.vertex, u[j]);
          if (k % 2 == 1) c.emplace(s.vertex, u[k - 1]);
        } else {
          // Cover each maximal arc of unhit wheel triangles by alternate spokes.
          auto rim_hit = [&](size_t j) { return c.count(EdgeKey(u[j], u[(j + 1) % k])) > 0; };
          size_t start = 0;
          while (!rim_hit(start)) ++start;
          std::vector<Vertex> arc;
          auto flush = [&] {
            for (size_t x = 1; x < arc.size(); x += 2) c.emplace(s.vertex, arc[x]);
            arc.clear();
          };
          for (size_t step = 1; step <= k; ++step) {
            size_t j = (start + step) % k;  // triangle v u_j u_{j+1}
            if (rim_hit(j)) {
              flush();
              continue;
            }
            if (arc.empty()) arc.push_back(u[j]);
            arc.push_back(u[(j + 1) % k]);
          }
          flush();
        }
        for (const auto& t : s.triangles) p.add(t);
        extra = 2 * static_cast<Weight>(k / 2);
        break;
      }
    }
    const Weight after = weight_under(here, c);
    require(after <= before + extra, to_string(s.kind) + " exceeded its accounting");
    require(verify_transversal(here, make_transversal(here, c)),
            to_string(s.kind) + " unwind lost coverage");
    require(verify_packing(here, p), to_string(s.kind) + " unwind broke the packing");
    require(after <= 2 * p.value(), to_string(s.kind) + " unwind above 2|P|");
  }
  res.packing = p;
  res.transversal = make_transversal(g, c);
  res.status = PlanarStatus::Complete;
  return res;
}

}  // namespace tuza
