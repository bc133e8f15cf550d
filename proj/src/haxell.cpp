#include "tuza/haxell.hpp"

#include <algorithm>

#include "tuza/cuts.hpp"
#include "tuza/exact.hpp"

namespace tuza {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("haxell: " + what);
}

using Owner = std::map<int, CopyTriangle>;

Owner owner_of(const Family& f) {
  Owner o;
  for (const auto& t : f)
    for (int e : t) o.emplace(e, t);
  return o;
}

int type_count(const CopyTriangle& t, const Owner& o) {
  int k = 0;
  for (int e : t) k += o.count(e) ? 1 : 0;
  return k;
}

Anchor anchor_of(const CopyGraph& cg, const CopyTriangle& t, const Owner& owner,
                 const std::vector<bool>& host) {
  Anchor a;
  for (int e : t)
    if (owner.count(e)) a.shared = e;
  require(a.shared >= 0 && type_count(t, owner) == 1, "anchor of a triangle not of type 1");
  a.hat = owner.at(a.shared);
  const CopyEdge& s = cg.edge(a.shared);
  for (Vertex x : cg.vertices(t))
    if (x != s.u && x != s.v) a.apex = x;
  for (Vertex x : cg.vertices(a.hat))
    if (x != s.u && x != s.v) a.hat_apex = x;
  if (a.apex != a.hat_apex)
    for (int e : cg.copies(EdgeKey(a.apex, a.hat_apex)))
      if (host[static_cast<size_t>(e)]) a.rungs.push_back(e);
  return a;
}

std::map<CopyTriangle, Anchor> anchors(const CopyGraph& cg, const Family& members, const Family& f,
                                       const std::vector<bool>& host) {
  Owner o = owner_of(f);
  std::map<CopyTriangle, Anchor> out;
  std::set<CopyTriangle> hats;
  for (const auto& t : members) {
    Anchor a = anchor_of(cg, t, o, host);
    require(hats.insert(a.hat).second, "two members share a partner triangle");
    out.emplace(t, a);
  }
  return out;
}

void add_edges(std::set<int>& s, const CopyTriangle& t) { s.insert(t.begin(), t.end()); }

bool contains(const Family& f, const CopyTriangle& t) {
  return std::find(f.begin(), f.end(), t) != f.end();
}

// Maximum I ⊆ B1' with 2-rung sets f(T) outside E[B'], pairwise disjoint and
// disjoint from every E(U), U in I.
struct ISearch {
  const Family& members;
  const std::map<CopyTriangle, Anchor>& anch;
  const std::set<int>& ebp;
  SearchBudget& budget;

  std::vector<std::vector<int>> avail;
  std::vector<int> pick_a, pick_b;
  std::vector<int> best_a, best_b;
  int best = -1;
  std::set<int> used_f, used_e;

  void run() {
    for (const auto& t : members) {
      std::vector<int> v;
      for (int e : anch.at(t).rungs)
        if (!ebp.count(e)) v.push_back(e);
      avail.push_back(v);
    }
    pick_a.assign(members.size(), -1);
    pick_b.assign(members.size(), -1);
    dfs(0, 0);
  }

  void dfs(size_t i, int count) {
    budget.tick();
    int ub = count;
    for (size_t j = i; j < members.size(); ++j) ub += avail[j].size() >= 2 ? 1 : 0;
    if (ub <= best) return;
    if (i == members.size()) {
      best = count;
      best_a = pick_a;
      best_b = pick_b;
      return;
    }
    const CopyTriangle& t = members[i];
    bool own_clear = std::none_of(t.begin(), t.end(), [&](int e) { return used_f.count(e) > 0; });
    if (own_clear) {
      const auto& av = avail[i];
      for (size_t x = 0; x < av.size(); ++x) {
        for (size_t y = x + 1; y < av.size(); ++y) {
          int p = av[x], q = av[y];
          if (used_f.count(p) || used_f.count(q) || used_e.count(p) || used_e.count(q)) continue;
          used_f.insert(p);
          used_f.insert(q);
          add_edges(used_e, t);
          pick_a[i] = p;
          pick_b[i] = q;
          dfs(i + 1, count + 1);
          pick_a[i] = pick_b[i] = -1;
          for (int e : t) used_e.erase(e);
          used_f.erase(p);
          used_f.erase(q);
        }
      }
    }
    dfs(i + 1, count);
  }
};

struct Switched {
  Family bp;
  Family b1p;
};

Switched apply_switch(const Family& bp, const Family& b1p,
                      const std::map<CopyTriangle, Anchor>& anch, unsigned long long mask) {
  Switched s;
  std::set<CopyTriangle> removed;
  for (size_t i = 0; i < b1p.size(); ++i) {
    if (mask >> i & 1) {
      removed.insert(anch.at(b1p[i]).hat);
      s.bp.push_back(b1p[i]);
      s.b1p.push_back(anch.at(b1p[i]).hat);
    } else {
      s.b1p.push_back(b1p[i]);
    }
  }
  for (const auto& t : bp)
    if (!removed.count(t)) s.bp.push_back(t);
  std::sort(s.bp.begin(), s.bp.end());
  std::sort(s.b1p.begin(), s.b1p.end());
  return s;
}

std::vector<CopyTriangle> b1p_candidates(const std::vector<CopyTriangle>& tri_gp, const Family& bp,
                                         const std::set<int>& eb) {
  Owner o = owner_of(bp);
  std::vector<CopyTriangle> out;
  for (const auto& t : tri_gp) {
    if (type_count(t, o) != 1) continue;
    int shared = -1;
    for (int e : t)
      if (o.count(e)) shared = e;
    if (!eb.count(shared)) out.push_back(t);
  }
  return out;
}

}  // namespace

CopyGraph::CopyGraph(const Multigraph& g) : n_(g.vertex_count()) {
  for (const auto& e : g.edges()) {
    auto& ids = by_pair_[e.key()];
    for (Weight k = 0; k < e.w; ++k) {
      ids.push_back(static_cast<int>(edges_.size()));
      edges_.push_back(CopyEdge{e.u, e.v});
    }
  }
  pair_triangles_ = enumerate_triangles(g);
}

EdgeKey CopyGraph::pair(int id) const {
  const CopyEdge& e = edge(id);
  return EdgeKey(e.u, e.v);
}

const std::vector<int>& CopyGraph::copies(const EdgeKey& e) const {
  static const std::vector<int> none;
  auto it = by_pair_.find(e);
  return it == by_pair_.end() ? none : it->second;
}

std::array<Vertex, 3> CopyGraph::vertices(const CopyTriangle& t) const {
  std::set<Vertex> vs;
  for (int e : t) {
    vs.insert(edge(e).u);
    vs.insert(edge(e).v);
  }
  if (vs.size() != 3) throw GraphError("copy triple is not a triangle");
  std::array<Vertex, 3> out{};
  std::copy(vs.begin(), vs.end(), out.begin());
  return out;
}

std::vector<CopyTriangle> CopyGraph::triangles() const {
  return triangles(std::vector<bool>(edges_.size(), true));
}

std::vector<CopyTriangle> CopyGraph::triangles(const std::vector<bool>& allowed) const {
  std::vector<CopyTriangle> out;
  for (const auto& t : pair_triangles_) {
    auto ks = t.edge_keys();
    for (int a : copies(ks[0])) {
      if (!allowed[static_cast<size_t>(a)]) continue;
      for (int b : copies(ks[1])) {
        if (!allowed[static_cast<size_t>(b)]) continue;
        for (int c : copies(ks[2])) {
          if (!allowed[static_cast<size_t>(c)]) continue;
          CopyTriangle ct{a, b, c};
          std::sort(ct.begin(), ct.end());
          out.push_back(ct);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void SearchBudget::tick() {
  if (++used_ > limit_)
    throw BudgetExceeded("family search exceeded the node budget of " + std::to_string(limit_));
}

std::set<int> family_edges(const Family& f) {
  std::set<int> s;
  for (const auto& t : f) add_edges(s, t);
  return s;
}

bool is_independent(const Family& f) { return family_edges(f).size() == 3 * f.size(); }

Family max_independent_family(const std::vector<CopyTriangle>& candidates,
                              const std::function<bool(const Family&)>& accept,
                              SearchBudget& budget) {
  int max_id = -1;
  for (const auto& t : candidates) max_id = std::max(max_id, t[2]);
  std::vector<char> used(static_cast<size_t>(max_id + 1), 0);
  Family cur, best;
  long long best_size = -1;
  auto fits = [&](const CopyTriangle& t) {
    return !used[static_cast<size_t>(t[0])] && !used[static_cast<size_t>(t[1])] &&
           !used[static_cast<size_t>(t[2])];
  };
  std::function<void(size_t)> dfs = [&](size_t i) {
    budget.tick();
    long long ub = static_cast<long long>(cur.size());
    for (size_t j = i; j < candidates.size(); ++j) ub += fits(candidates[j]) ? 1 : 0;
    if (ub <= best_size) return;
    if (i == candidates.size()) {
      if (!accept || accept(cur)) {
        best_size = static_cast<long long>(cur.size());
        best = cur;
      }
      return;
    }
    const CopyTriangle& t = candidates[i];
    if (fits(t)) {
      for (int e : t) used[static_cast<size_t>(e)] = 1;
      cur.push_back(t);
      dfs(i + 1);
      cur.pop_back();
      for (int e : t) used[static_cast<size_t>(e)] = 0;
    }
    dfs(i + 1);
  };
  dfs(0);
  return best;
}

HaxellState build_state(const Multigraph& g, const HaxellOptions& opts) {
  HaxellState st(g);
  const CopyGraph& cg = st.graph;
  SearchBudget budget(opts.node_budget);
  const std::vector<bool> everywhere(static_cast<size_t>(cg.edge_count()), true);

  // B: a maximum packing, realized on distinct copies.
  auto nu = nu_exact(g);
  st.nu = nu.value;
  st.in_gprime = everywhere;
  if (st.nu == 0) return st;
  std::map<EdgeKey, size_t> next;
  for (const auto& [t, m] : nu.certificate.multiplicity) {
    for (Weight r = 0; r < m; ++r) {
      CopyTriangle ct{};
      auto ks = t.edge_keys();
      for (size_t i = 0; i < 3; ++i) ct[i] = cg.copies(ks[i]).at(next[ks[i]]++);
      std::sort(ct.begin(), ct.end());
      st.B.push_back(ct);
    }
  }
  std::sort(st.B.begin(), st.B.end());
  require(is_independent(st.B) && static_cast<Weight>(st.B.size()) == st.nu, "B is not a packing");
  const Rational nu_r(st.nu);

  const auto all = cg.triangles();
  const Owner ob = owner_of(st.B);
  const std::set<int> eb = family_edges(st.B);
  std::vector<CopyTriangle> type1;
  for (const auto& t : all) {
    int k = type_count(t, ob);
    require(k >= 1, "B is not maximal");
    if (k == 1) type1.push_back(t);
  }
  st.B1 = max_independent_family(type1, {}, budget);
  st.anchor1 = anchors(cg, st.B1, st.B, everywhere);

  const std::set<int> eb1 = family_edges(st.B1);
  for (int e : eb1) st.in_gprime[static_cast<size_t>(e)] = false;
  const auto tri_gp = cg.triangles(st.in_gprime);
  std::vector<CopyTriangle> type2;
  for (const auto& t : tri_gp) {
    int k = type_count(t, ob);
    require(k >= 2, "G' has a triangle of type (B,1)");
    if (k == 2) type2.push_back(t);
  }
  require(static_cast<Weight>(max_independent_family(tri_gp, {}, budget).size()) ==
              st.nu - static_cast<Weight>(st.B1.size()),
          "nu(G') != (1 - gamma) nu");
  st.B2 = max_independent_family(type2, {}, budget);

  const size_t need = st.B2.size();
  auto enough_new = [&](const Family& f) {
    size_t fresh = 0;
    for (int e : family_edges(f)) fresh += eb.count(e) ? 0 : 1;
    return fresh >= need;
  };
  Family bp = max_independent_family(tri_gp, enough_new, budget);
  require(bp.size() >= need, "no admissible B'");
  Family b1p = max_independent_family(b1p_candidates(tri_gp, bp, eb), {}, budget);
  auto anch = anchors(cg, b1p, bp, st.in_gprime);

  // Switch variants only matter when some rung set could host f(T).
  bool any_pairs = std::any_of(anch.begin(), anch.end(),
                               [](const auto& kv) { return kv.second.rungs.size() >= 2; });
  unsigned long long best_mask = 0;
  if (any_pairs) {
    if (static_cast<int>(b1p.size()) > opts.max_switch)
      throw BudgetExceeded("B1' has " + std::to_string(b1p.size()) +
                           " members; switch enumeration is limited to " +
                           std::to_string(opts.max_switch));
    int best_i = -1;
    for (unsigned long long mask = 0; mask < (1ULL << b1p.size()); ++mask) {
      Switched s = apply_switch(bp, b1p, anch, mask);
      auto a = anchors(cg, s.b1p, s.bp, st.in_gprime);
      const std::set<int> sbp = family_edges(s.bp);
      ISearch is{s.b1p, a, sbp, budget, {}, {}, {}, {}, {}, -1, {}, {}};
      is.run();
      if (is.best > best_i) {
        best_i = is.best;
        best_mask = mask;
      }
    }
  }
  Switched chosen = apply_switch(bp, b1p, anch, best_mask);
  st.switch_mask = best_mask;
  st.Bp = chosen.bp;
  st.B1p = chosen.b1p;
  require(is_independent(st.Bp) && enough_new(st.Bp) && st.Bp.size() == bp.size(),
          "switched B' is not admissible");
  require(max_independent_family(b1p_candidates(tri_gp, st.Bp, eb), {}, budget).size() ==
              st.B1p.size(),
          "switched B1' is not maximum");
  st.anchor1p = anchors(cg, st.B1p, st.Bp, st.in_gprime);

  const std::set<int> ebp = family_edges(st.Bp);
  ISearch is{st.B1p, st.anchor1p, ebp, budget, {}, {}, {}, {}, {}, -1, {}, {}};
  is.run();
  for (size_t i = 0; i < st.B1p.size(); ++i) {
    if (is.best_a[i] < 0) continue;
    st.I.push_back(st.B1p[i]);
    st.fmap[st.B1p[i]] = {is.best_a[i], is.best_b[i]};
  }

  // E0 = E[B' \ B1'^] u {e(T) : T in B1'}.
  std::set<CopyTriangle> hats;
  for (const auto& [t, a] : st.anchor1p) hats.insert(a.hat);
  std::set<int> e0;
  for (const auto& t : st.Bp)
    if (!hats.count(t)) add_edges(e0, t);
  for (const auto& [t, a] : st.anchor1p) e0.insert(a.shared);
  std::set<int> fall;
  for (const auto& [t, f] : st.fmap) fall.insert(f.begin(), f.end());
  for (const auto& t : st.B1p) {
    const auto& rungs = st.anchor1p.at(t).rungs;
    if (std::all_of(rungs.begin(), rungs.end(), [&](int e) { return e0.count(e) > 0; }))
      st.K.push_back(t);
    if (!contains(st.I, t) && std::any_of(t.begin(), t.end(), [&](int e) { return fall.count(e) > 0; }))
      st.Ip.push_back(t);
  }
  for (const auto& t : st.K) require(!contains(st.I, t), "K meets I");

  st.gamma = Rational(static_cast<long long>(st.B1.size())) / nu_r;
  st.beta = Rational(static_cast<long long>(st.B2.size())) / nu_r;
  st.alpha = Rational(static_cast<long long>(st.Bp.size())) / nu_r;
  st.delta = Rational(static_cast<long long>(st.B1p.size())) / nu_r;
  st.eta = Rational(static_cast<long long>(st.I.size())) / nu_r;
  st.eta_p = Rational(static_cast<long long>(st.Ip.size())) / nu_r;
  st.delta0 = Rational(static_cast<long long>(st.K.size())) / nu_r;

  // A = {T1(T), T2(T) : T in I} u (B' \ I^) is independent in G'.
  Family fam;
  std::set<CopyTriangle> ihats;
  for (const auto& t : st.I) {
    const Anchor& a = st.anchor1p.at(t);
    ihats.insert(a.hat);
    const CopyEdge& s = cg.edge(a.shared);
    auto side = [&](const CopyTriangle& tri, Vertex apex, Vertex end) {
      for (int e : tri)
        if (e != a.shared && EdgeKey(cg.edge(e).u, cg.edge(e).v) == EdgeKey(apex, end)) return e;
      throw std::logic_error("haxell: missing side edge");
    };
    const auto& f = st.fmap.at(t);
    for (size_t k = 0; k < 2; ++k) {
      Vertex end = k == 0 ? s.u : s.v;
      CopyTriangle tk{f[k], side(t, a.apex, end), side(a.hat, a.hat_apex, end)};
      std::sort(tk.begin(), tk.end());
      fam.push_back(tk);
    }
  }
  for (const auto& t : st.Bp)
    if (!ihats.count(t)) fam.push_back(t);
  require(is_independent(fam), "T1/T2 family is not independent");
  require(st.alpha + st.eta <= Rational(1) - st.gamma, "alpha + eta > 1 - gamma");
  require(st.eta_p <= Rational(2) * st.eta, "eta' > 2 eta");

  st.nodes = budget.used();
  return st;
}

std::vector<Candidate> candidate_transversals(const Multigraph& g, const HaxellState& st) {
  const CopyGraph& cg = st.graph;
  const Rational nu_r(st.nu);
  std::vector<Candidate> out;

  std::set<EdgeKey> free_pairs;
  for (const auto& t : enumerate_triangles(g))
    for (const auto& k : t.edge_keys())
      if (g.weight(g.edge_id(k)) == 0) free_pairs.insert(k);
  const auto all = cg.triangles();

  auto finish = [&](const std::string& label, std::set<int> c, const Rational& coef) {
    Candidate cand;
    cand.label = label;
    for (const auto& t : all)
      require(std::any_of(t.begin(), t.end(), [&](int e) { return c.count(e) > 0; }),
              label + " misses a triangle");
    std::set<EdgeKey> pairs = free_pairs;
    std::map<EdgeKey, Weight> hits;
    for (int e : c) ++hits[cg.pair(e)];
    for (const auto& [k, n] : hits)
      if (n == static_cast<Weight>(cg.copies(k).size())) pairs.insert(k);
    cand.certificate = make_transversal(g, pairs);
    require(verify_transversal(g, cand.certificate), label + " is not a transversal");
    cand.size = static_cast<Weight>(c.size());
    cand.copies = std::move(c);
    cand.coefficient = coef;
    cand.bound = coef * nu_r;
    cand.within_bound = Rational(cand.size) <= cand.bound;
    out.push_back(std::move(cand));
  };

  const std::set<int> eb = family_edges(st.B);
  const std::set<int> eb1 = family_edges(st.B1);
  const std::set<int> eb2 = family_edges(st.B2);
  const std::set<int> ebp = family_edges(st.Bp);
  const Rational two(2), three(3);

  // C_a
  {
    std::set<CopyTriangle> hats;
    for (const auto& [t, a] : st.anchor1) hats.insert(a.hat);
    std::set<int> c1;
    for (const auto& t : st.B)
      if (!hats.count(t)) add_edges(c1, t);
    for (const auto& [t, a] : st.anchor1) c1.insert(a.shared);
    std::set<int> c = c1;
    for (const auto& [t, a] : st.anchor1) {
      int outside = 0;
      for (int e : a.rungs) outside += c1.count(e) ? 0 : 1;
      require(outside <= 2, "E'(U) \\ C1 has more than two edges");
      c.insert(a.rungs.begin(), a.rungs.end());
    }
    finish("C_a", c, three - two * st.gamma / three);
  }
  // C_b
  {
    std::set<int> c = eb1;
    c.insert(eb2.begin(), eb2.end());
    std::map<EdgeKey, std::vector<int>> h;
    for (int e : eb)
      if (!eb1.count(e) && !eb2.count(e)) h[cg.pair(e)].push_back(e);
    std::vector<Edge> hes;
    for (const auto& [k, ids] : h) hes.push_back(Edge{k.u, k.v, static_cast<Weight>(ids.size())});
    Multigraph hg(cg.vertex_count(), hes);
    if (hg.total_weight() > 0) {
      EdgeCut cut = cut_large(hg);
      for (const auto& [k, ids] : h)
        if (cut.shore[static_cast<size_t>(k.u)] == cut.shore[static_cast<size_t>(k.v)])
          c.insert(ids.begin(), ids.end());
    }
    finish("C_b", c, Rational(3, 2) + Rational(5, 2) * st.gamma + two * st.beta);
  }
  // C_c
  {
    std::set<int> c = eb1;
    for (int e : family_edges(st.B1p)) c.insert(e);
    for (int e : eb)
      if (ebp.count(e)) c.insert(e);
    finish("C_c", c, three * st.gamma + three * st.delta + three * st.alpha - st.beta);
  }
  // C_d
  {
    std::set<CopyTriangle> khat;
    for (const auto& t : st.K) khat.insert(st.anchor1p.at(t).hat);
    std::set<int> c = eb1;
    for (const auto& t : st.Bp)
      if (!khat.count(t)) add_edges(c, t);
    for (const auto& t : st.K) c.insert(st.anchor1p.at(t).shared);
    finish("C_d", c, three * st.gamma + three * st.alpha - two * st.delta0);
  }
  // C_e
  {
    std::set<CopyTriangle> hats;
    for (const auto& [t, a] : st.anchor1p) hats.insert(a.hat);
    std::set<int> c = eb1;
    for (const auto& t : st.Bp)
      if (!hats.count(t)) add_edges(c, t);
    for (const auto& [t, a] : st.anchor1p) c.insert(a.shared);
    for (const auto& t : st.I) {
      add_edges(c, t);
      add_edges(c, st.anchor1p.at(t).hat);
      const auto& f = st.fmap.at(t);
      c.insert(f.begin(), f.end());
    }
    for (const auto& t : st.Ip) add_edges(c, st.anchor1p.at(t).hat);
    for (const auto& t : st.K) add_edges(c, st.anchor1p.at(t).hat);
    for (const auto& t : st.B1p) {
      if (contains(st.I, t) || contains(st.Ip, t) || contains(st.K, t)) continue;
      const auto& r = st.anchor1p.at(t).rungs;
      c.insert(r.begin(), r.end());
    }
    finish("C_e", c, three - st.delta + Rational(4) * st.eta + st.delta0);
  }
  return out;
}

HaxellResult haxell_construct(const Multigraph& g, const HaxellOptions& opts) {
  HaxellResult r{build_state(g, opts), {}, 0, {}};
  r.candidates = candidate_transversals(g, r.state);
  for (size_t i = 1; i < r.candidates.size(); ++i)
    if (r.candidates[i].certificate.weight < r.candidates[r.best].certificate.weight) r.best = i;
  r.certificate = r.candidates[r.best].certificate;
  return r;
}

TransversalCertificate transversal_292(const Multigraph& g, const HaxellOptions& opts) {
  return haxell_construct(g, opts).certificate;
}

}  // namespace tuza
