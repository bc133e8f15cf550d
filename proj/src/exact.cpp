#include <algorithm>
#include <limits>
#include <vector>

#include "tuza/exact.hpp"

namespace tuza {

namespace {

size_t at(int i) { return static_cast<size_t>(i); }

class PackingSearch {
 public:
  PackingSearch(const Multigraph& g, const Incidence& inc, Weight cap)
      : inc_(inc), cap_(cap), res_(at(g.edge_count())), x_(at(inc.cols()), 0) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) res_[at(e)] = g.weight(e);
    best_x_ = x_;
  }

  void run() {
    greedy_start();
    if (best_ < cap_) dfs(0, 0);
  }

  Weight best() const { return best_; }
  const std::vector<Weight>& best_x() const { return best_x_; }
  long long nodes() const { return nodes_; }

 private:
  Weight max_use(int t) const {
    Weight m = std::numeric_limits<Weight>::max();
    for (EdgeId e : inc_.triangle_edges[at(t)]) m = std::min(m, res_[at(e)]);
    return m;
  }

  void greedy_start() {
    std::vector<Weight> saved = res_;
    Weight total = 0;
    std::vector<Weight> x(at(inc_.cols()), 0);
    for (int t = 0; t < inc_.cols(); ++t) {
      Weight k = max_use(t);
      x[at(t)] = k;
      total += k;
      for (EdgeId e : inc_.triangle_edges[at(t)]) res_[at(e)] -= k;
    }
    res_ = saved;
    best_ = total;
    best_x_ = x;
  }

  // Upper bound on what triangles t >= from can still add.
  Weight bound(int from) const {
    Weight by_triangles = 0;
    std::vector<Weight> demand(res_.size(), 0);
    for (int t = from; t < inc_.cols(); ++t) {
      Weight k = max_use(t);
      by_triangles += k;
      if (k > 0)
        for (EdgeId e : inc_.triangle_edges[at(t)]) demand[at(e)] += k;
    }
    Weight capacity = 0;
    for (size_t e = 0; e < res_.size(); ++e) capacity += std::min(res_[e], demand[e]);
    return std::min(by_triangles, capacity / 3);
  }

  void dfs(int t, Weight value) {
    ++nodes_;
    if (best_ >= cap_) return;
    // Skip triangles that can no longer be used.
    while (t < inc_.cols() && max_use(t) == 0) ++t;
    if (t == inc_.cols()) {
      if (value > best_) {
        best_ = value;
        best_x_ = x_;
      }
      return;
    }
    if (value + bound(t) <= best_) return;
    Weight k = max_use(t);
    for (Weight use = k; use >= 0; --use) {
      for (EdgeId e : inc_.triangle_edges[at(t)]) res_[at(e)] -= use;
      x_[at(t)] = use;
      dfs(t + 1, value + use);
      x_[at(t)] = 0;
      for (EdgeId e : inc_.triangle_edges[at(t)]) res_[at(e)] += use;
      if (best_ >= cap_) return;
    }
  }

  const Incidence& inc_;
  Weight cap_;
  std::vector<Weight> res_;
  std::vector<Weight> x_;
  std::vector<Weight> best_x_;
  Weight best_ = 0;
  long long nodes_ = 0;
};

class CoverSearch {
 public:
  CoverSearch(const Multigraph& g, const Incidence& inc, Weight floor)
      : g_(g), inc_(inc), floor_(floor), state_(at(g.edge_count()), kFree) {}

  void run() {
    // Zero-weight edges are free; taking all of them is never worse.
    Weight base = 0;
    for (EdgeId e = 0; e < g_.edge_count(); ++e)
      if (g_.weight(e) == 0 && !inc_.edge_triangles[at(e)].empty()) state_[at(e)] = kTaken;
    best_ = std::numeric_limits<Weight>::max();
    for (EdgeId e = 0; e < g_.edge_count(); ++e)
      if (!inc_.edge_triangles[at(e)].empty() && state_[at(e)] == kFree)
        upper_ += g_.weight(e);
    // Taking every triangle edge is always feasible.
    best_ = upper_;
    best_state_.assign(state_.size(), kFree);
    for (EdgeId e = 0; e < g_.edge_count(); ++e)
      if (!inc_.edge_triangles[at(e)].empty()) best_state_[at(e)] = kTaken;
    if (best_ > floor_) dfs(base);
  }

  Weight best() const { return best_; }
  std::vector<EdgeId> chosen() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g_.edge_count(); ++e)
      if (best_state_[at(e)] == kTaken) out.push_back(e);
    return out;
  }
  long long nodes() const { return nodes_; }

 private:
  enum State : char { kFree, kTaken, kForbidden };

  bool covered(int t) const {
    for (EdgeId e : inc_.triangle_edges[at(t)])
      if (state_[at(e)] == kTaken) return true;
    return false;
  }

  // Lower bound from uncovered triangles whose free edges are pairwise disjoint.
  // Returns -1 when some uncovered triangle has no free edge.
  Weight lower_bound() const {
    std::vector<char> used(state_.size(), 0);
    Weight lb = 0;
    for (int t = 0; t < inc_.cols(); ++t) {
      if (covered(t)) continue;
      bool clash = false;
      bool any = false;
      Weight cheapest = std::numeric_limits<Weight>::max();
      for (EdgeId e : inc_.triangle_edges[at(t)]) {
        if (state_[at(e)] != kFree) continue;
        any = true;
        clash = clash || used[at(e)];
        cheapest = std::min(cheapest, g_.weight(e));
      }
      if (!any) return -1;
      if (clash) continue;
      for (EdgeId e : inc_.triangle_edges[at(t)])
        if (state_[at(e)] == kFree) used[at(e)] = 1;
      lb += cheapest;
    }
    return lb;
  }

  void dfs(Weight cost) {
    ++nodes_;
    if (best_ <= floor_) return;
    int first = -1;
    for (int t = 0; t < inc_.cols(); ++t) {
      if (!covered(t)) {
        first = t;
        break;
      }
    }
    if (first < 0) {
      if (cost < best_) {
        best_ = cost;
        best_state_ = state_;
      }
      return;
    }
    Weight lb = lower_bound();
    if (lb < 0 || cost + lb >= best_) return;

    std::vector<EdgeId> options;
    for (EdgeId e : inc_.triangle_edges[at(first)])
      if (state_[at(e)] == kFree) options.push_back(e);
    std::sort(options.begin(), options.end());
    std::vector<State> saved = state_;
    for (EdgeId e : options) {
      state_[at(e)] = kTaken;
      dfs(cost + g_.weight(e));
      state_[at(e)] = kForbidden;
      if (best_ <= floor_) break;
    }
    state_ = saved;
  }

  const Multigraph& g_;
  const Incidence& inc_;
  Weight floor_;
  std::vector<State> state_;
  std::vector<State> best_state_;
  Weight best_ = 0;
  Weight upper_ = 0;
  long long nodes_ = 0;
};

}  // namespace

NuResult nu_exact(const Multigraph& g, const ExactOptions& opts) {
  Incidence inc = incidence(g);
  NuResult out;
  if (inc.cols() == 0) return out;
  Weight cap = std::numeric_limits<Weight>::max();
  if (opts.use_lp_bound) cap = lp_optimal(g).value.floor();
  PackingSearch search(g, inc, cap);
  search.run();
  out.value = search.best();
  out.nodes = search.nodes();
  for (int t = 0; t < inc.cols(); ++t)
    out.certificate.add(inc.triangles[at(t)], search.best_x()[at(t)]);
  return out;
}

TauResult tau_exact(const Multigraph& g, const ExactOptions& opts) {
  Incidence inc = incidence(g);
  TauResult out;
  if (inc.cols() == 0) return out;
  Weight floor = 0;
  if (opts.use_lp_bound) floor = lp_optimal(g).value.ceil();
  CoverSearch search(g, inc, floor);
  search.run();
  std::set<EdgeKey> keys;
  for (EdgeId e : search.chosen()) keys.insert(g.edge(e).key());
  out.certificate = make_transversal(g, std::move(keys));
  out.value = out.certificate.weight;
  out.nodes = search.nodes();
  return out;
}

}  // namespace tuza
