#include <stdexcept>
#include <vector>

#include "tuza/exact.hpp"

namespace tuza {

namespace {

// Dense tableau for max c.x s.t. A x <= b, x >= 0 with b >= 0; slack basis start.
class Tableau {
 public:
  Tableau(int rows, int structural) : m_(rows), n_(structural) {
    int cols = n_ + m_;
    a_.assign(static_cast<size_t>(m_), std::vector<Rational>(static_cast<size_t>(cols)));
    rhs_.assign(static_cast<size_t>(m_), Rational());
    reduced_.assign(static_cast<size_t>(cols), Rational());
    basis_.resize(static_cast<size_t>(m_));
    for (int i = 0; i < m_; ++i) {
      a_[static_cast<size_t>(i)][static_cast<size_t>(n_ + i)] = Rational(1);
      basis_[static_cast<size_t>(i)] = n_ + i;
    }
  }

  void set(int row, int col, const Rational& v) { a_[idx(row)][idx(col)] = v; }
  void set_rhs(int row, const Rational& v) { rhs_[idx(row)] = v; }
  // Objective coefficient c_j enters the reduced-cost row as -c_j.
  void set_objective(int col, const Rational& c) { reduced_[idx(col)] = -c; }

  int solve() {
    int pivots = 0;
    const int cols = n_ + m_;
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols; ++j) {
        if (reduced_[idx(j)].sign() < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return pivots;

      int leave = -1;
      Rational best;
      for (int i = 0; i < m_; ++i) {
        const Rational& aij = a_[idx(i)][idx(enter)];
        if (aij.sign() <= 0) continue;
        Rational ratio = rhs_[idx(i)] / aij;
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[idx(i)] < basis_[idx(leave)])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) throw std::logic_error("simplex: unbounded LP");
      pivot(leave, enter);
      ++pivots;
    }
  }

  Rational objective() const { return objective_; }
  Rational reduced(int col) const { return reduced_[idx(col)]; }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(static_cast<size_t>(n_));
    for (int i = 0; i < m_; ++i)
      if (basis_[idx(i)] < n_) x[idx(basis_[idx(i)])] = rhs_[idx(i)];
    return x;
  }

 private:
  static size_t idx(int i) { return static_cast<size_t>(i); }

  void pivot(int r, int c) {
    const int cols = n_ + m_;
    auto& prow = a_[idx(r)];
    Rational inv = Rational(1) / prow[idx(c)];
    for (int j = 0; j < cols; ++j)
      if (!prow[idx(j)].is_zero()) prow[idx(j)] *= inv;
    rhs_[idx(r)] *= inv;

    std::vector<int> support;
    for (int j = 0; j < cols; ++j)
      if (!prow[idx(j)].is_zero()) support.push_back(j);

    auto eliminate = [&](std::vector<Rational>& row, Rational& rhs) {
      Rational factor = row[idx(c)];
      if (factor.is_zero()) return;
      for (int j : support) row[idx(j)] -= factor * prow[idx(j)];
      rhs -= factor * rhs_[idx(r)];
    };
    for (int i = 0; i < m_; ++i)
      if (i != r) eliminate(a_[idx(i)], rhs_[idx(i)]);
    eliminate(reduced_, objective_);
    basis_[idx(r)] = c;
  }

  int m_;
  int n_;
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> rhs_;
  std::vector<Rational> reduced_;
  std::vector<int> basis_;
  Rational objective_;
};

}  // namespace

LPSolution lp_optimal(const Multigraph& g) {
  Incidence inc = incidence(g);
  // Only edges inside some triangle constrain the LP.
  std::vector<EdgeId> rows;
  std::vector<int> row_of(static_cast<size_t>(g.edge_count()), -1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!inc.edge_triangles[static_cast<size_t>(e)].empty()) {
      row_of[static_cast<size_t>(e)] = static_cast<int>(rows.size());
      rows.push_back(e);
    }
  }
  const int m = static_cast<int>(rows.size());
  const int n = inc.cols();

  LPSolution sol;
  if (n == 0) return sol;

  Tableau tab(m, n);
  for (int t = 0; t < n; ++t) {
    tab.set_objective(t, Rational(1));
    for (EdgeId e : inc.triangle_edges[static_cast<size_t>(t)])
      tab.set(row_of[static_cast<size_t>(e)], t, Rational(1));
  }
  for (int i = 0; i < m; ++i) tab.set_rhs(i, Rational(g.weight(rows[static_cast<size_t>(i)])));

  sol.pivots = tab.solve();
  auto x = tab.primal();
  for (int t = 0; t < n; ++t)
    if (!x[static_cast<size_t>(t)].is_zero())
      sol.packing.values.emplace(inc.triangles[static_cast<size_t>(t)], x[static_cast<size_t>(t)]);
  for (int i = 0; i < m; ++i) {
    Rational y = tab.reduced(n + i);
    if (!y.is_zero()) sol.transversal.values.emplace(g.edge(rows[static_cast<size_t>(i)]).key(), y);
  }
  sol.value = tab.objective();

  if (!is_fractional_packing(g, sol.packing) || !is_fractional_transversal(g, sol.transversal) ||
      sol.packing.value() != sol.value || sol.transversal.value(g) != sol.value)
    throw std::logic_error("simplex: primal/dual certificate check failed");
  return sol;
}

TightSets tight_sets(const Multigraph& g, const LPSolution& s) {
  if (s.packing.value() != s.transversal.value(g))
    throw std::logic_error("tight_sets: primal and dual values differ");
  TightSets out;
  auto load = edge_loads(g, s.packing);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (load[static_cast<size_t>(e)] == Rational(g.weight(e))) out.edges.insert(g.edge(e).key());
  for (const auto& t : enumerate_triangles(g)) {
    Rational sum;
    for (const auto& k : t.edge_keys()) sum += s.transversal.at(k);
    if (sum == Rational(1)) out.triangles.insert(t);
  }
  for (const auto& [e, y] : s.transversal.values)
    if (y.sign() > 0 && !out.edges.count(e))
      throw std::logic_error("tight_sets: edge " + e.str() + " has g > 0 but is not tight");
  for (const auto& [t, x] : s.packing.values)
    if (x.sign() > 0 && !out.triangles.count(t))
      throw std::logic_error("tight_sets: triangle " + t.str() + " has f > 0 but is not tight");
  return out;
}

}  // namespace tuza
