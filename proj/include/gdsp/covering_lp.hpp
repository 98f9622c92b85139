#pragma once

// Exact fractional covering LP
//
//   minimize  sum_u M_u   s.t.  M_u >= 0,  sum_{u in S} M_u >= 1  for every S in E
//
// which gives the minimum total storage of a single-file hyper-graph. The
// solver runs a dense tableau simplex on the packing dual
//
//   maximize  sum_S y_S   s.t.  y_S >= 0,  sum_{S contains u} y_S <= 1
//
// whose slack basis is feasible from the start, so no phase one is needed.
// The covering solution is read off the reduced costs of the slacks. Both
// certificates are re-verified before returning.

#include "gdsp/model.hpp"

#include <vector>

namespace gdsp {

struct CoveringLP {
  int num_vars = 0;
  std::vector<std::vector<Vertex>> constraints;  // 1-based vertex subsets

  static CoveringLP from(const HyperGraph& h) { return {h.num_vertices(), h.hyperedges()}; }
};

struct LPSolution {
  Rational optimum;
  MemoryAllocation allocation;
  std::vector<Rational> dual_certificate;  // one entry per constraint, input order
};

namespace detail {

struct Tableau {
  std::vector<std::vector<Rational>> rows;  // constraint rows, coefficients only
  std::vector<Rational> rhs;
  std::vector<Rational> reduced;            // z_j - c_j for the maximization
  Rational objective = 0;
  std::vector<int> basis;

  void pivot(int r, int c) {
    const Rational p = rows[r][c];
    for (auto& x : rows[r]) x /= p;
    rhs[r] /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r || rows[i][c] == 0) continue;
      const Rational factor = rows[i][c];
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        if (rows[r][j] != 0) rows[i][j] -= factor * rows[r][j];
      rhs[i] -= factor * rhs[r];
    }
    if (reduced[c] != 0) {
      const Rational factor = reduced[c];
      for (std::size_t j = 0; j < reduced.size(); ++j)
        if (rows[r][j] != 0) reduced[j] -= factor * rows[r][j];
      objective -= factor * rhs[r];
    }
    basis[r] = c;
  }
};

}  // namespace detail

inline bool check_feasible(const CoveringLP& lp, const MemoryAllocation& m) {
  if (m.size() != lp.num_vars)
    throw Error("allocation has " + std::to_string(m.size()) + " entries for " + std::to_string(lp.num_vars) +
                " vertices");
  for (const auto& s : lp.constraints) {
    Rational covered = 0;
    for (Vertex v : s) covered += m[v];
    if (covered < 1) return false;
  }
  return true;
}

inline bool check_feasible(const HyperGraph& h, const MemoryAllocation& m) {
  return check_feasible(CoveringLP::from(h), m);
}

inline LPSolution solve_covering_lp(const CoveringLP& lp) {
  const int k = lp.num_vars;
  const int m = static_cast<int>(lp.constraints.size());
  for (const auto& s : lp.constraints)
    if (s.empty()) throw Error("covering constraint must be nonempty");

  // Columns: y_0..y_{m-1}, then slacks s_0..s_{k-1}.
  detail::Tableau t;
  t.rows.assign(k, std::vector<Rational>(m + k, Rational(0)));
  t.rhs.assign(k, Rational(1));
  t.reduced.assign(m + k, Rational(0));
  t.basis.resize(k);
  for (int s = 0; s < m; ++s) {
    for (Vertex v : lp.constraints[s]) t.rows.at(v - 1)[s] = 1;
    t.reduced[s] = -1;
  }
  for (int u = 0; u < k; ++u) {
    t.rows[u][m + u] = 1;
    t.basis[u] = m + u;
  }

  // Bland's rule: lowest-index improving column, lowest-index basic variable
  // among ratio ties.
  while (true) {
    int enter = -1;
    for (int j = 0; j < m + k; ++j)
      if (t.reduced[j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rational best_ratio;
    for (int r = 0; r < k; ++r) {
      if (t.rows[r][enter] <= 0) continue;
      Rational ratio = t.rhs[r] / t.rows[r][enter];
      if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && t.basis[r] < t.basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    // The packing polytope is bounded, so an improving column always has a
    // positive entry.
    if (leave < 0) throw Error("covering LP: unbounded dual, which cannot happen for nonempty constraints");
    t.pivot(leave, enter);
  }

  LPSolution sol;
  sol.optimum = t.objective;
  std::vector<Rational> primal(k);
  for (int u = 0; u < k; ++u) primal[u] = t.reduced[m + u];
  sol.allocation = MemoryAllocation(std::move(primal));
  sol.dual_certificate.assign(m, Rational(0));
  for (int r = 0; r < k; ++r)
    if (t.basis[r] < m) sol.dual_certificate[t.basis[r]] = t.rhs[r];

  // Self-check: primal feasible, dual feasible, equal objectives.
  if (!check_feasible(lp, sol.allocation)) throw Error("covering LP: primal certificate failed verification");
  std::vector<Rational> load(k, Rational(0));
  for (int s = 0; s < m; ++s) {
    if (sol.dual_certificate[s] < 0) throw Error("covering LP: negative dual entry");
    for (Vertex v : lp.constraints[s]) load[v - 1] += sol.dual_certificate[s];
  }
  for (const auto& x : load)
    if (x > 1) throw Error("covering LP: dual certificate violates a vertex bound");
  if (sum(sol.dual_certificate) != sol.optimum || sol.allocation.total() != sol.optimum)
    throw Error("covering LP: primal and dual objectives disagree");
  return sol;
}

inline LPSolution solve_covering_lp(const HyperGraph& h) { return solve_covering_lp(CoveringLP::from(h)); }

// Color-blind pairwise bound: any valid code stores at least one file across
// the endpoints of every edge, whatever its color.
inline Rational cutset_lower_bound(const ColoredGraph& g) {
  return solve_covering_lp(underlying_hypergraph(g)).optimum;
}

}  // namespace gdsp
