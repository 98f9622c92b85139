#pragma once

// Superposition of per-color-class solutions, and the two constructive
// decompositions that turn a global solution into per-cluster ones when the
// coloring is smooth enough for superposition to be optimal.

#include "gdsp/covering_lp.hpp"
#include "gdsp/linear_code.hpp"

#include <functional>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

namespace gdsp {

enum class Applicability { theorem1, theorem2, heuristic_only };

inline const char* applicability_name(Applicability a) {
  switch (a) {
    case Applicability::theorem1: return "theorem1";
    case Applicability::theorem2: return "theorem2";
    case Applicability::heuristic_only: return "heuristic-only";
  }
  return "heuristic-only";
}

struct DecompositionResult;

struct ClusterOutcome {
  std::vector<Color> colors;
  MemoryAllocation allocation;
  bool exact = false;
  std::string method;                     // "lp", "nested", "singleton-split", "theorem1", "theorem2", ...
  std::optional<Color> lp_color;          // set when solved by the covering LP on one color
  std::optional<LinearCode> code;         // cluster witness, when the method produces one
  std::shared_ptr<const DecompositionResult> nested;
};

struct DecompositionResult {
  Partition partition;
  std::vector<ClusterOutcome> clusters;
  MemoryAllocation combined;
  Applicability applicability = Applicability::heuristic_only;
  bool exact = false;
  std::vector<std::string> notes;

  std::vector<MemoryAllocation> per_cluster_allocations() const {
    std::vector<MemoryAllocation> out;
    for (const auto& c : clusters) out.push_back(c.allocation);
    return out;
  }
  Rational total() const { return combined.total(); }
};

inline MemoryAllocation add(const MemoryAllocation& a, const MemoryAllocation& b) {
  if (a.size() != b.size()) throw Error("allocation length mismatch");
  std::vector<Rational> out(a.size());
  for (int i = 0; i < a.size(); ++i) out[i] = a.sizes()[i] + b.sizes()[i];
  return MemoryAllocation(std::move(out));
}

inline MemoryAllocation allocation_of(const LinearCode& code) {
  std::vector<Rational> s;
  for (Vertex u = 1; u <= code.num_vertices(); ++u) s.push_back(code.storage(u));
  return MemoryAllocation(std::move(s));
}

// ---------------------------------------------------------------------------
// Hypothesis checks

struct HypothesisReport {
  bool smooth = false;
  bool theorem1 = false;
  bool theorem2 = false;
  int theorem2_single_class = -1;  // index of the one-color class when theorem2 holds
  std::optional<FrontierSets> frontiers;
  std::vector<std::string> reasons;  // why a theorem does not apply
};

inline HypothesisReport check_hypotheses(const ColoredGraph& g, const Partition& raw) {
  HypothesisReport r;
  const Partition p = normalize_partition(raw, g.num_vertices());
  auto smooth = check_smooth(g, p);
  r.smooth = smooth.smooth;
  if (!r.smooth) {
    const auto& e = smooth.violations.front();
    r.reasons.push_back("not smoothly colored: edge ({" + std::to_string(e.a) + "," + std::to_string(e.b) + "}," +
                        std::to_string(e.color) + ") violates the partition");
    return r;
  }
  r.frontiers = compute_frontiers(g, p);
  const auto& f = *r.frontiers;
  const int L = p.size();

  bool singletons = true;
  for (int l = 0; l < L; ++l)
    if (p.color_classes[l].size() != 1) {
      singletons = false;
      r.reasons.push_back("theorem1: color class " + std::to_string(l + 1) + " has " +
                          std::to_string(p.color_classes[l].size()) + " colors");
      break;
    }
  bool disjoint = true;
  for (int j = 0; j < L && disjoint; ++j)
    for (int k = 0; k < L && disjoint; ++k)
      for (int l = k + 1; l < L && disjoint; ++l)
        for (Vertex v : f.at(k, j))
          if (f.contains(l, j, v)) {
            disjoint = false;
            r.reasons.push_back("theorem1: frontier sets F[" + std::to_string(k + 1) + "][" + std::to_string(j + 1) +
                                "] and F[" + std::to_string(l + 1) + "][" + std::to_string(j + 1) +
                                "] share vertex " + std::to_string(v));
            break;
          }
  r.theorem1 = singletons && disjoint;

  if (L == 2) {
    for (int a = 0; a < 2 && !r.theorem2; ++a) {
      const int b = 1 - a;
      if (p.color_classes[a].size() != 1) continue;
      if (f.at(b, 0).empty() && f.at(b, 1).empty()) {
        r.theorem2 = true;
        r.theorem2_single_class = a;
      }
    }
    if (!r.theorem2) r.reasons.push_back("theorem2: no one-color class whose partner class has empty frontier sets");
  } else {
    r.reasons.push_back("theorem2: needs exactly two classes");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Algorithm: superposition

// Maps the subgraph retaining cluster `index`'s colors to a feasible solution
// for that subgraph.
using ClusterSolver = std::function<ClusterOutcome(const ColoredGraph& subgraph, const Partition& p, int index)>;

inline ClusterOutcome solve_monochrome_cluster(const ColoredGraph& sub, const std::vector<Color>& colors) {
  auto used = sub.colors_used();
  if (used.size() > 1)
    throw Error("monochrome cluster solver: subgraph uses " + std::to_string(used.size()) +
                " colors; supply a nested partition or another cluster solver");
  auto sol = solve_covering_lp(monochrome_to_hypergraph(sub));
  ClusterOutcome out;
  out.colors = colors;
  out.allocation = sol.allocation;
  out.exact = true;
  out.method = "lp";
  if (!used.empty()) out.lp_color = used.front();
  return out;
}

inline ClusterSolver monochrome_solver() {
  return [](const ColoredGraph& sub, const Partition& p, int index) {
    return solve_monochrome_cluster(sub, p.color_classes.at(index));
  };
}

inline DecompositionResult sup(const ColoredGraph& g, const Partition& raw, const ClusterSolver& solver) {
  DecompositionResult r;
  r.partition = normalize_partition(raw, g.num_vertices());
  const auto hyp = check_hypotheses(g, r.partition);
  r.combined = MemoryAllocation::zeros(g.num_vertices());
  bool all_exact = true;
  for (int l = 0; l < r.partition.size(); ++l) {
    const auto& cls = r.partition.color_classes[l];
    auto sub = subgraph_by_colors(g, std::set<Color>(cls.begin(), cls.end()));
    ClusterOutcome out = solver(sub, r.partition, l);
    if (out.allocation.size() != g.num_vertices()) throw Error("cluster solver returned an allocation of wrong length");
    if (!check_feasible(underlying_hypergraph(sub), out.allocation))
      throw Error("cluster solver returned an allocation violating the pairwise bound on cluster " +
                  std::to_string(l + 1));
    if (out.colors.empty()) out.colors = cls;
    all_exact = all_exact && out.exact;
    r.combined = add(r.combined, out.allocation);
    r.clusters.push_back(std::move(out));
  }
  if (hyp.theorem1)
    r.applicability = Applicability::theorem1;
  else if (hyp.theorem2)
    r.applicability = Applicability::theorem2;
  else
    r.applicability = Applicability::heuristic_only;
  for (const auto& why : hyp.reasons)
    if (r.applicability == Applicability::heuristic_only) r.notes.push_back(why);
  r.exact = r.applicability != Applicability::heuristic_only && all_exact;
  if (r.applicability != Applicability::heuristic_only && !all_exact)
    r.notes.push_back("hypotheses hold but some cluster solutions are not certified optimal");
  return r;
}

inline DecompositionResult sup(const ColoredGraph& g, const Partition& p) { return sup(g, p, monochrome_solver()); }

// Nested partitions: children[l], when present, partitions the cluster-l
// subgraph further. A multi-color cluster without one is split into singleton
// color classes, which is always achievable but carries no optimality claim.
struct PartitionTree {
  Partition partition;
  std::vector<std::shared_ptr<PartitionTree>> children;  // empty or one entry per class
};

inline Partition singleton_split(const ColoredGraph& sub, const std::vector<Color>& colors) {
  Partition p;
  for (Color c : colors) p.color_classes.push_back({c});
  p.vertex_clusters.assign(colors.size(), {});
  for (Vertex v = 1; v <= sub.num_vertices(); ++v) p.vertex_clusters.front().push_back(v);
  return p;
}

inline ClusterSolver nested_solver(std::shared_ptr<const PartitionTree> tree) {
  return [tree](const ColoredGraph& sub, const Partition& p, int index) -> ClusterOutcome {
    const auto& colors = p.color_classes.at(index);
    if (sub.colors_used().size() <= 1) return solve_monochrome_cluster(sub, colors);
    std::shared_ptr<const PartitionTree> child;
    if (tree && index < static_cast<int>(tree->children.size())) child = tree->children[index];
    ClusterOutcome out;
    out.colors = colors;
    if (child) {
      auto nested = sup(sub, child->partition, nested_solver(child));
      out.allocation = nested.combined;
      out.exact = nested.exact;
      out.method = "nested";
      out.nested = std::make_shared<DecompositionResult>(std::move(nested));
    } else {
      auto nested = sup(sub, singleton_split(sub, colors), nested_solver(nullptr));
      nested.notes.push_back("no nested partition supplied; colors split into singleton classes");
      out.allocation = nested.combined;
      out.exact = false;
      out.method = "singleton-split";
      out.nested = std::make_shared<DecompositionResult>(std::move(nested));
    }
    return out;
  };
}

namespace detail {

inline void collect_lp_leaves(const DecompositionResult& r, std::vector<std::pair<Color, MemoryAllocation>>& out,
                              bool& complete) {
  for (const auto& c : r.clusters) {
    if (c.nested) {
      collect_lp_leaves(*c.nested, out, complete);
    } else if (c.method == "lp") {
      if (c.lp_color) out.push_back({*c.lp_color, c.allocation});
    } else {
      complete = false;
    }
  }
}

inline long long smallest_prime_above(long long n) {
  long long p = std::max(2LL, n + 1);
  while (!is_prime(p)) ++p;
  return p;
}

}  // namespace detail

// Builds the superposed witness: one Vandermonde code per LP-solved cluster,
// lifted into its color's columns, all at the common subpacketization
// F = lcm of the allocation denominators. q defaults to the smallest prime
// that gives every cluster code enough distinct evaluation points.
inline std::optional<LinearCode> realize_sup_code(const ColoredGraph& g, int num_files, const DecompositionResult& r,
                                                  std::optional<int> field_order = std::nullopt) {
  std::vector<std::pair<Color, MemoryAllocation>> leaves;
  bool complete = true;
  detail::collect_lp_leaves(r, leaves, complete);
  if (!complete) return std::nullopt;
  std::vector<Rational> all;
  for (const auto& [c, m] : leaves) all.insert(all.end(), m.sizes().begin(), m.sizes().end());
  const int F = lcm_of_denominators(all).convert_to<int>();
  long long max_rows = 0;
  for (const auto& [c, m] : leaves) max_rows = std::max(max_rows, (m.total() * F).convert_to<long long>());
  int q = field_order ? *field_order : static_cast<int>(detail::smallest_prime_above(std::max(max_rows, 1LL)));
  if (q <= max_rows) throw Error("field order " + std::to_string(q) + " too small for the superposed code");
  FileSpec spec{num_files, F, q};
  std::vector<LinearCode> parts{LinearCode::empty(spec, g.num_vertices())};
  for (const auto& [c, m] : leaves) {
    auto sub = subgraph_by_colors(g, {c});
    auto single = build_mds_single_file(monochrome_to_hypergraph(sub), m, FileSpec{1, F, q});
    parts.push_back(lift_to_file(single, spec, c));
  }
  return superpose_codes(parts);
}

// ---------------------------------------------------------------------------
// Constructive decompositions

// Pairwise necessary condition for a global allocation: every edge's
// endpoints hold at least one file between them.
inline void require_pairwise_feasible(const ColoredGraph& g, const MemoryAllocation& m) {
  if (m.size() != g.num_vertices()) throw Error("global allocation length does not match the instance");
  for (const auto& e : g.edges())
    if (m[e.a] + m[e.b] < 1)
      throw Error("global allocation is infeasible: edge ({" + std::to_string(e.a) + "," + std::to_string(e.b) +
                  "}," + std::to_string(e.color) + ") holds " + to_string(m[e.a] + m[e.b]) + " < 1");
}

// Transforms a valid global allocation into one allocation per cluster:
//   interior vertices of V_l keep M*_i;
//   i in F[k][l], k != l, keeps M*_i - (1 - min_j M*_j)^+;
//   i in F[l][k], k != l, gets (1 - min_j M*_j)^+ in cluster l;
//   everything else gets 0.
// The minimum runs over the cross neighbors j of i through edges of the
// frontier's color.
inline DecompositionResult theorem1_decompose(const ColoredGraph& g, const Partition& raw,
                                              const MemoryAllocation& global) {
  DecompositionResult r;
  r.partition = normalize_partition(raw, g.num_vertices());
  const auto& p = r.partition;
  auto hyp = check_hypotheses(g, p);
  if (!hyp.smooth) throw Error("theorem1_decompose: " + hyp.reasons.front());
  if (!hyp.theorem1) throw Error(hyp.reasons.front());
  require_pairwise_feasible(g, global);
  const auto& f = *hyp.frontiers;
  const int L = p.size();
  PartitionIndex idx(p, g.num_vertices());

  auto color_of_class = [&](int l) { return p.color_classes[l].front(); };
  // (1 - min over cross neighbors in cluster `k` through color of class k)^+
  auto deficit = [&](Vertex i, int k, bool& found) {
    const Color c = color_of_class(k);
    std::optional<Rational> least;
    for (const auto& e : g.edges()) {
      if (e.color != c || !e.touches(i)) continue;
      Vertex j = e.other(i);
      if (idx.cluster_of_vertex[j] != k || idx.cluster_of_vertex[i] == k) continue;
      if (!least || global[j] < *least) least = global[j];
    }
    found = least.has_value();
    return found ? positive_part(1 - *least) : Rational(0);
  };

  r.combined = MemoryAllocation::zeros(g.num_vertices());
  for (int l = 0; l < L; ++l) {
    std::vector<Rational> alloc(g.num_vertices(), Rational(0));
    for (Vertex i = 1; i <= g.num_vertices(); ++i) {
      const int home = idx.cluster_of_vertex[i];
      if (home == l) {
        int foreign = -1;
        for (int k = 0; k < L; ++k)
          if (k != l && f.contains(k, l, i)) foreign = k;
        if (foreign < 0) {
          alloc[i - 1] = global[i];
        } else {
          bool found = false;
          Rational d = deficit(i, foreign, found);
          if (!found) r.notes.push_back("vertex " + std::to_string(i) + " has no cross neighbor; treated as interior");
          alloc[i - 1] = global[i] - d;
        }
      } else if (f.contains(l, home, i)) {
        bool found = false;
        Rational d = deficit(i, l, found);
        if (!found) r.notes.push_back("vertex " + std::to_string(i) + " has no cross neighbor; treated as interior");
        alloc[i - 1] = d;
      }
    }
    for (std::size_t i = 0; i < alloc.size(); ++i)
      if (alloc[i] < 0)
        throw Error("theorem1_decompose: global allocation is not achievable (vertex " + std::to_string(i + 1) +
                    " would get a negative share in cluster " + std::to_string(l + 1) + ")");
    ClusterOutcome out;
    out.colors = p.color_classes[l];
    out.allocation = MemoryAllocation(std::move(alloc));
    out.method = "theorem1";
    r.combined = add(r.combined, out.allocation);
    r.clusters.push_back(std::move(out));
  }
  r.applicability = Applicability::theorem1;
  r.exact = false;  // exactness depends on the optimality of `global`
  return r;
}

// Splits a valid code for a two-class instance whose multi-color class has no
// frontier. With A_1 the single color of the one-color class:
//   cluster 1: m_i/F on V_1, I(h_i; A_1)/F on F[1][2], 0 elsewhere;
//   cluster 2: H(h_u | A_1 = 0)/F on V_2, 0 elsewhere,
// and cluster 2 is realized by substituting A_1 = 0 into the code.
inline DecompositionResult theorem2_decompose(const LinearCode& code, const ColoredGraph& g, const Partition& raw) {
  DecompositionResult r;
  r.partition = normalize_partition(raw, g.num_vertices());
  const auto& p = r.partition;
  auto hyp = check_hypotheses(g, p);
  if (!hyp.smooth) throw Error("theorem2_decompose: " + hyp.reasons.front());
  if (!hyp.theorem2) {
    for (const auto& why : hyp.reasons)
      if (why.rfind("theorem2", 0) == 0) throw Error(why);
    throw Error("theorem2: hypotheses do not hold");
  }
  auto verdict = verify_valid(code, g);
  if (!verdict.valid) {
    const auto& e = verdict.failures.front();
    throw Error("theorem2_decompose: code is not valid for the instance (edge ({" + std::to_string(e.a) + "," +
                std::to_string(e.b) + "}," + std::to_string(e.color) + ") cannot decode)");
  }
  const int a = hyp.theorem2_single_class;
  const int b = 1 - a;
  const Color single = p.color_classes[a].front();
  const auto& f = *hyp.frontiers;
  PartitionIndex idx(p, g.num_vertices());

  std::vector<Rational> first(g.num_vertices(), Rational(0)), second(g.num_vertices(), Rational(0));
  std::set<Vertex> second_cluster;
  for (Vertex u = 1; u <= g.num_vertices(); ++u) {
    if (idx.cluster_of_vertex[u] == a) {
      first[u - 1] = code.storage(u);
    } else {
      second_cluster.insert(u);
      if (f.contains(a, b, u)) first[u - 1] = mutual_information_with_file(code, u, single);
      second[u - 1] = conditional_entropy(code, {u}, {single});
    }
  }
  ClusterOutcome c1, c2;
  c1.colors = p.color_classes[a];
  c1.allocation = MemoryAllocation(std::move(first));
  c1.method = "theorem2";
  c2.colors = p.color_classes[b];
  c2.allocation = MemoryAllocation(std::move(second));
  c2.method = "theorem2";
  c2.code = keep_vertices(restrict_code(code, {single}), second_cluster);

  r.clusters.resize(2);
  r.clusters[a] = std::move(c1);
  r.clusters[b] = std::move(c2);
  r.combined = add(r.clusters[0].allocation, r.clusters[1].allocation);
  r.applicability = Applicability::theorem2;
  r.exact = false;
  return r;
}

}  // namespace gdsp
