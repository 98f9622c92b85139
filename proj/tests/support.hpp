#pragma once

// Independent reference implementations and instance generators shared by
// the unit tests and the acceptance binary. Nothing here calls the solver
// code it is used to check.

#include "gdsp/model.hpp"
#include "gdsp/superposition.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace gdsp::testkit {

// Small exact fractions on int64, enough for basis solves with 0/1 data.
struct Frac {
  long long n = 0, d = 1;
  Frac() = default;
  Frac(long long num, long long den = 1) : n(num), d(den) { norm(); }
  void norm() {
    if (d < 0) n = -n, d = -d;
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) n /= g, d /= g;
  }
  friend Frac operator+(Frac a, Frac b) { return Frac(a.n * b.d + b.n * a.d, a.d * b.d); }
  friend Frac operator-(Frac a, Frac b) { return Frac(a.n * b.d - b.n * a.d, a.d * b.d); }
  friend Frac operator*(Frac a, Frac b) { return Frac(a.n * b.n, a.d * b.d); }
  friend Frac operator/(Frac a, Frac b) { return Frac(a.n * b.d, a.d * b.n); }
  friend bool operator<(Frac a, Frac b) { return a.n * b.d < b.n * a.d; }
  bool zero() const { return n == 0; }
  Rational rational() const { return make_rational(n, d); }
};

// Minimum of the covering LP by enumerating every basic solution: pick K
// constraints among {sum_S m >= 1} and {m_u >= 0}, solve them as equalities,
// keep the feasible ones.
inline Rational covering_lp_by_vertices(int K, const std::vector<std::vector<Vertex>>& hyperedges) {
  if (hyperedges.empty()) return 0;
  std::vector<std::vector<int>> rows;
  std::vector<int> rhs;
  for (const auto& s : hyperedges) {
    std::vector<int> r(K, 0);
    for (Vertex v : s) r[v - 1] = 1;
    rows.push_back(r);
    rhs.push_back(1);
  }
  for (int u = 0; u < K; ++u) {
    std::vector<int> r(K, 0);
    r[u] = 1;
    rows.push_back(r);
    rhs.push_back(0);
  }
  const int M = static_cast<int>(rows.size());
  std::optional<Frac> best;
  std::vector<int> pick(K);
  std::vector<bool> mask(M, false);
  std::fill(mask.begin(), mask.begin() + K, true);
  do {
    int t = 0;
    for (int i = 0; i < M; ++i)
      if (mask[i]) pick[t++] = i;
    std::vector<std::vector<Frac>> a(K, std::vector<Frac>(K + 1));
    for (int i = 0; i < K; ++i) {
      for (int j = 0; j < K; ++j) a[i][j] = Frac(rows[pick[i]][j]);
      a[i][K] = Frac(rhs[pick[i]]);
    }
    bool singular = false;
    for (int c = 0; c < K && !singular; ++c) {
      int piv = -1;
      for (int i = c; i < K; ++i)
        if (!a[i][c].zero()) {
          piv = i;
          break;
        }
      if (piv < 0) {
        singular = true;
        break;
      }
      std::swap(a[c], a[piv]);
      for (int i = 0; i < K; ++i) {
        if (i == c || a[i][c].zero()) continue;
        Frac f = a[i][c] / a[c][c];
        for (int j = c; j <= K; ++j) a[i][j] = a[i][j] - f * a[c][j];
      }
    }
    if (singular) continue;
    std::vector<Frac> x(K);
    for (int i = 0; i < K; ++i) x[i] = a[i][K] / a[i][i];
    bool feasible = true;
    for (int i = 0; i < M && feasible; ++i) {
      Frac s(0);
      for (int j = 0; j < K; ++j)
        if (rows[i][j]) s = s + x[j];
      if (s < Frac(rhs[i])) feasible = false;
    }
    if (!feasible) continue;
    Frac obj(0);
    for (auto& v : x) obj = obj + v;
    if (!best || obj < *best) best = obj;
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return best->rational();
}

// Naive exhaustive optimum over linear codes at F = 1 for tiny instances:
// every vertex independently picks any subspace of GF(q)^N, subspaces are
// held as explicit vector sets (bitmasks over all q^N vectors).
class NaiveLinearSearch {
 public:
  NaiveLinearSearch(int q, int n) : q_(q), n_(n) {
    size_ = 1;
    for (int i = 0; i < n; ++i) size_ *= q;
    std::set<std::uint64_t> seen;
    // Spans of every generator set of at most n vectors.
    std::vector<int> gens;
    std::function<void(int)> rec = [&](int start) {
      seen.insert(span_of(gens));
      if (static_cast<int>(gens.size()) == n_) return;
      for (int v = start; v < size_; ++v) {
        gens.push_back(v);
        rec(v + 1);
        gens.pop_back();
      }
    };
    rec(1);
    for (auto s : seen) {
      int count = __builtin_popcountll(s);
      int dim = 0;
      while (count > 1) count /= q_, ++dim;
      spaces_.push_back({s, dim});
    }
  }

  std::size_t num_subspaces() const { return spaces_.size(); }

  // demands: (vertices, file index 0-based); returns the minimum total dimension.
  int optimum(int K, const std::vector<std::pair<std::vector<int>, int>>& demands) const {
    int best = K * n_ + 1;
    std::vector<int> choice(K, 0);
    std::function<void(int, int)> rec = [&](int u, int used) {
      if (used >= best) return;
      if (u == K) {
        for (const auto& [vs, file] : demands)
          if (!contains_unit_closure(vs, choice, file)) return;
        best = used;
        return;
      }
      for (std::size_t s = 0; s < spaces_.size(); ++s) {
        choice[u] = static_cast<int>(s);
        rec(u + 1, used + spaces_[s].dim);
      }
    };
    rec(0, 0);
    return best;
  }

 private:
  struct Space {
    std::uint64_t mask;
    int dim;
  };

  std::vector<int> digits(int v) const {
    std::vector<int> d(n_);
    for (int i = 0; i < n_; ++i) d[i] = v % q_, v /= q_;
    return d;
  }
  int encode(const std::vector<int>& d) const {
    int v = 0;
    for (int i = n_ - 1; i >= 0; --i) v = v * q_ + d[i];
    return v;
  }
  int add(int a, int b) const {
    auto x = digits(a), y = digits(b);
    for (int i = 0; i < n_; ++i) x[i] = (x[i] + y[i]) % q_;
    return encode(x);
  }
  int scale(int a, int c) const {
    auto x = digits(a);
    for (auto& e : x) e = e * c % q_;
    return encode(x);
  }
  std::uint64_t close(std::uint64_t m) const {
    bool grew = true;
    while (grew) {
      grew = false;
      for (int a = 0; a < size_; ++a) {
        if (!(m >> a & 1)) continue;
        for (int c = 1; c < q_; ++c) {
          int s = scale(a, c);
          if (!(m >> s & 1)) m |= 1ULL << s, grew = true;
        }
        for (int b = 0; b < size_; ++b) {
          if (!(m >> b & 1)) continue;
          int s = add(a, b);
          if (!(m >> s & 1)) m |= 1ULL << s, grew = true;
        }
      }
    }
    return m;
  }
  std::uint64_t span_of(const std::vector<int>& gens) const {
    std::uint64_t m = 1;  // zero vector
    for (int g : gens) m |= 1ULL << g;
    return close(m);
  }
  bool contains_unit_closure(const std::vector<int>& vs, const std::vector<int>& choice, int file) const {
    std::uint64_t m = 1;
    for (int v : vs) m |= spaces_[choice[v - 1]].mask;
    m = close(m);
    std::vector<int> unit(n_, 0);
    unit[file] = 1;
    return m >> encode(unit) & 1;
  }

  int q_, n_, size_;
  std::vector<Space> spaces_;
};

// ---------------------------------------------------------------------------
// Generators

inline HyperGraph random_hypergraph(std::mt19937& rng, int max_k, int max_edges) {
  std::uniform_int_distribution<int> kd(1, max_k);
  const int K = kd(rng);
  std::uniform_int_distribution<int> ed(0, max_edges);
  const int E = ed(rng);
  std::uniform_int_distribution<int> mask(1, (1 << K) - 1);
  std::vector<std::vector<Vertex>> hs;
  for (int e = 0; e < E; ++e) {
    int m = mask(rng);
    std::vector<Vertex> s;
    for (int v = 0; v < K; ++v)
      if (m >> v & 1) s.push_back(v + 1);
    hs.push_back(s);
  }
  return HyperGraph(K, hs);
}

// All hypergraphs on K vertices with at most max_edges distinct hyperedges,
// one representative per isomorphism class.
inline std::vector<HyperGraph> hypergraphs_up_to_isomorphism(int K, int max_edges) {
  const int subsets = (1 << K) - 1;
  std::vector<std::vector<int>> perms;
  std::vector<int> p(K);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  auto canonical = [&](const std::vector<int>& masks) {
    std::vector<int> best;
    for (const auto& perm : perms) {
      std::vector<int> img;
      for (int m : masks) {
        int x = 0;
        for (int v = 0; v < K; ++v)
          if (m >> v & 1) x |= 1 << perm[v];
        img.push_back(x);
      }
      std::sort(img.begin(), img.end());
      if (best.empty() || img < best) best = img;
    }
    return best;
  };
  std::set<std::vector<int>> classes;
  std::vector<int> chosen;
  std::function<void(int)> rec = [&](int next) {
    classes.insert(canonical(chosen));
    if (static_cast<int>(chosen.size()) == max_edges) return;
    for (int m = next; m <= subsets; ++m) {
      chosen.push_back(m);
      rec(m + 1);
      chosen.pop_back();
    }
  };
  rec(1);
  std::vector<HyperGraph> out;
  for (const auto& masks : classes) {
    std::vector<std::vector<Vertex>> hs;
    for (int m : masks) {
      std::vector<Vertex> s;
      for (int v = 0; v < K; ++v)
        if (m >> v & 1) s.push_back(v + 1);
      hs.push_back(s);
    }
    out.emplace_back(K, hs);
  }
  return out;
}

inline HyperGraph complete_uniform(int K, int k) {
  std::vector<std::vector<Vertex>> hs;
  std::vector<bool> mask(K, false);
  std::fill(mask.begin(), mask.begin() + k, true);
  do {
    std::vector<Vertex> s;
    for (int v = 0; v < K; ++v)
      if (mask[v]) s.push_back(v + 1);
    hs.push_back(s);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return HyperGraph(K, hs);
}

struct PartitionedGraph {
  ColoredGraph graph;
  Partition partition;
  int num_files = 1;
};

// Random clusters with one color each; every intra-cluster pair becomes an
// edge with probability `density`, every cross pair with probability
// `cross`, colored by one endpoint's cluster. The result is smooth but the
// frontier-disjointness hypothesis is not guaranteed; callers filter.
inline PartitionedGraph random_single_color_clusters(std::mt19937& rng, int K, int L, double density, double cross) {
  std::vector<int> cluster(K + 1);
  std::vector<Vertex> order(K);
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  // Every cluster gets at least one vertex.
  for (int i = 0; i < K; ++i) cluster[order[i]] = i < L ? i : std::uniform_int_distribution<int>(0, L - 1)(rng);
  std::bernoulli_distribution in(density), out(cross), side(0.5);
  std::vector<ColoredEdge> edges;
  for (Vertex a = 1; a <= K; ++a)
    for (Vertex b = a + 1; b <= K; ++b) {
      if (cluster[a] == cluster[b]) {
        if (in(rng)) edges.push_back(make_edge(a, b, cluster[a] + 1));
      } else if (out(rng)) {
        edges.push_back(make_edge(a, b, (side(rng) ? cluster[a] : cluster[b]) + 1));
      }
    }
  PartitionedGraph r{ColoredGraph(K, edges), {}, L};
  r.partition.color_classes.resize(L);
  r.partition.vertex_clusters.resize(L);
  for (int l = 0; l < L; ++l) r.partition.color_classes[l] = {l + 1};
  for (Vertex v = 1; v <= K; ++v) r.partition.vertex_clusters[cluster[v]].push_back(v);
  return r;
}

// Two clusters: class 1 = {1} (the single color), class 2 = colors
// 2..1+extra. Class-2 colors only appear inside cluster 2; cross edges and
// cluster-1 edges carry color 1, so both class-2 frontier sets are empty.
// Vertices are only demanded in one file inside cluster 2, so the
// nontrivial coupling runs through the color-1 cross edges.
inline PartitionedGraph random_two_cluster(std::mt19937& rng, int K, int extra_colors, double density, double cross) {
  std::uniform_int_distribution<int> split(1, K - 1);
  const int k1 = split(rng);
  std::vector<Vertex> order(K);
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> cluster(K + 1);
  for (int i = 0; i < K; ++i) cluster[order[i]] = i < k1 ? 0 : 1;
  std::bernoulli_distribution in(density), out(cross);
  std::uniform_int_distribution<int> pick(2, 1 + extra_colors);
  std::vector<ColoredEdge> edges;
  for (Vertex a = 1; a <= K; ++a)
    for (Vertex b = a + 1; b <= K; ++b) {
      if (cluster[a] != cluster[b]) {
        if (out(rng)) edges.push_back(make_edge(a, b, 1));
      } else if (in(rng)) {
        edges.push_back(make_edge(a, b, cluster[a] == 0 ? 1 : pick(rng)));
      }
    }
  PartitionedGraph r{ColoredGraph(K, edges), {}, 1 + extra_colors};
  r.partition.color_classes = {{1}, {}};
  for (int c = 2; c <= 1 + extra_colors; ++c) r.partition.color_classes[1].push_back(c);
  r.partition.vertex_clusters.resize(2);
  for (Vertex v = 1; v <= K; ++v) r.partition.vertex_clusters[cluster[v]].push_back(v);
  return r;
}

}  // namespace gdsp::testkit
