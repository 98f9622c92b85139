#pragma once

// Instance types for the graphical distributed storage problem: colored
// graphs of servers (vertices) and users (edges), single-file hyper-graphs,
// per-vertex memory allocations and smooth-coloring partitions.
//
// Vertices and colors are 1-based. Cluster / color-class indices inside a
// Partition are 0-based positions.

#include "gdsp/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gdsp {

using Vertex = int;
using Color = int;

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline bool is_prime_power(long long n) {
  if (n < 2) return false;
  long long p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

struct FileSpec {
  int num_files = 1;
  int symbols_per_file = 1;
  int field_order = 5;

  int columns() const { return num_files * symbols_per_file; }

  void validate() const {
    if (num_files < 1) throw Error("num_files must be >= 1");
    if (symbols_per_file < 1) throw Error("symbols_per_file must be >= 1");
    if (!is_prime_power(field_order)) throw Error("field_order must be a prime power >= 2");
  }

  friend bool operator==(const FileSpec&, const FileSpec&) = default;
};

struct ColoredEdge {
  Vertex a = 0;  // a < b after normalization
  Vertex b = 0;
  Color color = 0;

  bool touches(Vertex v) const { return a == v || b == v; }
  Vertex other(Vertex v) const { return a == v ? b : a; }

  friend auto operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
};

inline ColoredEdge make_edge(Vertex i, Vertex j, Color c) {
  return i < j ? ColoredEdge{i, j, c} : ColoredEdge{j, i, c};
}

// Edges are kept in input order with normalized endpoints. Construction does
// not reject duplicate pairs or out-of-range colors: those are reported by
// validate_instance so that a caller can list every problem at once.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  ColoredGraph(int num_vertices, std::vector<ColoredEdge> edges) : num_vertices_(num_vertices) {
    if (num_vertices < 0) throw Error("num_vertices must be >= 0");
    edges_.reserve(edges.size());
    for (const auto& e : edges) edges_.push_back(make_edge(e.a, e.b, e.color));
  }

  int num_vertices() const { return num_vertices_; }
  const std::vector<ColoredEdge>& edges() const { return edges_; }

  std::vector<Color> colors_used() const {
    std::set<Color> s;
    for (const auto& e : edges_) s.insert(e.color);
    return {s.begin(), s.end()};
  }

 private:
  int num_vertices_ = 0;
  std::vector<ColoredEdge> edges_;
};

// Hyperedges are stored sorted; duplicates are dropped keeping the first
// occurrence so constraint order follows the input.
class HyperGraph {
 public:
  HyperGraph() = default;
  HyperGraph(int num_vertices, std::vector<std::vector<Vertex>> hyperedges) : num_vertices_(num_vertices) {
    if (num_vertices < 0) throw Error("num_vertices must be >= 0");
    std::set<std::vector<Vertex>> seen;
    for (auto& s : hyperedges) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      if (s.empty()) throw Error("hyperedge must be nonempty");
      for (Vertex v : s)
        if (v < 1 || v > num_vertices) throw Error("hyperedge vertex " + std::to_string(v) + " out of range");
      if (seen.insert(s).second) hyperedges_.push_back(std::move(s));
    }
  }

  int num_vertices() const { return num_vertices_; }
  const std::vector<std::vector<Vertex>>& hyperedges() const { return hyperedges_; }

 private:
  int num_vertices_ = 0;
  std::vector<std::vector<Vertex>> hyperedges_;
};

// Per-vertex storage in units of files. sizes()[u - 1] belongs to vertex u.
class MemoryAllocation {
 public:
  MemoryAllocation() = default;
  explicit MemoryAllocation(std::vector<Rational> sizes) : sizes_(std::move(sizes)) {
    for (std::size_t i = 0; i < sizes_.size(); ++i)
      if (sizes_[i] < 0)
        throw Error("memory allocation entry for vertex " + std::to_string(i + 1) + " is negative");
  }
  static MemoryAllocation zeros(int k) { return MemoryAllocation(std::vector<Rational>(k, Rational(0))); }

  int size() const { return static_cast<int>(sizes_.size()); }
  const Rational& operator[](Vertex v) const { return sizes_.at(v - 1); }
  const std::vector<Rational>& sizes() const { return sizes_; }
  Rational total() const { return sum(sizes_); }

  friend bool operator==(const MemoryAllocation&, const MemoryAllocation&) = default;

 private:
  std::vector<Rational> sizes_;
};

struct Partition {
  std::vector<std::vector<Color>> color_classes;
  std::vector<std::vector<Vertex>> vertex_clusters;

  int size() const { return static_cast<int>(color_classes.size()); }
};

// Throws unless the color classes are disjoint nonempty sets of positive
// colors and the vertex clusters partition {1..K}, with one cluster per
// class. Clusters may be empty. The colors covered are the union of the
// classes; callers that need {1..N} exactly check partition_colors().
inline Partition normalize_partition(Partition p, int num_vertices) {
  if (p.color_classes.size() != p.vertex_clusters.size())
    throw Error("partition has " + std::to_string(p.color_classes.size()) + " color classes but " +
                std::to_string(p.vertex_clusters.size()) + " vertex clusters");
  if (p.color_classes.empty()) throw Error("partition must have at least one class");
  std::set<Color> colors;
  std::vector<int> vertex_seen(num_vertices + 1, 0);
  for (auto& cls : p.color_classes) {
    if (cls.empty()) throw Error("color class must be nonempty");
    std::sort(cls.begin(), cls.end());
    for (Color c : cls) {
      if (c < 1) throw Error("partition color " + std::to_string(c) + " out of range");
      if (!colors.insert(c).second) throw Error("color " + std::to_string(c) + " appears in two color classes");
    }
  }
  for (auto& cl : p.vertex_clusters) {
    std::sort(cl.begin(), cl.end());
    for (Vertex v : cl) {
      if (v < 1 || v > num_vertices) throw Error("partition vertex " + std::to_string(v) + " out of range");
      if (vertex_seen[v]++) throw Error("vertex " + std::to_string(v) + " appears in two vertex clusters");
    }
  }
  for (int v = 1; v <= num_vertices; ++v)
    if (!vertex_seen[v]) throw Error("vertex " + std::to_string(v) + " is not covered by the vertex clusters");
  return p;
}

inline std::set<Color> partition_colors(const Partition& p) {
  std::set<Color> s;
  for (const auto& cls : p.color_classes) s.insert(cls.begin(), cls.end());
  return s;
}

// Index lookups for a normalized partition.
struct PartitionIndex {
  std::vector<int> class_of_color;     // [color] -> class, -1 if uncovered
  std::vector<int> cluster_of_vertex;  // [vertex] -> cluster

  int class_of(Color c) const { return c >= 0 && c < static_cast<Color>(class_of_color.size()) ? class_of_color[c] : -1; }

  PartitionIndex(const Partition& p, int num_vertices) : cluster_of_vertex(num_vertices + 1, -1) {
    Color top = 0;
    for (const auto& cls : p.color_classes)
      for (Color c : cls) top = std::max(top, c);
    class_of_color.assign(top + 1, -1);
    for (int l = 0; l < p.size(); ++l) {
      for (Color c : p.color_classes[l]) class_of_color.at(c) = l;
      for (Vertex v : p.vertex_clusters[l]) cluster_of_vertex.at(v) = l;
    }
  }
};

// frontier[i][j]: vertices of cluster j with an edge leaving cluster j whose
// color lies in class i.
struct FrontierSets {
  std::vector<std::vector<std::vector<Vertex>>> sets;

  const std::vector<Vertex>& at(int color_class, int cluster) const { return sets.at(color_class).at(cluster); }
  bool contains(int color_class, int cluster, Vertex v) const {
    const auto& s = at(color_class, cluster);
    return std::binary_search(s.begin(), s.end(), v);
  }
};

// ---------------------------------------------------------------------------

struct Violation {
  enum class Kind { duplicate_pair, color_out_of_range, vertex_out_of_range, self_loop };
  Kind kind;
  ColoredEdge edge;
  std::string message;
};

inline std::vector<Violation> validate_instance(const ColoredGraph& g, const FileSpec& spec) {
  std::vector<Violation> out;
  std::map<std::pair<Vertex, Vertex>, Color> pairs;
  for (const auto& e : g.edges()) {
    const std::string where = "edge ({" + std::to_string(e.a) + "," + std::to_string(e.b) + "}," +
                              std::to_string(e.color) + ")";
    if (e.a == e.b) out.push_back({Violation::Kind::self_loop, e, where + ": endpoints must differ"});
    if (e.a < 1 || e.b > g.num_vertices())
      out.push_back({Violation::Kind::vertex_out_of_range, e, where + ": vertex out of range"});
    if (e.color < 1 || e.color > spec.num_files)
      out.push_back({Violation::Kind::color_out_of_range, e,
                     where + ": color outside 1.." + std::to_string(spec.num_files)});
    auto [it, fresh] = pairs.emplace(std::pair{e.a, e.b}, e.color);
    if (!fresh)
      out.push_back({Violation::Kind::duplicate_pair, e,
                     where + ": pair already carries color " + std::to_string(it->second)});
  }
  return out;
}

inline void require_valid(const ColoredGraph& g, const FileSpec& spec) {
  auto v = validate_instance(g, spec);
  if (!v.empty()) throw Error("invalid instance: " + v.front().message);
}

struct SmoothnessReport {
  bool smooth = true;
  std::vector<ColoredEdge> violations;
};

inline SmoothnessReport check_smooth(const ColoredGraph& g, const Partition& raw) {
  Partition p = normalize_partition(raw, g.num_vertices());
  PartitionIndex idx(p, g.num_vertices());
  SmoothnessReport r;
  for (const auto& e : g.edges()) {
    int kc = idx.class_of(e.color);
    if (kc < 0) throw Error("edge color " + std::to_string(e.color) + " is not covered by the partition");
    int ka = idx.cluster_of_vertex.at(e.a), kb = idx.cluster_of_vertex.at(e.b);
    bool ok = (ka == kb) ? kc == ka : (kc == ka || kc == kb);
    if (!ok) {
      r.smooth = false;
      r.violations.push_back(e);
    }
  }
  return r;
}

inline FrontierSets compute_frontiers(const ColoredGraph& g, const Partition& raw) {
  if (!check_smooth(g, raw).smooth) throw Error("compute_frontiers requires a smoothly colored (graph, partition)");
  Partition p = normalize_partition(raw, g.num_vertices());
  PartitionIndex idx(p, g.num_vertices());
  const int L = p.size();
  std::vector<std::vector<std::set<Vertex>>> acc(L, std::vector<std::set<Vertex>>(L));
  for (const auto& e : g.edges()) {
    int ka = idx.cluster_of_vertex[e.a], kb = idx.cluster_of_vertex[e.b];
    if (ka == kb) continue;
    int kc = idx.class_of(e.color);
    acc[kc][ka].insert(e.a);
    acc[kc][kb].insert(e.b);
  }
  FrontierSets f;
  f.sets.assign(L, std::vector<std::vector<Vertex>>(L));
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < L; ++j) f.sets[i][j].assign(acc[i][j].begin(), acc[i][j].end());
  return f;
}

inline ColoredGraph subgraph_by_colors(const ColoredGraph& g, const std::set<Color>& colors) {
  std::vector<ColoredEdge> kept;
  for (const auto& e : g.edges())
    if (colors.count(e.color)) kept.push_back(e);
  return ColoredGraph(g.num_vertices(), std::move(kept));
}

// Accepts an edgeless graph as the degenerate single-color case.
inline HyperGraph monochrome_to_hypergraph(const ColoredGraph& g) {
  if (g.colors_used().size() > 1) throw Error("monochrome_to_hypergraph: graph uses more than one color");
  std::vector<std::vector<Vertex>> hs;
  hs.reserve(g.edges().size());
  for (const auto& e : g.edges()) hs.push_back({e.a, e.b});
  return HyperGraph(g.num_vertices(), std::move(hs));
}

// Color-blind view: every edge as a 2-element hyperedge.
inline HyperGraph underlying_hypergraph(const ColoredGraph& g) {
  std::vector<std::vector<Vertex>> hs;
  for (const auto& e : g.edges()) hs.push_back({e.a, e.b});
  return HyperGraph(g.num_vertices(), std::move(hs));
}

}  // namespace gdsp
