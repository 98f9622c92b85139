#pragma once

// Bundled counterexample instance: a complete bipartite graph between
// v1..v3 and u1..u9 plus three color-4 triangles on {u1,u2,u3},
// {u4,u5,u6}, {u7,u8,u9}. The bipartite edges are colored by the u-group
// they land in: group g = {u_{3g-2}, u_{3g-1}, u_{3g}} gets color g.
//
// Vertex numbering: v_i = i (1..3), u_k = 3 + k (4..12).
//
// Superposition with classes {1,2,3} | {4} costs 27/2, while an explicit
// code reaches 12.

#include "gdsp/linear_code.hpp"
#include "gdsp/superposition.hpp"

#include <memory>

namespace gdsp::fixtures {

constexpr int kCounterexampleVertices = 12;
constexpr int kCounterexampleFiles = 4;

inline Vertex v_vertex(int i) { return i; }
inline Vertex u_vertex(int k) { return 3 + k; }

inline const char* counterexample_note() {
  return "Bipartite edge coloring is a reconstruction: v_i connects to u-groups {u1..u3}, {u4..u6}, "
         "{u7..u9} with colors 1, 2, 3; vertices 1-3 are v1..v3 and 4-12 are u1..u9.";
}

inline ColoredGraph counterexample_graph() {
  std::vector<ColoredEdge> edges;
  for (int i = 1; i <= 3; ++i)
    for (int k = 1; k <= 9; ++k) edges.push_back(make_edge(v_vertex(i), u_vertex(k), (k - 1) / 3 + 1));
  for (int l = 0; l < 3; ++l)
    for (int i = 1; i <= 3; ++i)
      for (int j = i + 1; j <= 3; ++j) edges.push_back(make_edge(u_vertex(i + 3 * l), u_vertex(j + 3 * l), 4));
  return ColoredGraph(kCounterexampleVertices, std::move(edges));
}

inline FileSpec counterexample_spec() { return FileSpec{kCounterexampleFiles, 2, 5}; }

inline Partition counterexample_partition() {
  Partition p;
  p.color_classes = {{1, 2, 3}, {4}};
  p.vertex_clusters = {{1, 2, 3}, {4, 5, 6, 7, 8, 9, 10, 11, 12}};
  return p;
}

// The {1,2,3} cluster splits twice with a single color and an empty partner
// frontier: {1} on u1..u3 versus {2,3} on the rest, then {2} on u4..u6
// versus {3} on the rest.
inline std::shared_ptr<PartitionTree> counterexample_partition_tree() {
  auto inner = std::make_shared<PartitionTree>();
  inner->partition.color_classes = {{2}, {3}};
  inner->partition.vertex_clusters = {{7, 8, 9}, {1, 2, 3, 4, 5, 6, 10, 11, 12}};
  auto middle = std::make_shared<PartitionTree>();
  middle->partition.color_classes = {{1}, {2, 3}};
  middle->partition.vertex_clusters = {{4, 5, 6}, {1, 2, 3, 7, 8, 9, 10, 11, 12}};
  middle->children = {nullptr, inner};
  auto top = std::make_shared<PartitionTree>();
  top->partition = counterexample_partition();
  top->children = {middle, nullptr};
  return top;
}

// F = 2: v_i store A1, A2, A3 in full; in each triangle the three u's store
// A4(1), A4(2) and A4(1) + A4(2).
inline LinearCode counterexample_sup_code() {
  const FileSpec spec = counterexample_spec();
  const std::size_t cols = spec.columns();
  std::vector<Matrix> rows(kCounterexampleVertices);
  for (int i = 1; i <= 3; ++i)
    for (std::size_t c = 0; c < 6; ++c) rows[v_vertex(i) - 1].push_back(unit_row(cols, c));
  const std::size_t a4 = 6;
  for (int l = 0; l < 3; ++l) {
    rows[u_vertex(1 + 3 * l) - 1].push_back(unit_row(cols, a4));
    rows[u_vertex(2 + 3 * l) - 1].push_back(unit_row(cols, a4 + 1));
    Row both(cols, 0);
    both[a4] = both[a4 + 1] = 1;
    rows[u_vertex(3 + 3 * l) - 1].push_back(both);
  }
  return LinearCode(spec, std::move(rows));
}

// F = 1: v_i store A4; u_{3l+k} stores A_{l+1} + (k-1) A4.
inline LinearCode counterexample_optimal_code() {
  const FileSpec spec{kCounterexampleFiles, 1, 5};
  std::vector<Matrix> rows(kCounterexampleVertices);
  for (int i = 1; i <= 3; ++i) rows[v_vertex(i) - 1].push_back({0, 0, 0, 1});
  for (int l = 0; l < 3; ++l)
    for (int k = 1; k <= 3; ++k) {
      Row r(4, 0);
      r[l] = 1;
      r[3] = static_cast<Element>(k - 1);
      rows[u_vertex(3 * l + k) - 1].push_back(r);
    }
  return LinearCode(spec, std::move(rows));
}

}  // namespace gdsp::fixtures
