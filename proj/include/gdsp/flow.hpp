#pragma once

// Single-source network view of a single-file instance: the source feeds K
// server nodes through links of capacity M_1..M_K, and each hyperedge becomes
// a sink wired to its servers by uncapacitated links. Rate one is feasible
// for a sink iff its max-flow is at least one.

#include "gdsp/model.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gdsp {

struct Capacity {
  bool infinite = false;
  Rational value = 0;  // ignored when infinite

  static Capacity unbounded() { return {true, 0}; }
  static Capacity of(Rational v) { return {false, std::move(v)}; }

  std::string str() const { return infinite ? "INF" : to_string(value); }
};

struct Arc {
  int from = 0;
  int to = 0;
  Capacity capacity;
};

// Node numbering: source 0, servers 1..K, sinks K+1..K+|E|.
struct FlowNetwork {
  int num_servers = 0;
  int num_sinks = 0;
  std::vector<Arc> arcs;

  int source() const { return 0; }
  int sink(int index) const { return num_servers + 1 + index; }
  int num_nodes() const { return num_servers + num_sinks + 1; }
};

inline FlowNetwork build_flow_network(const HyperGraph& h, const MemoryAllocation& m) {
  if (m.size() != h.num_vertices())
    throw Error("allocation has " + std::to_string(m.size()) + " entries for " + std::to_string(h.num_vertices()) +
                " vertices");
  FlowNetwork net;
  net.num_servers = h.num_vertices();
  net.num_sinks = static_cast<int>(h.hyperedges().size());
  for (Vertex u = 1; u <= h.num_vertices(); ++u) net.arcs.push_back({0, u, Capacity::of(m[u])});
  for (int s = 0; s < net.num_sinks; ++s)
    for (Vertex u : h.hyperedges()[s]) net.arcs.push_back({u, net.sink(s), Capacity::unbounded()});
  return net;
}

// Plain-text export: one "from to capacity" line per arc, capacity either an
// exact fraction or INF.
inline void write_edge_list(std::ostream& os, const FlowNetwork& net) {
  os << "# nodes " << net.num_nodes() << " source 0 servers 1.." << net.num_servers << " sinks "
     << net.num_servers + 1 << ".." << net.num_servers + net.num_sinks << "\n";
  for (const auto& a : net.arcs) os << a.from << ' ' << a.to << ' ' << a.capacity.str() << '\n';
}

namespace detail {

struct ResidualArc {
  int to;
  int reverse;
  Capacity residual;
};

// Edmonds-Karp with BFS visiting neighbors in ascending node order.
inline Rational max_flow(const FlowNetwork& net, int target) {
  const int n = net.num_nodes();
  std::vector<std::vector<ResidualArc>> adj(n);
  std::vector<Arc> sorted = net.arcs;
  std::stable_sort(sorted.begin(), sorted.end(), [](const Arc& a, const Arc& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
  for (const auto& a : sorted) {
    adj[a.from].push_back({a.to, static_cast<int>(adj[a.to].size()), a.capacity});
    adj[a.to].push_back({a.from, static_cast<int>(adj[a.from].size()) - 1, Capacity::of(0)});
  }
  auto positive = [](const Capacity& c) { return c.infinite || c.value > 0; };

  Rational total = 0;
  while (true) {
    std::vector<std::pair<int, int>> parent(n, {-1, -1});
    parent[net.source()] = {net.source(), -1};
    std::deque<int> queue{net.source()};
    while (!queue.empty() && parent[target].first < 0) {
      int u = queue.front();
      queue.pop_front();
      std::vector<int> order(adj[u].size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
      std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return adj[u][x].to < adj[u][y].to; });
      for (int i : order) {
        const auto& e = adj[u][i];
        if (parent[e.to].first >= 0 || !positive(e.residual)) continue;
        parent[e.to] = {u, i};
        queue.push_back(e.to);
      }
    }
    if (parent[target].first < 0) break;
    std::optional<Rational> bottleneck;
    for (int v = target; v != net.source(); v = parent[v].first) {
      const auto& e = adj[parent[v].first][parent[v].second];
      if (!e.residual.infinite && (!bottleneck || e.residual.value < *bottleneck)) bottleneck = e.residual.value;
    }
    // Every source arc is finite, so a path always has a finite bottleneck.
    if (!bottleneck) throw Error("max_flow: path without a finite arc");
    for (int v = target; v != net.source(); v = parent[v].first) {
      auto& e = adj[parent[v].first][parent[v].second];
      if (!e.residual.infinite) e.residual.value -= *bottleneck;
      auto& back = adj[v][e.reverse];
      if (!back.residual.infinite) back.residual.value += *bottleneck;
    }
    total += *bottleneck;
  }
  return total;
}

}  // namespace detail

struct FlowVerdict {
  bool feasible = true;
  std::vector<Rational> min_cut_per_sink;
};

inline FlowVerdict rate_one_feasible(const FlowNetwork& net) {
  FlowVerdict v;
  for (int s = 0; s < net.num_sinks; ++s) {
    Rational cut = detail::max_flow(net, net.sink(s));
    if (cut < 1) v.feasible = false;
    v.min_cut_per_sink.push_back(std::move(cut));
  }
  return v;
}

}  // namespace gdsp
