// Library tour: single-file LP with an MDS witness, then superposition on the
// bundled counterexample against its explicit optimal code.

#include "gdsp/covering_lp.hpp"
#include "gdsp/fixtures.hpp"
#include "gdsp/flow.hpp"
#include "gdsp/linear_code.hpp"
#include "gdsp/oracle.hpp"
#include "gdsp/superposition.hpp"

#include <iostream>

int main() {
  using namespace gdsp;

  // Five servers, every triple must recover the file.
  std::vector<std::vector<Vertex>> triples;
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b)
      for (int c = b + 1; c <= 5; ++c) triples.push_back({a, b, c});
  HyperGraph h(5, triples);
  auto sol = solve_covering_lp(h);
  std::cout << "3-of-5 optimum " << to_string(sol.optimum) << ", per server " << to_string(sol.allocation[1]) << "\n";

  const int F = lcm_of_denominators(sol.allocation.sizes()).convert_to<int>();
  auto code = build_mds_single_file(h, sol.allocation, FileSpec{1, F, 7});
  std::cout << "MDS witness at F=" << F << ": " << (hyperedge_verify(code, h).valid ? "valid" : "invalid") << "\n";
  std::cout << "flow check: " << (rate_one_feasible(build_flow_network(h, sol.allocation)).feasible ? "feasible" : "infeasible")
            << "\n";

  auto g = fixtures::counterexample_graph();
  auto result = sup(g, fixtures::counterexample_partition(), nested_solver(fixtures::counterexample_partition_tree()));
  std::cout << "counterexample: superposition " << to_string(result.total()) << " ("
            << applicability_name(result.applicability) << "), cut-set bound " << to_string(cutset_lower_bound(g)) << "\n";
  auto best = fixtures::counterexample_optimal_code();
  auto v = verify_valid(best, g);
  std::cout << "explicit code total " << to_string(v.total) << (v.valid ? " valid" : " invalid") << "\n";

  // Smallest interesting oracle call: a two-color path.
  ColoredGraph path(3, {make_edge(1, 2, 1), make_edge(2, 3, 2)});
  auto o = brute_force_optimum(path, 2, OracleConfig{});
  std::cout << "path oracle " << to_string(o.total) << (o.complete ? " (complete)" : "") << "\n";
}
