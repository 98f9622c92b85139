#pragma once

// Command implementations behind tools/gdsp. Every command builds a JSON
// report and a text rendering of the same data; run() prints one of them.
// Exit codes: 0 success, 2 infeasible/invalid verdict, 1 usage or parse error.

#include "gdsp/covering_lp.hpp"
#include "gdsp/fixtures.hpp"
#include "gdsp/flow.hpp"
#include "gdsp/io.hpp"
#include "gdsp/linear_code.hpp"
#include "gdsp/oracle.hpp"
#include "gdsp/superposition.hpp"

#include <openssl/evp.h>

#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

namespace gdsp::cli {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kRejected = 2;

struct Command {
  std::string name;
  std::string instance;
  std::string partition;   // decompose: overrides the instance's partition
  std::string code;        // verify: code to check; decompose: code for the two-cluster split
  std::string global;      // decompose: global allocation for the frontier split
  std::string allocation;  // flow
  std::string emit_code;   // solve / decompose / oracle: write the witness here
  std::string export_path; // flow: edge-list export
  std::string output;      // write the report here instead of stdout
  std::string directory;   // fixtures
  std::string claim;       // oracle: certify a claimed optimum
  bool json = false;
  OracleConfig oracle;
};

struct Report {
  Json data;
  std::ostringstream text;
  int status = kOk;
};

inline std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("sha256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

// Hash of the canonical serialization, so formatting differences in the
// input file do not change it.
inline std::string instance_hash(const Instance& inst) { return sha256_hex(instance_to_json(inst).dump()); }

inline std::string num(const Rational& r) {
  if (denominator_of(r) == 1) return to_string(r);
  return to_string(r) + " (" + to_decimal(r) + ")";
}

inline std::string list(const std::vector<Rational>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + to_string(xs[i]);
  return s + "]";
}

template <class T>
std::string list_of(const std::vector<T>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

inline std::string edge_str(const ColoredEdge& e) {
  return "({" + std::to_string(e.a) + "," + std::to_string(e.b) + "}," + std::to_string(e.color) + ")";
}

inline Json edge_json(const ColoredEdge& e) { return Json::array({e.a, e.b, e.color}); }

// Single-file view: a hyper-graph instance, or a colored graph with at most
// one color.
inline std::optional<HyperGraph> single_file_view(const Instance& inst) {
  if (inst.hypergraph) return inst.hypergraph;
  if (inst.graph->colors_used().size() <= 1) return monochrome_to_hypergraph(*inst.graph);
  return std::nullopt;
}

inline void header(Report& r, const std::string& command, const Instance& inst) {
  r.data["command"] = command;
  r.data["instance_sha256"] = instance_hash(inst);
  r.data["num_vertices"] = inst.num_vertices;
  r.data["num_files"] = inst.spec.num_files;
  if (!inst.color_map.empty()) {
    Json m = Json::object();
    for (const auto& [from, to] : inst.color_map) m[std::to_string(from)] = to;
    r.data["color_map"] = m;
  }
  r.text << command << "  instance " << r.data["instance_sha256"].get<std::string>().substr(0, 16) << "  K=" << inst.num_vertices
         << " N=" << inst.spec.num_files << "\n";
  if (!inst.note.empty()) r.text << "note: " << inst.note << "\n";
  for (const auto& [from, to] : inst.color_map) r.text << "color " << from << " -> " << to << "\n";
}

inline Json allocation_json(const MemoryAllocation& m) { return rational_list_json(m.sizes()); }

inline void write_code(const std::string& path, const LinearCode& code) { write_file(path, code_to_json(code).dump(2) + "\n"); }

// ---------------------------------------------------------------------------

inline void cmd_solve(const Command& cmd, const Instance& inst, Report& r) {
  header(r, "solve", inst);
  auto h = single_file_view(inst);
  if (!h) throw FormatError("solve needs a single-file instance (hyperedges, or edges of one color); use decompose");
  auto sol = solve_covering_lp(*h);
  r.data["optimum"] = rational_json(sol.optimum);
  r.data["allocation"] = allocation_json(sol.allocation);
  Json dual = Json::array();
  for (std::size_t i = 0; i < h->hyperedges().size(); ++i) {
    Json d;
    d["hyperedge"] = h->hyperedges()[i];
    d["weight"] = to_string(sol.dual_certificate[i]);
    dual.push_back(d);
  }
  r.data["dual_certificate"] = dual;
  r.text << "optimum " << num(sol.optimum) << "\n";
  for (Vertex u = 1; u <= h->num_vertices(); ++u) r.text << "  M_" << u << " = " << to_string(sol.allocation[u]) << "\n";
  r.text << "dual certificate (sum " << to_string(sum(sol.dual_certificate)) << ")\n";
  for (std::size_t i = 0; i < h->hyperedges().size(); ++i)
    if (sol.dual_certificate[i] != 0)
      r.text << "  y" << list_of(h->hyperedges()[i]) << " = " << to_string(sol.dual_certificate[i]) << "\n";

  if (!cmd.emit_code.empty()) {
    const int F = lcm_of_denominators(sol.allocation.sizes()).convert_to<int>();
    const long long rows = (sol.allocation.total() * F).convert_to<long long>();
    const int q = static_cast<int>(detail::smallest_prime_above(std::max(rows, 1LL)));
    auto code = build_mds_single_file(*h, sol.allocation, FileSpec{1, F, q});
    auto v = hyperedge_verify(code, *h);
    write_code(cmd.emit_code, code);
    Json w;
    w["symbols_per_file"] = F;
    w["field_order"] = q;
    w["valid"] = v.valid;
    w["total"] = to_string(v.total);
    r.data["witness"] = w;
    r.text << "witness F=" << F << " q=" << q << " total " << num(v.total) << (v.valid ? " valid" : " INVALID") << "\n";
    if (!v.valid) r.status = kRejected;
  }
}

inline Json decomposition_json(const DecompositionResult& d) {
  Json j;
  j["color_classes"] = d.partition.color_classes;
  j["vertex_clusters"] = d.partition.vertex_clusters;
  j["applicability"] = applicability_name(d.applicability);
  j["exact"] = d.exact;
  j["total"] = rational_json(d.total());
  j["combined"] = allocation_json(d.combined);
  Json cl = Json::array();
  for (const auto& c : d.clusters) {
    Json x;
    x["colors"] = c.colors;
    x["method"] = c.method;
    x["exact"] = c.exact;
    x["total"] = to_string(c.allocation.total());
    x["allocation"] = allocation_json(c.allocation);
    if (c.nested) x["nested"] = decomposition_json(*c.nested);
    cl.push_back(x);
  }
  j["clusters"] = cl;
  if (!d.notes.empty()) j["notes"] = d.notes;
  return j;
}

inline void decomposition_text(std::ostream& os, const DecompositionResult& d, int depth) {
  const std::string pad(2 * depth, ' ');
  for (std::size_t l = 0; l < d.clusters.size(); ++l) {
    const auto& c = d.clusters[l];
    os << pad << "cluster " << l + 1 << " colors " << list_of(c.colors) << " method " << c.method << " total "
       << num(c.allocation.total()) << (c.exact ? "" : " (not certified)") << "\n";
    os << pad << "  allocation " << list(c.allocation.sizes()) << "\n";
    if (c.nested) decomposition_text(os, *c.nested, depth + 2);
  }
  for (const auto& n : d.notes) os << pad << "note: " << n << "\n";
}

inline void cmd_decompose(const Command& cmd, const Instance& inst, Report& r) {
  header(r, "decompose", inst);
  if (!inst.graph) throw FormatError("decompose needs a colored-graph instance");
  const auto& g = *inst.graph;
  auto tree = cmd.partition.empty() ? inst.partition : load_partition(cmd.partition, inst.color_map);
  if (!tree) throw FormatError("decompose needs a partition (in the instance or via --partition)");
  const Partition p = normalize_partition(tree->partition, g.num_vertices());

  auto smooth = check_smooth(g, p);
  r.data["smooth"] = smooth.smooth;
  if (!smooth.smooth) {
    Json v = Json::array();
    for (const auto& e : smooth.violations) v.push_back(edge_json(e));
    r.data["violations"] = v;
    r.text << "partition is not smooth; violating edges:\n";
    for (const auto& e : smooth.violations) r.text << "  " << edge_str(e) << "\n";
    r.status = kRejected;
    return;
  }
  const auto hyp = check_hypotheses(g, p);
  const auto& f = *hyp.frontiers;
  Json fr = Json::array();
  r.text << "smooth partition, " << p.size() << " clusters\nfrontiers:\n";
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j) {
      Json x;
      x["color_class"] = i + 1;
      x["cluster"] = j + 1;
      x["vertices"] = f.at(i, j);
      fr.push_back(x);
      r.text << "  F[" << i + 1 << "][" << j + 1 << "] = " << list_of(f.at(i, j)) << "\n";
    }
  r.data["frontiers"] = fr;
  Json hj;
  hj["theorem1"] = hyp.theorem1;
  hj["theorem2"] = hyp.theorem2;
  hj["reasons"] = hyp.reasons;
  r.data["hypotheses"] = hj;
  r.text << "frontier-split hypotheses (theorem1): " << (hyp.theorem1 ? "hold" : "fail") << "\n";
  r.text << "two-cluster hypotheses (theorem2): " << (hyp.theorem2 ? "hold" : "fail") << "\n";
  for (const auto& reason : hyp.reasons) r.text << "  " << reason << "\n";

  auto result = sup(g, p, nested_solver(tree));
  r.data["sup"] = decomposition_json(result);
  r.text << "superposition total " << num(result.total()) << "  label " << applicability_name(result.applicability)
         << (result.exact ? "  exact" : "") << "\n";
  decomposition_text(r.text, result, 1);
  r.text << "  combined " << list(result.combined.sizes()) << "\n";

  if (!cmd.emit_code.empty()) {
    auto code = realize_sup_code(g, inst.spec.num_files, result);
    if (!code) throw Error("superposition witness needs every leaf cluster to be LP-solved");
    auto v = verify_valid(*code, g);
    write_code(cmd.emit_code, *code);
    Json w;
    w["symbols_per_file"] = code->spec().symbols_per_file;
    w["field_order"] = code->spec().field_order;
    w["valid"] = v.valid;
    w["total"] = to_string(v.total);
    r.data["sup_code"] = w;
    r.text << "superposition code F=" << code->spec().symbols_per_file << " q=" << code->spec().field_order << " total "
           << num(v.total) << (v.valid ? " valid" : " INVALID") << "\n";
    if (!v.valid) r.status = kRejected;
  }
  if (!cmd.global.empty()) {
    auto d = theorem1_decompose(g, p, parse_allocation(cmd.global));
    r.data["theorem1_split"] = decomposition_json(d);
    r.text << "frontier split of the global allocation, total " << num(d.total()) << "\n";
    decomposition_text(r.text, d, 1);
  }
  if (!cmd.code.empty()) {
    auto d = theorem2_decompose(load_code(cmd.code), g, p);
    r.data["theorem2_split"] = decomposition_json(d);
    r.text << "two-cluster split of the code, total " << num(d.total()) << "\n";
    decomposition_text(r.text, d, 1);
  }
}

inline void cmd_verify(const Command& cmd, const Instance& inst, Report& r) {
  header(r, "verify", inst);
  if (cmd.code.empty()) throw FormatError("verify needs --code");
  auto code = load_code(cmd.code);
  r.data["symbols_per_file"] = code.spec().symbols_per_file;
  r.data["field_order"] = code.spec().field_order;
  r.text << "code F=" << code.spec().symbols_per_file << " q=" << code.spec().field_order << "\n";
  bool valid;
  std::vector<Rational> storage;
  Rational total;
  Json failures = Json::array();
  if (inst.graph) {
    if (code.spec().num_files != inst.spec.num_files)
      throw FormatError("code has " + std::to_string(code.spec().num_files) + " files, instance has " +
                        std::to_string(inst.spec.num_files));
    auto v = verify_valid(code, *inst.graph);
    valid = v.valid;
    storage = v.storage;
    total = v.total;
    for (const auto& e : v.failures) {
      failures.push_back(edge_json(e));
      r.text << "  cannot decode " << edge_str(e) << "\n";
    }
  } else {
    auto v = hyperedge_verify(code, *inst.hypergraph);
    valid = v.valid;
    storage = v.storage;
    total = v.total;
    for (const auto& s : v.failures) {
      failures.push_back(s);
      r.text << "  cannot decode " << list_of(s) << "\n";
    }
  }
  r.data["valid"] = valid;
  r.data["failures"] = failures;
  r.data["storage"] = rational_list_json(storage);
  r.data["total"] = rational_json(total);
  r.text << (valid ? "valid" : "INVALID") << "  total " << num(total) << "\n  storage " << list(storage) << "\n";
  if (!valid) r.status = kRejected;
}

inline void cmd_oracle(const Command& cmd, const Instance& inst, Report& r) {
  header(r, "oracle", inst);
  const auto& cfg = cmd.oracle;
  cfg.validate();
  const auto demands = inst.graph ? demands_of(*inst.graph) : demands_of(*inst.hypergraph);
  const Rational lower = inst.graph ? cutset_lower_bound(*inst.graph) : solve_covering_lp(*inst.hypergraph).optimum;
  Json c;
  c["max_F"] = cfg.max_F;
  c["q"] = cfg.q;
  c["complexity_budget"] = cfg.complexity_budget;
  if (cfg.budget_cap) c["budget_cap"] = to_string(*cfg.budget_cap);
  r.data["config"] = c;
  const double complexity = oracle_complexity(inst.num_vertices, demands, cfg);
  r.data["complexity"] = complexity;
  r.text << "config max_F=" << cfg.max_F << " q=" << cfg.q << " complexity " << to_decimal(Rational(static_cast<long long>(complexity)))
         << " (budget " << cfg.complexity_budget << ")\n";

  if (!cmd.claim.empty()) {
    const Rational claimed = parse_rational(cmd.claim);
    auto v = certify_match(inst.num_vertices, inst.spec.num_files, demands, lower, claimed, cfg);
    r.data["claim"] = to_string(claimed);
    r.data["verdict"] = verdict_name(v);
    r.text << "claim " << num(claimed) << ": " << verdict_name(v) << "\n";
    if (v == Verdict::claimed_too_low || v == Verdict::claimed_too_high) r.status = kRejected;
    return;
  }
  auto res = brute_force_optimum(inst.num_vertices, inst.spec.num_files, demands, lower, cfg);
  r.data["total"] = rational_json(res.total);
  r.data["symbols_per_file"] = res.symbols_per_file;
  r.data["complete"] = res.complete;
  r.data["exact"] = res.exact;
  r.data["lower_bound"] = to_string(res.lower_bound);
  if (!res.note.empty()) r.data["note"] = res.note;
  r.text << (res.complete ? "optimum over linear codes " : "upper bound ") << num(res.total) << " at F=" << res.symbols_per_file
         << "\nlower bound " << num(res.lower_bound) << (res.exact ? "  (tight)" : "") << "\n";
  if (!res.note.empty()) r.text << "note: " << res.note << "\n";
  if (res.witness) {
    r.data["witness_storage"] = allocation_json(allocation_of(*res.witness));
    r.text << "witness storage " << list(allocation_of(*res.witness).sizes()) << "\n";
    if (!cmd.emit_code.empty()) write_code(cmd.emit_code, *res.witness);
  }
}

inline void cmd_bounds(const Command& cmd, const Instance& inst, Report& r) {
  header(r, "bounds", inst);
  (void)cmd;
  if (inst.hypergraph) {
    auto sol = solve_covering_lp(*inst.hypergraph);
    r.data["lower"] = rational_json(sol.optimum);
    r.data["upper"] = rational_json(sol.optimum);
    r.data["upper_source"] = "lp";
    r.text << "lower " << num(sol.optimum) << "  upper " << num(sol.optimum) << " (single file: the LP is tight)\n";
    return;
  }
  const auto& g = *inst.graph;
  const Rational lower = cutset_lower_bound(g);
  auto colors = g.colors_used();
  Rational upper;
  std::string source;
  if (colors.empty()) {
    upper = 0;
    source = "empty";
  } else {
    auto single = sup(g, singleton_split(g, colors));
    upper = single.total();
    source = "singleton-classes";
    r.data["singleton_upper"] = to_string(upper);
  }
  r.text << "cut-set lower bound " << num(lower) << "\n";
  r.text << "singleton-class superposition " << num(upper) << "\n";
  if (inst.partition) {
    const Partition p = normalize_partition(inst.partition->partition, g.num_vertices());
    if (check_smooth(g, p).smooth) {
      auto res = sup(g, p, nested_solver(inst.partition));
      r.data["partition_upper"] = to_string(res.total());
      r.text << "partition superposition " << num(res.total()) << " (" << applicability_name(res.applicability) << ")\n";
      if (res.total() < upper) {
        upper = res.total();
        source = "partition";
      }
    } else {
      r.text << "partition is not smooth; skipped\n";
    }
  }
  r.data["lower"] = rational_json(lower);
  r.data["upper"] = rational_json(upper);
  r.data["upper_source"] = source;
  r.data["gap"] = to_string(upper - lower);
  r.text << "lower " << num(lower) << "  upper " << num(upper) << "  gap " << num(upper - lower) << "\n";
}

inline void cmd_flow(const Command& cmd, const Instance& inst, Report& r) {
  header(r, "flow", inst);
  auto h = single_file_view(inst);
  if (!h) throw FormatError("flow needs a single-file instance");
  if (cmd.allocation.empty()) throw FormatError("flow needs --allocation");
  auto m = parse_allocation(cmd.allocation);
  auto net = build_flow_network(*h, m);
  auto v = rate_one_feasible(net);
  const bool lp_feasible = check_feasible(*h, m);
  r.data["allocation"] = allocation_json(m);
  r.data["feasible"] = v.feasible;
  r.data["covering_feasible"] = lp_feasible;
  r.data["min_cut_per_sink"] = rational_list_json(v.min_cut_per_sink);
  r.text << "network: " << net.num_nodes() << " nodes, " << net.arcs.size() << " arcs\n";
  for (int s = 0; s < net.num_sinks; ++s)
    r.text << "  sink " << net.sink(s) << " " << list_of(h->hyperedges()[s]) << " min-cut " << num(v.min_cut_per_sink[s])
           << (v.min_cut_per_sink[s] < 1 ? "  < 1" : "") << "\n";
  r.text << "rate one " << (v.feasible ? "feasible" : "INFEASIBLE") << "; covering constraints "
         << (lp_feasible ? "satisfied" : "violated") << "\n";
  if (!cmd.export_path.empty()) {
    std::ostringstream os;
    write_edge_list(os, net);
    write_file(cmd.export_path, os.str());
  }
  if (!v.feasible) r.status = kRejected;
}

inline Instance counterexample_instance() {
  Instance inst;
  inst.spec = fixtures::counterexample_spec();
  inst.num_vertices = fixtures::kCounterexampleVertices;
  inst.graph = fixtures::counterexample_graph();
  inst.partition = fixtures::counterexample_partition_tree();
  inst.note = fixtures::counterexample_note();
  return inst;
}

inline Instance triangle_instance() {
  Instance inst;
  inst.num_vertices = 3;
  inst.hypergraph = HyperGraph(3, {{1, 2}, {1, 3}, {2, 3}});
  return inst;
}

inline void cmd_fixtures(const Command& cmd, Report& r) {
  if (cmd.directory.empty()) throw FormatError("fixtures needs a target directory");
  namespace fs = std::filesystem;
  fs::create_directories(cmd.directory);
  const fs::path dir(cmd.directory);
  auto inst = counterexample_instance();
  write_file((dir / "counterexample.json").string(), instance_to_json(inst).dump(2) + "\n");
  write_file((dir / "triangle.json").string(), instance_to_json(triangle_instance()).dump(2) + "\n");
  auto sup_code = fixtures::counterexample_sup_code();
  auto opt_code = fixtures::counterexample_optimal_code();
  write_code((dir / "counterexample_sup_code.json").string(), sup_code);
  write_code((dir / "counterexample_optimal_code.json").string(), opt_code);
  r.data["command"] = "fixtures";
  r.data["instance_sha256"] = instance_hash(inst);
  r.data["files"] = {"counterexample.json", "triangle.json", "counterexample_sup_code.json",
                     "counterexample_optimal_code.json"};
  r.data["sup_code_total"] = to_string(sup_code.total_storage());
  r.data["optimal_code_total"] = to_string(opt_code.total_storage());
  r.text << "wrote counterexample.json, triangle.json, counterexample_sup_code.json (total "
         << num(sup_code.total_storage()) << "), counterexample_optimal_code.json (total " << num(opt_code.total_storage())
         << ")\n";
}

inline int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  Report r;
  try {
    if (cmd.name == "fixtures") {
      cmd_fixtures(cmd, r);
    } else {
      if (cmd.instance.empty()) throw FormatError(cmd.name + " needs an instance file");
      const Instance inst = load_instance(cmd.instance);
      if (cmd.name == "solve") cmd_solve(cmd, inst, r);
      else if (cmd.name == "decompose") cmd_decompose(cmd, inst, r);
      else if (cmd.name == "verify") cmd_verify(cmd, inst, r);
      else if (cmd.name == "oracle") cmd_oracle(cmd, inst, r);
      else if (cmd.name == "bounds") cmd_bounds(cmd, inst, r);
      else if (cmd.name == "flow") cmd_flow(cmd, inst, r);
      else throw FormatError("unknown command '" + cmd.name + "'");
    }
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  r.data["status"] = r.status;
  const std::string body = cmd.json ? r.data.dump(2) + "\n" : r.text.str();
  if (cmd.output.empty()) {
    out << body;
  } else {
    write_file(cmd.output, body);
  }
  return r.status;
}

}  // namespace gdsp::cli
