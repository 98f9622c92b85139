#include "gdsp/cli.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
  using gdsp::cli::Command;
  CLI::App app{"Storage allocation solver for graph-based distributed storage"};
  app.require_subcommand(1);
  Command cmd;
  std::string budget_cap;

  auto common = [&](CLI::App* sub, bool needs_instance) {
    if (needs_instance) sub->add_option("instance", cmd.instance, "instance JSON file")->required();
    sub->add_flag("--json", cmd.json, "emit a JSON report");
    sub->add_option("-o,--output", cmd.output, "write the report to a file");
  };

  auto* solve = app.add_subcommand("solve", "exact covering LP for a single-file instance");
  common(solve, true);
  solve->add_option("--emit-code", cmd.emit_code, "write an MDS witness code");

  auto* decompose = app.add_subcommand("decompose", "smoothness check, frontiers and superposition");
  common(decompose, true);
  decompose->add_option("--partition", cmd.partition, "partition JSON (overrides the instance's)");
  decompose->add_option("--emit-code", cmd.emit_code, "write the superposition code");
  decompose->add_option("--global", cmd.global, "global allocation to split across clusters, e.g. 1/2,1/2,1");
  decompose->add_option("--code", cmd.code, "valid code to split across two clusters");

  auto* verify = app.add_subcommand("verify", "check that a code serves every demand");
  common(verify, true);
  verify->add_option("code", cmd.code, "code JSON file")->required();

  auto* oracle = app.add_subcommand("oracle", "exhaustive search over small linear codes");
  common(oracle, true);
  oracle->add_option("--max-f", cmd.oracle.max_F, "largest subpacketization tried")->capture_default_str();
  oracle->add_option("--q", cmd.oracle.q, "prime field order")->capture_default_str();
  oracle->add_option("--budget-cap", budget_cap, "ignore codes with total above this");
  oracle->add_option("--time-cap", cmd.oracle.time_cap_seconds, "seconds before giving up")->capture_default_str();
  oracle->add_option("--complexity-budget", cmd.oracle.complexity_budget, "size guard")->capture_default_str();
  oracle->add_option("--claim", cmd.claim, "certify a claimed optimum instead of reporting one");
  oracle->add_option("--emit-code", cmd.emit_code, "write the best code found");

  auto* bounds = app.add_subcommand("bounds", "cut-set lower bound against superposition upper bounds");
  common(bounds, true);

  auto* flow = app.add_subcommand("flow", "rate-one feasibility of an allocation via max-flow");
  common(flow, true);
  flow->add_option("--allocation", cmd.allocation, "comma-separated allocation, e.g. 1/2,1/2,1/2")->required();
  flow->add_option("--export", cmd.export_path, "write the network as an edge list");

  auto* fixtures = app.add_subcommand("fixtures", "write the bundled instances and codes");
  common(fixtures, false);
  fixtures->add_option("directory", cmd.directory, "target directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : gdsp::cli::kUsage;
  }
  cmd.name = app.get_subcommands().front()->get_name();
  if (!budget_cap.empty()) {
    try {
      cmd.oracle.budget_cap = gdsp::parse_rational(budget_cap);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return gdsp::cli::kUsage;
    }
  }
  return gdsp::cli::run(cmd, std::cout, std::cerr);
}
