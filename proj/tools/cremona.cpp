#include <iostream>

#include "CLI11.hpp"

#include "cremona/cli.hpp"

int main(int argc, char** argv) {
  cremona::CliConfig cfg;
  CLI::App app{"Exact verification of the two-blow-up classification"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Run every verification step and report the verdict");
  verify->add_option("--n-max", cfg.n_max, "Largest n in the tuple scan")->check(CLI::Range(9, 100000));
  verify->add_option("--ineq-max", cfg.ineq_max, "Largest n for the a = 1 inequality check")->check(CLI::Range(19, 100000000));
  verify->add_flag("--no-axiom-hc", [&](std::int64_t) { cfg.hc_axiom = false; }, "Disable the imported a = 1 criterion");
  verify->add_option("--threads", cfg.threads, "Scan workers")->check(CLI::Range(1u, 256u));
  verify->add_option("--report", cfg.report_path, "Write the report to PATH");
  verify->add_flag("--json", cfg.json, "Structured output");

  auto* enumerate = app.add_subcommand("enumerate", "List tuples satisfying every numerical constraint");
  enumerate->add_option("--n-max", cfg.n_max, "Largest n")->check(CLI::Range(4, 100000));
  enumerate->add_option("--a-max", cfg.a_max, "Scan a = 1..A instead of the derived bound")->check(CLI::PositiveNumber);
  enumerate->add_flag("--no-axiom-hc", [&](std::int64_t) { cfg.hc_axiom = false; }, "Disable the imported a = 1 criterion");
  enumerate->add_option("--threads", cfg.threads, "Scan workers")->check(CLI::Range(1u, 256u));
  enumerate->add_flag("--json", cfg.json, "Structured output");

  auto* eval = app.add_subcommand("eval", "Evaluate a top-degree expression in H and E");
  eval->add_option("--n", cfg.n, "Ambient dimension")->required();
  eval->add_option("--m", cfg.m, "Center dimension")->required();
  eval->add_option("--deg", cfg.deg, "Center degree: integer, d1 or d2")->required();
  eval->add_option("expr", cfg.expr, "Expression, e.g. \"(2H-E)^9\"")->required();

  auto* exclude = app.add_subcommand("exclude-case2", "Replay the exclusion of the n = 9 configuration");
  exclude->add_flag("--json", cfg.json, "Structured output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cremona::kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return cremona::run_cli(cfg, std::cout, std::cerr);
}
