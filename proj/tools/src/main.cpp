#include <iostream>

#include "CLI11.hpp"
#include "lpvi_cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace lpvi::cli;
  CLI::App app{"lpvi: variational inequalities in l_p spaces via sunny-retraction Picard iteration"};
  app.require_subcommand(1);

  SolveCommandOptions solve;
  std::optional<std::string> solve_lambda;
  auto* s = app.add_subcommand("solve", "Select lambda and run the Picard iteration");
  s->add_option("--config", solve.config, "Problem file (YAML)")->required()->check(CLI::ExistingFile);
  s->add_option("--out", solve.out, "Trace CSV (iter,step_norm,residual)");
  s->add_option("--summary", solve.summary, "Summary JSON file (default: standard output)");
  s->add_option("--tol", solve.tol, "Relative step tolerance");
  s->add_option("--max-iter", solve.max_iter, "Iteration cap");
  s->add_option("--lambda", solve.lambda, "Step size, or 'auto'");

  CheckMapOptions check{.seed = default_seed()};
  auto* c = app.add_subcommand("check-map", "Sample-based Lipschitz and cocoercivity checks");
  c->add_option("--config", check.config, "Problem file (YAML)")->required()->check(CLI::ExistingFile);
  c->add_option("--seed", check.seed, "Sampling seed (default $LPVI_SEED or 1)");
  c->add_option("--count", check.samples, "Number of sampled pairs");

  VerifyOptions verify{.seed = default_seed()};
  auto* v = app.add_subcommand("verify", "Run a property sweep");
  v->add_option("suite", verify.suite, "duality | retraction | pairing | remark")
      ->required()
      ->check(CLI::IsMember({"duality", "retraction", "pairing", "remark"}));
  v->add_option("--seed", verify.seed, "Sweep seed (default $LPVI_SEED or 1)");
  v->add_option("--count", verify.count, "Samples per sweep");
  v->add_option("--p", verify.p, "Restrict to one exponent");

  OracleOptions oracle;
  std::string grid_text;
  auto* o = app.add_subcommand("oracle", "Brute-force grid oracle and agreement check");
  o->add_option("--config", oracle.config, "Problem file (YAML)")->required()->check(CLI::ExistingFile);
  o->add_option("--grid", grid_text, "Points per axis, e.g. 41x41");
  o->add_option("--out", oracle.out, "Accepted-set CSV (default: standard output)");
  o->add_option("--lambda", oracle.lambda, "Step size for the comparison solve");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  if (*s) return cmd_solve(solve, std::cout, std::cerr);
  if (*c) return cmd_check_map(check, std::cout, std::cerr);
  if (*v) return cmd_verify(verify, std::cout, std::cerr);
  try {
    if (!grid_text.empty()) oracle.grid = parse_grid(grid_text);
  } catch (const lpvi::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  }
  return cmd_oracle(oracle, std::cout, std::cerr);
}
