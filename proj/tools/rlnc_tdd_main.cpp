// rlnc-tdd: policy optimization, analytical evaluation and Monte Carlo
// simulation of random linear network coding over half-duplex erasure
// links. See README.md for scenario file format and examples.

#include <iostream>

#include <CLI11.hpp>

#include "rlnc/commands.hpp"

namespace {

void add_common_options(CLI::App* cmd, rlnc::CommandOptions* opts) {
  cmd->add_option("--config", opts->config_path, "Scenario JSON file")
      ->required();
  cmd->add_option("--policy", opts->policy_path,
                  "Policy table JSON (default: optimize per objective)");
  cmd->add_option("--out", opts->out_path, "Output file (default: stdout)");
  cmd->add_option("--seed", opts->seed, "Simulation seed override");
  cmd->add_option("--trials", opts->trials, "Simulation trial-count override");
  cmd->add_option("--mode", opts->mode,
                  "Simulation mode override: model-faithful | persistent-dof "
                  "| symbol-level");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Random linear network coding over time-division-duplex erasure links: "
      "optimal burst sizes, mean energy/time analysis, Monte Carlo "
      "validation"};
  app.require_subcommand(1);

  rlnc::CommandOptions opts;
  CLI::App* optimize = app.add_subcommand(
      "optimize", "Compute and store the optimal burst-size policy table");
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Evaluate TDD-E / TDD-T / FD mean energy and time (CSV)");
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Monte Carlo validation of the analytical values (CSV)");
  add_common_options(optimize, &opts);
  add_common_options(evaluate, &opts);
  add_common_options(simulate, &opts);

  CLI11_PARSE(app, argc, argv);

  if (optimize->parsed()) {
    return rlnc::run_optimize(opts, std::cout, std::cerr);
  }
  if (evaluate->parsed()) {
    return rlnc::run_evaluate(opts, std::cout, std::cerr);
  }
  return rlnc::run_simulate(opts, std::cout, std::cerr);
}
