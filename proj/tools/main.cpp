#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace cli = wmetrics::cli;

int main(int argc, char** argv) {
  CLI::App app{"Weighted classification metrics: compute, sweep, verify"};
  app.require_subcommand(1);

  cli::ComputeOptions compute_opts;
  CLI::App* compute = app.add_subcommand("compute", "Compute metrics for a labeled CSV file");
  compute->add_option("--input", compute_opts.input_path, "CSV with header truth,prediction[,weight]")
      ->required()
      ->check(CLI::ExistingFile);
  compute->add_option("--mode", compute_opts.mode, "binary or multi")
      ->required()
      ->check(CLI::IsMember({"binary", "multi"}));
  compute->add_option("--k", compute_opts.num_classes,
                      "Declared class count for multi mode (default: inferred)")
      ->check(CLI::PositiveNumber);

  cli::SweepOptions sweep_opts;
  sweep_opts.seed = cli::default_seed();
  CLI::App* sweep = app.add_subcommand("sweep", "Run the moving-segment agreement sweep");
  sweep->add_option("--n", sweep_opts.n, "Observations per sample (default 150)");
  sweep->add_option("--k", sweep_opts.k, "1 for binary labels, otherwise class count >= 3");
  sweep->add_option("--p", sweep_opts.p, "Match proportion inside the segment (default 0.5)");
  sweep->add_option("--p0", sweep_opts.p0, "Match proportion outside the segment (default 0.5)");
  sweep->add_option("--segment-len", sweep_opts.segment_len, "Segment length (default n/3)");
  sweep->add_option("--samples", sweep_opts.samples, "Samples averaged per start index (default 100)");
  sweep->add_option("--seed", sweep_opts.seed, "RNG seed (default WMETRICS_SEED or 1)");
  sweep->add_option("--weights", sweep_opts.weights,
                    "Weight pattern count:weight,... (default thirds at 1, 100, 10000)");
  sweep->add_option("--out", sweep_opts.out, "Output CSV path (default stdout)");

  cli::VerifyOptions verify_opts;
  verify_opts.seed = cli::default_seed();
  CLI::App* verify = app.add_subcommand("verify", "Check a stability bound on random instances");
  verify->add_option("--metric", verify_opts.metric, "mcc, ecc, mpc1, or mpc2")
      ->required()
      ->check(CLI::IsMember({"mcc", "ecc", "mpc1", "mpc2"}));
  verify->add_option("--n", verify_opts.n, "Observations per instance (default 50)");
  verify->add_option("--k", verify_opts.k, "Class count for multiclass metrics (default 3)");
  verify->add_option("--eps", verify_opts.eps,
                     "Perturbation radius (default: 45% of the admissible maximum)");
  verify->add_option("--trials", verify_opts.trials, "Perturbations per instance (default 1000)");
  verify->add_option("--seed", verify_opts.seed, "RNG seed (default WMETRICS_SEED or 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  }

  if (compute->parsed()) {
    return cli::cmd_compute(compute_opts, std::cout, std::cerr);
  }
  if (sweep->parsed()) {
    return cli::cmd_sweep(sweep_opts, std::cout, std::cerr);
  }
  return cli::cmd_verify(verify_opts, std::cout, std::cerr);
}
