#include "rpga/experiment.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Rescaled pure greedy convex optimization: runs, bound checks, and constant estimates"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> k_max;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--spec", spec_path, "experiment spec file")->required();
    sub->add_option("--out", out_dir, "output directory (overrides experiment.outputs)");
    sub->add_option("--seed", seed, "seed (overrides experiment.seed)");
    sub->add_option("--k-max", k_max, "iteration horizon for bound and mu-scan");
  };
  CLI::App* run = app.add_subcommand("run", "run the configured variants and write traces and summaries");
  CLI::App* bound = app.add_subcommand("bound", "compare observed errors with the theoretical bounds");
  CLI::App* estimate = app.add_subcommand("estimate", "estimate smoothness constants and moduli");
  CLI::App* mu_scan = app.add_subcommand("mu-scan", "scan the step parameter over experiment.mu_grid");
  for (CLI::App* sub : {run, bound, estimate, mu_scan}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : rpga::kInputError;
  }

  rpga::ExperimentSpec spec;
  try {
    spec = rpga::load_experiment_spec(spec_path);
  } catch (const rpga::SpecError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return rpga::kInputError;
  }
  if (!out_dir.empty()) spec.outputs = out_dir;
  if (seed) spec.seed = *seed;
  if (k_max) spec.k_max = *k_max;

  try {
    if (*run) return rpga::cmd_run(spec, std::cout, std::cerr);
    if (*bound) return rpga::cmd_bound(spec, std::cout, std::cerr);
    if (*estimate) return rpga::cmd_estimate(spec, std::cout, std::cerr);
    return rpga::cmd_mu_scan(spec, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return rpga::kInputError;
  }
}
