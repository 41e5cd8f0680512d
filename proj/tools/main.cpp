// Command-line entry point: runs regret experiments from a JSON config and
// executes the numerical verification suites.

#include <cinttypes>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "config.hpp"
#include "pandora/experiment.hpp"
#include "pandora/verify.hpp"
#include "pandora/version.hpp"

namespace {

int run_command(const std::string& config_path, const std::string& out_dir,
                bool has_seed, std::uint64_t seed) {
  pandora::ExperimentSpec spec =
      pandora::cli::load_experiment_spec(config_path);
  if (has_seed) spec.env.seed = seed;
  spec.out_dir = out_dir;

  const pandora::ExperimentResult result = pandora::run_experiment(spec);

  std::printf("wrote %zu trace files + aggregate.csv to %s\n",
              spec.modes.size() * spec.algorithms.size() *
                  static_cast<std::size_t>(spec.repetitions),
              out_dir.c_str());
  const int horizon = spec.env.horizon;
  for (const auto& cell : result.cells) {
    std::printf("%-7s %-16s mean cumulative regret at T=%d: %.4f (stderr %.4f)\n",
                std::string(pandora::to_string(cell.mode)).c_str(),
                std::string(pandora::to_string(cell.algorithm)).c_str(),
                horizon,
                result.mean_cum_regret(cell.mode, cell.algorithm, horizon),
                result.stderr_cum_regret(cell.mode, cell.algorithm, horizon));
  }
  return 0;
}

int verify_command(const std::string& suite, std::uint64_t seed) {
  std::vector<pandora::verify::SuiteResult> results;
  if (suite == "all") {
    results = pandora::verify::run_all(seed);
  } else {
    results.push_back(pandora::verify::run_suite(suite, seed));
  }

  bool any_failed = false;
  std::printf("%-24s %7s %9s %15s  %s\n", "suite", "cases", "failures",
              "worst_residual", "status");
  for (const auto& r : results) {
    any_failed = any_failed || !r.passed();
    std::printf("%-24s %7d %9d %15.3e  %s\n", r.name.c_str(), r.cases,
                r.failures, r.worst_residual, r.passed() ? "PASS" : "FAIL");
  }
  return any_failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contextual online search with per-box regression oracles"};
  app.set_version_flag("--version", std::string(pandora::kVersion));
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool has_seed = false;

  CLI::App* run = app.add_subcommand("run", "Run an experiment from a JSON config");
  run->add_option("--config", config_path, "Path to the JSON config")
      ->required()
      ->check(CLI::ExistingFile);
  run->add_option("--out", out_dir, "Output directory for CSV files")->required();
  run->add_option("--seed", seed, "Override the config's master seed")
      ->each([&has_seed](const std::string&) { has_seed = true; });

  std::string suite = "all";
  CLI::App* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--suite", suite, "Suite name (default: all)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return run_command(config_path, out_dir, has_seed, seed);
    }
    return verify_command(suite, pandora::verify::kDefaultSeed);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
