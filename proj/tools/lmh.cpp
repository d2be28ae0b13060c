// Experiment runner: reads a flat key-value config, runs the requested
// experiment, writes deterministic CSV.
//
//   lmh <experiment> --config <path> [--out <path>] [--seed <u64>] [--threads <n>]
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "langevin/experiments.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Langevin Metropolis-Hastings experiment harness"};
  app.require_subcommand(0);

  std::string experiment, config_path, out_path;
  std::string seed_str, threads_str;
  app.add_option("experiment", experiment,
                 "efficiency-sweep | transient-trace | acf-compare | "
                 "asymptotic | ergodicity-probe | single-run")
      ->required();
  app.add_option("--config", config_path, "Config file (key = value lines)")
      ->required();
  app.add_option("--out", out_path, "Output CSV path (default: stdout)");
  app.add_option("--seed", seed_str, "Override the config seed");
  app.add_option("--threads", threads_str, "Thread cap (advisory)");

  CLI11_PARSE(app, argc, argv);

  try {
    langevin::Config cfg = langevin::Config::parse_file(config_path);
    const std::string cfg_experiment = cfg.get_string("experiment", experiment);
    if (cfg_experiment != experiment) {
      std::cerr << "error: config declares experiment '" << cfg_experiment
                << "' but '" << experiment << "' was requested\n";
      return 2;
    }
    cfg.set("experiment", experiment);
    if (!seed_str.empty()) cfg.set("seed", seed_str);
    if (!out_path.empty()) cfg.set("out", out_path);

    langevin::CsvReport report = langevin::run_experiment(cfg);

    const std::string dest = cfg.get_string("out", "");
    if (dest.empty())
      std::cout << report.to_string();
    else
      report.write(dest);
    return 0;
  } catch (const langevin::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const langevin::Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
