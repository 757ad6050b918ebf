// orlicz-lab: batch reports over the Orlicz-space library.
//
//   orlicz-lab <command> --config cfg.json --out report.csv [--seed N] [--tol X]
//
// Commands: norm, conjugate-table, probe, verify-theorems, solve.
// ORLICZ_LAB_THREADS caps internal parallelism (scans run sequentially today,
// so any cap is honored).
#include <cstdlib>
#include <string>

#include <CLI11.hpp>

#include "orlicz/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Orlicz-space numerical workbench"};
  app.require_subcommand(1);

  orlicz::RunConfig config;
  if (const char* env = std::getenv("ORLICZ_LAB_THREADS")) {
    const int t = std::atoi(env);
    config.threads = t > 0 ? t : 1;
  }

  const std::vector<std::string> commands = {"norm", "conjugate-table", "probe",
                                             "verify-theorems", "solve"};
  for (const auto& name : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config.config_path, "input config (JSON)")->required();
    sub->add_option("--out", config.out_path, "output report path")->required();
    sub->add_option("--seed", config.seed, "PRNG seed (mt19937_64 + Box-Muller)");
    double tol = 0.0;
    sub->add_option("--tol", tol, "tolerance override")->each([&config](const std::string& s) {
      config.tol = std::stod(s);
    });
    sub->callback([&config, name] { config.command = name; });
  }

  CLI11_PARSE(app, argc, argv);
  return orlicz::run_command(config);
}
