// Batch command surface. Each command reads a JSON config, writes a CSV
// report (plus a JSON mirror) or a JSON result, and returns a process exit
// code. Fixed seed implies byte-identical outputs.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace orlicz {

struct RunConfig {
  std::string command;  // norm | conjugate-table | probe | verify-theorems | solve
  std::string config_path;
  std::string out_path;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  int threads = 1;  // parallelism cap (ORLICZ_LAB_THREADS); scans are sequential today
};

/// Runs one command. Returns 0 on success, 64 for malformed input or usage
/// errors (with a single-line "error: ..." on stderr); solve additionally
/// returns 2 (solved, certificates failed) or 3 (not converged).
int run_command(const RunConfig& config);

}  // namespace orlicz
