#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pgspec {

enum ExitCode : int { exit_ok = 0, exit_mismatch = 1, exit_usage = 2 };

struct RunConfig {
  int k = 2;
  int p = 3;
  std::vector<double> alphas;
  std::vector<std::string> commands;
  std::string format = "json";
  std::string out_dir;
  double detour_time_budget_s = 60.0;
  double tol = 1e-8;
  std::uint64_t seed = 1;
  std::string graph = "power";
};

/// Full command-line entry point. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Executes a validated run; returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace pgspec
