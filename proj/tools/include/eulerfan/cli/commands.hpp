#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eulerfan/action.hpp"
#include "eulerfan/cli/config.hpp"
#include "eulerfan/cli/report.hpp"

namespace eulerfan::cli {

enum ExitCode : int {
  kExitPass = 0,
  kExitClaimFailed = 2,
  kExitConfigError = 3,
  kExitSolverFailure = 4,
};

struct Claim {
  std::string stage;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOutcome {
  Json report;
  std::vector<Claim> claims;
  int exit_code = kExitPass;
  std::optional<std::string> failed_stage;
};

/// Full pipeline: planar solve with bound checks, subsolution
/// feasibility, gluing with horizon check, action comparison.
[[nodiscard]] VerifyOutcome run_verify(const RunConfig& cfg,
                                       std::optional<QuadratureGrid> grid = QuadratureGrid{1024,
                                                                                           1024});

/// "NxM" -> (N, M); throws ConfigError.
[[nodiscard]] std::pair<int, int> parse_grid(const std::string& text);

/// "lo:hi" with constant-expression endpoints; throws ConfigError.
[[nodiscard]] std::pair<double, double> parse_range(const std::string& text);

/// "rho,u,v" with constant-expression entries; throws ConfigError.
[[nodiscard]] State parse_state_triple(const std::string& text);

/// Command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eulerfan::cli
