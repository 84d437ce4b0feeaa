#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace qmod {

/// One parsed command line. Numeric fields are unset when the flag was not given.
struct RunConfig {
  std::string command;     // lie-info | alcove | dims | modular | fusion | macdonald | verify
  std::string subcommand;  // macdonald: poly | su
  std::string algebra;
  std::optional<int> kappa;
  std::optional<int> n, k, K;
  std::string lambda, lhs, rhs;
  std::string suite = "all";
  std::optional<int> max_level;
  std::string mode = "exact";
  std::string format = "json";
  double tolerance = 1e-9;
  std::string out;
  bool timing = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

/// Executes the command, writing the artifact to `out` (or the --out file) and diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace qmod
