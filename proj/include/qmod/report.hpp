#pragma once

#include <string>
#include <vector>

namespace qmod {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);

/// One verified identity. The witness names the offending entry on failure.
struct CheckResult {
  std::string name;
  std::string anchor;
  CheckStatus status = CheckStatus::pass;
  std::string witness;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;
  /// Free-form observations, e.g. calibrated constants.
  std::vector<std::string> notes;
  double duration_seconds = 0.0;

  void add(std::string name, std::string anchor, bool ok, std::string witness = {});
  void skip(std::string name, std::string anchor, std::string reason);
  void append(const VerificationReport& other);
  bool passed() const;
  size_t count(CheckStatus s) const;
};

}  // namespace qmod
