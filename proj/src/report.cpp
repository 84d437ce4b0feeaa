#include "qmod/report.hpp"

#include <algorithm>

namespace qmod {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "unknown";
}

void VerificationReport::add(std::string name, std::string anchor, bool ok, std::string witness) {
  checks.push_back({std::move(name), std::move(anchor), ok ? CheckStatus::pass : CheckStatus::fail,
                    ok ? std::string{} : std::move(witness)});
}

void VerificationReport::skip(std::string name, std::string anchor, std::string reason) {
  checks.push_back({std::move(name), std::move(anchor), CheckStatus::skipped, std::move(reason)});
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  duration_seconds += other.duration_seconds;
}

bool VerificationReport::passed() const { return count(CheckStatus::fail) == 0; }

size_t VerificationReport::count(CheckStatus s) const {
  return static_cast<size_t>(std::count_if(checks.begin(), checks.end(), [s](const auto& c) { return c.status == s; }));
}

}  // namespace qmod
