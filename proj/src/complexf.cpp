#include "qmod/complexf.hpp"

#include <cstdlib>
#include <string>

namespace qmod {

double default_tolerance() {
  if (const char* env = std::getenv("QMOD_TOLERANCE")) {
    try {
      double v = std::stod(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  return kDefaultTolerance;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (size_t j = 0; j < a[i].size(); ++j) {
      if (!approx_equal(a[i][j], b[i][j], tol)) return false;
    }
  }
  return true;
}

}  // namespace qmod
