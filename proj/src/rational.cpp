#include "qmod/rational.hpp"

#include <numeric>

namespace qmod {

std::string to_fraction_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_fraction(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) {
    throw PreconditionError("malformed rational literal '" + text + "'");
  }
  if (r.get_den() == 0) {
    throw PreconditionError("zero denominator in '" + text + "'");
  }
  r.canonicalize();
  return r;
}

long to_long_checked(const BigInt& x) {
  if (!x.fits_slong_p()) {
    throw InternalError("integer overflow converting " + x.get_str());
  }
  return x.get_si();
}

long gcd_long(long a, long b) { return std::gcd(a, b); }

long lcm_long(long a, long b) { return std::lcm(a, b); }

}  // namespace qmod
