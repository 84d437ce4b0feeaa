#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qmod {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Thrown when an operation's precondition is violated by caller input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a computed quantity contradicts a proven identity.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Canonical "p/q" text, always with an explicit denominator.
std::string to_fraction_string(const Rational& x);
Rational parse_fraction(const std::string& text);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

long to_long_checked(const BigInt& x);

long gcd_long(long a, long b);
long lcm_long(long a, long b);

}  // namespace qmod
