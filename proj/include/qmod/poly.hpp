#pragma once

#include <utility>
#include <vector>

#include "qmod/rational.hpp"

namespace qmod {

/// Dense univariate polynomial over Q, coefficients stored low degree first.
/// Always trimmed: the zero polynomial has no coefficients.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  QPoly(const Rational& c);  // NOLINT: constants convert implicitly

  static QPoly monomial(const Rational& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  const Rational& lead() const { return c_.back(); }
  /// Lowest exponent with a nonzero coefficient; -1 for zero.
  int valuation() const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const Rational& s);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  /// Multiplies by x^k (k >= 0) or divides exactly by x^{-k}.
  QPoly shifted(int k) const;
  QPoly monic() const;

  /// Euclidean division: *this = q*d + r with deg r < deg d.
  std::pair<QPoly, QPoly> divmod(const QPoly& d) const;
  /// Division that must leave no remainder.
  QPoly exact_div(const QPoly& d) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
QPoly gcd(QPoly a, QPoly b);

/// Returns (g, u) with u*a ≡ g (mod m), g = monic gcd(a, m).
std::pair<QPoly, QPoly> inverse_mod(const QPoly& a, const QPoly& m);

}  // namespace qmod
