#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qmod/rational.hpp"

namespace qmod {

/// Exact element of the cyclotomic field Q(ζ_L), ζ_L = exp(2πi/L).
///
/// Stored in the power basis {1, ζ, ..., ζ^{φ(L)-1}}: every value is reduced
/// modulo the L-th cyclotomic polynomial, so two elements of the same order are
/// equal iff their coefficient vectors are equal. Binary operations on
/// different orders first lift both operands to the lcm of the orders.
class CycNum {
 public:
  CycNum() = default;
  CycNum(const Rational& r);  // NOLINT: rationals embed implicitly
  CycNum(long v) : CycNum(Rational(v)) {}  // NOLINT

  /// ζ_L^e for any integer e.
  static CycNum root_of_unity(long order, long exponent);
  /// Σ_e counts[e] ζ_L^e with counts of length L.
  static CycNum from_counts(long order, const std::vector<BigInt>& counts);
  /// Builds a value directly from power-basis coefficients (reduced on entry).
  static CycNum from_coeffs(long order, const std::vector<Rational>& coeffs);
  /// Positive real square root of a positive integer, via a quadratic Gauss sum.
  static CycNum sqrt_integer(long n);
  static CycNum imaginary_unit() { return root_of_unity(4, 1); }

  long order() const { return order_; }
  /// Power-basis coefficients, trimmed of trailing zeros.
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.size() <= 1; }
  Rational rational_part() const { return c_.empty() ? Rational(0) : c_[0]; }

  /// Re-expresses the same value in Q(ζ_M); M must be a multiple of order().
  CycNum lifted(long m) const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o) { return *this *= o.inverse(); }
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  /// Complex conjugation ζ ↦ ζ^{-1}.
  CycNum conj() const;
  CycNum inverse() const;
  CycNum pow(long e) const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  CycNum(long order, std::vector<Rational> coeffs);
  void trim();

  long order_ = 1;
  std::vector<Rational> c_;
};

/// The L-th cyclotomic polynomial, low degree first, integer coefficients.
const std::vector<BigInt>& cyclotomic_polynomial(long order);
long euler_phi(long n);

/// ε^a for ε = exp(πi/(mϰ)) and rational a: the value exp(πi a/(mϰ)).
CycNum epsilon_power(const Rational& a, long m_kappa);

/// Σ_j coeff_j · ε^{a_j}, accumulated on one common order before reduction.
struct EpsilonTerm {
  Rational exponent;
  long coefficient = 1;
};
CycNum epsilon_sum(const std::vector<EpsilonTerm>& terms, long m_kappa);

}  // namespace qmod
