#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qmod/cyclotomic.hpp"
#include "qmod/poly.hpp"

namespace qmod {

/// Raised when a rational function is evaluated at a zero of its denominator.
class PoleError : public std::runtime_error {
 public:
  PoleError(const std::string& what, std::string denominator)
      : std::runtime_error(what), denominator_(std::move(denominator)) {}
  const std::string& denominator() const { return denominator_; }

 private:
  std::string denominator_;
};

/// Sparse Laurent polynomial text form: (exponent, coefficient) pairs.
using LaurentTerms = std::vector<std::pair<int, Rational>>;

/// Element of Q(v), v = q^{1/2}, kept as v^shift · N(v)/D(v) with
/// gcd(N, D) = 1, D monic, and N(0), D(0) nonzero. This form is unique.
class QRatFn {
 public:
  QRatFn() = default;
  QRatFn(const Rational& c);  // NOLINT
  QRatFn(long c) : QRatFn(Rational(c)) {}  // NOLINT

  static QRatFn v_power(int e);
  static QRatFn q_power(int e) { return v_power(2 * e); }
  static QRatFn from_laurent(const LaurentTerms& num, const LaurentTerms& den);
  /// Symmetric q-number [n]_d = (q^{nd} - q^{-nd}) / (q^d - q^{-d}).
  static QRatFn q_number(int n, int d = 1);

  bool is_zero() const { return num_.is_zero(); }
  /// Numerator as a Laurent polynomial (shift applied), denominator as a polynomial.
  LaurentTerms numerator_terms() const;
  LaurentTerms denominator_terms() const;
  bool is_laurent_polynomial() const { return den_.degree() == 0; }

  QRatFn operator-() const;
  QRatFn& operator+=(const QRatFn& o);
  QRatFn& operator-=(const QRatFn& o) { return *this += -o; }
  QRatFn& operator*=(const QRatFn& o);
  QRatFn& operator/=(const QRatFn& o) { return *this *= o.inverse(); }
  friend QRatFn operator+(QRatFn a, const QRatFn& b) { return a += b; }
  friend QRatFn operator-(QRatFn a, const QRatFn& b) { return a -= b; }
  friend QRatFn operator*(QRatFn a, const QRatFn& b) { return a *= b; }
  friend QRatFn operator/(QRatFn a, const QRatFn& b) { return a /= b; }
  friend bool operator==(const QRatFn& a, const QRatFn& b) {
    return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const QRatFn& a, const QRatFn& b) { return !(a == b); }

  QRatFn inverse() const;
  /// Conjugation v ↦ v^{-1}; rational coefficients are fixed.
  QRatFn bar() const;

  /// Substitutes v = ζ_order^exponent. Throws PoleError if the denominator vanishes.
  CycNum eval_at_root(long order, long exponent) const;
  /// Substitutes q = ε = exp(πi/(mϰ)), i.e. v = exp(πi/(2mϰ)).
  CycNum eval_at_epsilon(long m_kappa) const { return eval_at_root(4 * m_kappa, 1); }
  double eval_real(double v) const;

  std::string to_string() const;

 private:
  void normalize();

  int shift_ = 0;
  QPoly num_;
  QPoly den_ = QPoly(Rational(1));
};

}  // namespace qmod
