#include "qmod/poly.hpp"

namespace qmod {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly::QPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

QPoly QPoly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw PreconditionError("negative monomial degree");
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational QPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<size_t>(i)];
}

int QPoly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(r));
}

QPoly QPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  if (k > 0) {
    std::vector<Rational> v(static_cast<size_t>(k));
    v.insert(v.end(), c_.begin(), c_.end());
    return QPoly(std::move(v));
  }
  if (valuation() < -k) throw InternalError("QPoly::shifted: not divisible by x^" + std::to_string(-k));
  return QPoly(std::vector<Rational>(c_.begin() + (-k), c_.end()));
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  QPoly r = *this;
  Rational inv = 1 / lead();
  r *= inv;
  return r;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
  if (d.is_zero()) throw PreconditionError("polynomial division by zero");
  if (degree() < d.degree()) return {QPoly{}, *this};
  std::vector<Rational> rem = c_;
  std::vector<Rational> quo(static_cast<size_t>(degree() - d.degree() + 1));
  const Rational inv_lead = 1 / d.lead();
  const int dd = d.degree();
  for (int i = degree(); i >= dd; --i) {
    const Rational& top = rem[static_cast<size_t>(i)];
    if (top == 0) continue;
    Rational f = top * inv_lead;
    quo[static_cast<size_t>(i - dd)] = f;
    for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(i - dd + j)] -= f * d.c_[static_cast<size_t>(j)];
  }
  rem.resize(static_cast<size_t>(dd));
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly QPoly::exact_div(const QPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw InternalError("QPoly::exact_div left a nonzero remainder");
  return q;
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a.divmod(b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::pair<QPoly, QPoly> inverse_mod(const QPoly& a, const QPoly& m) {
  // Extended Euclid tracking only the coefficient of a.
  QPoly r0 = m, r1 = a.divmod(m).second;
  QPoly s0, s1 = QPoly(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    QPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.is_zero()) return {QPoly{}, QPoly{}};
  Rational inv = 1 / r0.lead();
  return {r0 * inv, s0 * inv};
}

}  // namespace qmod
