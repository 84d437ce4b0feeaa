#include "qmod/qratfn.hpp"

#include <cmath>
#include <sstream>

namespace qmod {
namespace {

// Laurent terms → (valuation, polynomial with nonzero constant term).
std::pair<int, QPoly> laurent_to_poly(const LaurentTerms& terms) {
  if (terms.empty()) return {0, QPoly{}};
  int lo = terms.front().first;
  for (const auto& [e, c] : terms) lo = std::min(lo, e);
  std::vector<Rational> v;
  for (const auto& [e, c] : terms) {
    auto idx = static_cast<size_t>(e - lo);
    if (v.size() <= idx) v.resize(idx + 1);
    v[idx] += c;
  }
  return {lo, QPoly(std::move(v))};
}

QPoly reversed(const QPoly& p) {
  std::vector<Rational> c(p.coeffs().rbegin(), p.coeffs().rend());
  return QPoly(std::move(c));
}

std::string poly_text(const QPoly& p, int shift) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    const Rational& c = p.coeffs()[static_cast<size_t>(i)];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    if (i + shift != 0) os << "*v^" << (i + shift);
  }
  return os.str();
}

}  // namespace

QRatFn::QRatFn(const Rational& c) : num_(c) {}

QRatFn QRatFn::v_power(int e) {
  QRatFn r(Rational(1));
  r.shift_ = e;
  return r;
}

QRatFn QRatFn::from_laurent(const LaurentTerms& num, const LaurentTerms& den) {
  auto [ns, np] = laurent_to_poly(num);
  auto [ds, dp] = laurent_to_poly(den);
  if (dp.is_zero()) throw PreconditionError("rational function with zero denominator");
  QRatFn r;
  r.num_ = std::move(np);
  r.den_ = std::move(dp);
  r.shift_ = ns - ds;
  r.normalize();
  return r;
}

QRatFn QRatFn::q_number(int n, int d) {
  if (d <= 0) throw PreconditionError("q-number scale d must be positive");
  if (n == 0) return {};
  if (n < 0) return -q_number(-n, d);
  // In v = q^{1/2}: (v^{2nd} - v^{-2nd}) / (v^{2d} - v^{-2d}).
  return from_laurent({{2 * n * d, Rational(1)}, {-2 * n * d, Rational(-1)}},
                      {{2 * d, Rational(1)}, {-2 * d, Rational(-1)}});
}

void QRatFn::normalize() {
  if (num_.is_zero()) {
    shift_ = 0;
    den_ = QPoly(Rational(1));
    return;
  }
  int nv = num_.valuation();
  if (nv > 0) {
    num_ = num_.shifted(-nv);
    shift_ += nv;
  }
  int dv = den_.valuation();
  if (dv > 0) {
    den_ = den_.shifted(-dv);
    shift_ -= dv;
  }
  if (den_.degree() > 0) {
    QPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  Rational lead = den_.lead();
  if (lead != 1) {
    num_ *= 1 / lead;
    den_ *= 1 / lead;
  }
}

LaurentTerms QRatFn::numerator_terms() const {
  LaurentTerms out;
  for (int i = 0; i <= num_.degree(); ++i) {
    const Rational& c = num_.coeffs()[static_cast<size_t>(i)];
    if (c != 0) out.emplace_back(i + shift_, c);
  }
  return out;
}

LaurentTerms QRatFn::denominator_terms() const {
  LaurentTerms out;
  for (int i = 0; i <= den_.degree(); ++i) {
    const Rational& c = den_.coeffs()[static_cast<size_t>(i)];
    if (c != 0) out.emplace_back(i, c);
  }
  return out;
}

QRatFn QRatFn::operator-() const {
  QRatFn r = *this;
  r.num_ = -r.num_;
  return r;
}

QRatFn& QRatFn::operator+=(const QRatFn& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int s = std::min(shift_, o.shift_);
  if (den_ == o.den_) {
    num_ = num_.shifted(shift_ - s) + o.num_.shifted(o.shift_ - s);
  } else {
    num_ = num_.shifted(shift_ - s) * o.den_ + o.num_.shifted(o.shift_ - s) * den_;
    den_ = den_ * o.den_;
  }
  shift_ = s;
  normalize();
  return *this;
}

QRatFn& QRatFn::operator*=(const QRatFn& o) {
  if (is_zero() || o.is_zero()) return *this = QRatFn{};
  shift_ += o.shift_;
  if (o.den_.degree() == 0 && den_.degree() == 0) {
    num_ = num_ * o.num_;
    return *this;
  }
  // Cross-cancel before multiplying to keep degrees small.
  QPoly g1 = gcd(num_, o.den_);
  QPoly g2 = gcd(o.num_, den_);
  num_ = num_.exact_div(g1) * o.num_.exact_div(g2);
  den_ = den_.exact_div(g2) * o.den_.exact_div(g1);
  normalize();
  return *this;
}

QRatFn QRatFn::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of the zero rational function");
  QRatFn r;
  r.num_ = den_;
  r.den_ = num_;
  r.shift_ = -shift_;
  r.normalize();
  return r;
}

QRatFn QRatFn::bar() const {
  if (is_zero()) return *this;
  QRatFn r;
  r.num_ = reversed(num_);
  r.den_ = reversed(den_);
  r.shift_ = -shift_ - num_.degree() + den_.degree();
  r.normalize();
  return r;
}

CycNum QRatFn::eval_at_root(long order, long exponent) const {
  auto eval = [&](const QPoly& p, int shift) {
    std::vector<Rational> acc(static_cast<size_t>(order));
    for (int i = 0; i <= p.degree(); ++i) {
      long e = (static_cast<long>(i + shift) * exponent) % order;
      if (e < 0) e += order;
      acc[static_cast<size_t>(e)] += p.coeffs()[static_cast<size_t>(i)];
    }
    return CycNum::from_coeffs(order, acc);
  };
  CycNum d = eval(den_, 0);
  if (d.is_zero()) {
    throw PoleError("pole at ε: denominator " + poly_text(den_, 0) + " vanishes at v = ζ_" +
                        std::to_string(order) + "^" + std::to_string(exponent),
                    poly_text(den_, 0));
  }
  return eval(num_, shift_) / d;
}

double QRatFn::eval_real(double v) const {
  auto eval = [v](const QPoly& p) {
    double acc = 0;
    for (int i = p.degree(); i >= 0; --i) acc = acc * v + p.coeffs()[static_cast<size_t>(i)].get_d();
    return acc;
  };
  return std::pow(v, shift_) * eval(num_) / eval(den_);
}

std::string QRatFn::to_string() const {
  if (den_.degree() == 0) return poly_text(num_, shift_);
  return "(" + poly_text(num_, shift_) + ") / (" + poly_text(den_, 0) + ")";
}

}  // namespace qmod
