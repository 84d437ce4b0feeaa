#include "qmod/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "qmod/poly.hpp"

namespace qmod {
namespace {

struct CycloTable {
  long order = 1;
  long phi = 1;
  std::vector<BigInt> poly;  // Φ_L, monic, degree phi
  // rows[e - phi] = x^e mod Φ_L for phi <= e < L, each of length phi.
  std::vector<std::vector<BigInt>> rows;
};

QPoly to_qpoly(const std::vector<BigInt>& c) {
  std::vector<Rational> r(c.begin(), c.end());
  return QPoly(std::move(r));
}

std::unique_ptr<CycloTable> build_table(long order) {
  auto t = std::make_unique<CycloTable>();
  t->order = order;
  // Φ_L = (x^L - 1) / Π_{d | L, d < L} Φ_d
  QPoly p = QPoly::monomial(1, static_cast<int>(order)) - QPoly(Rational(1));
  for (long d = 1; d < order; ++d) {
    if (order % d == 0) p = p.exact_div(to_qpoly(cyclotomic_polynomial(d)));
  }
  t->phi = p.degree();
  for (const auto& c : p.coeffs()) {
    if (c.get_den() != 1) throw InternalError("cyclotomic polynomial with non-integer coefficient");
    t->poly.push_back(c.get_num());
  }
  const auto phi = static_cast<size_t>(t->phi);
  std::vector<BigInt> cur(phi);
  // x^phi ≡ -(Φ - x^phi)
  for (size_t i = 0; i < phi; ++i) cur[i] = -t->poly[i];
  for (long e = t->phi; e < order; ++e) {
    t->rows.push_back(cur);
    // multiply by x and reduce
    BigInt top = cur[phi - 1];
    for (size_t i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (size_t i = 0; i < phi; ++i) cur[i] -= top * t->poly[i];
    }
  }
  return t;
}

const CycloTable& table(long order) {
  static std::mutex mu;
  static std::map<long, std::unique_ptr<CycloTable>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return *it->second;
  }
  // Built outside the lock: construction recurses into smaller orders.
  auto t = build_table(order);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(order, std::move(t));
  return *it->second;
}

long mod_pos(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

// Reduces a length-L accumulator indexed by exponent into the power basis.
std::vector<Rational> reduce(const CycloTable& t, std::vector<Rational>& acc) {
  const auto phi = static_cast<size_t>(t.phi);
  std::vector<Rational> out(acc.begin(), acc.begin() + static_cast<long>(phi));
  for (size_t e = phi; e < acc.size(); ++e) {
    if (acc[e] == 0) continue;
    const auto& row = t.rows[e - phi];
    for (size_t i = 0; i < phi; ++i) {
      if (row[i] != 0) out[i] += acc[e] * row[i];
    }
  }
  return out;
}

}  // namespace

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<BigInt>& cyclotomic_polynomial(long order) {
  if (order < 1) throw PreconditionError("cyclotomic order must be positive");
  if (order == 1) {
    static const std::vector<BigInt> phi1{BigInt(-1), BigInt(1)};
    return phi1;
  }
  return table(order).poly;
}

CycNum::CycNum(const Rational& r) : order_(1) {
  if (r != 0) c_.push_back(r);
}

CycNum::CycNum(long order, std::vector<Rational> coeffs) : order_(order), c_(std::move(coeffs)) { trim(); }

void CycNum::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

CycNum CycNum::root_of_unity(long order, long exponent) {
  if (order < 1) throw PreconditionError("root of unity order must be positive");
  long e = mod_pos(exponent, order);
  long g = gcd_long(e, order);
  if (e == 0) return CycNum(Rational(1));
  order /= g;
  e /= g;
  std::vector<BigInt> counts(static_cast<size_t>(order));
  counts[static_cast<size_t>(e)] = 1;
  return from_counts(order, counts);
}

CycNum CycNum::from_counts(long order, const std::vector<BigInt>& counts) {
  if (static_cast<long>(counts.size()) != order) throw PreconditionError("count vector length must equal the order");
  if (order == 1) return CycNum(Rational(counts[0]));
  const auto& t = table(order);
  std::vector<Rational> acc(counts.begin(), counts.end());
  return CycNum(order, reduce(t, acc));
}

CycNum CycNum::from_coeffs(long order, const std::vector<Rational>& coeffs) {
  if (order < 1) throw PreconditionError("cyclotomic order must be positive");
  std::vector<Rational> acc(static_cast<size_t>(order));
  for (size_t i = 0; i < coeffs.size(); ++i) acc[i % static_cast<size_t>(order)] += coeffs[i];
  if (order == 1) return CycNum(acc[0]);
  return CycNum(order, reduce(table(order), acc));
}

CycNum CycNum::sqrt_integer(long n) {
  if (n <= 0) throw PreconditionError("sqrt_integer needs a positive integer");
  long square = 1, free = n;
  for (long p = 2; p * p <= free; ++p) {
    while (free % (p * p) == 0) {
      free /= p * p;
      square *= p;
    }
  }
  if (free == 1) return CycNum(Rational(square));
  // Σ_{a mod 4t} ζ_{4t}^{a²} = 2(1+i)√t
  const long order = 4 * free;
  std::vector<BigInt> counts(static_cast<size_t>(order));
  for (long a = 0; a < order; ++a) counts[static_cast<size_t>((a * a) % order)] += 1;
  CycNum gauss = from_counts(order, counts);
  CycNum root = gauss / (CycNum(2) * (CycNum(1) + imaginary_unit()));
  if (root.to_complex().real() < 0) root = -root;
  return root * CycNum(Rational(square));
}

CycNum CycNum::lifted(long m) const {
  if (m % order_ != 0) throw PreconditionError("lift target must be a multiple of the order");
  if (m == order_) return *this;
  const long step = m / order_;
  std::vector<Rational> acc(static_cast<size_t>(m));
  for (size_t i = 0; i < c_.size(); ++i) acc[i * static_cast<size_t>(step)] = c_[i];
  return CycNum(m, reduce(table(m), acc));
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (o.order_ != order_) {
    long l = lcm_long(order_, o.order_);
    *this = lifted(l);
    return *this += o.lifted(l);
  }
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const CycNum& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    order_ = lcm_long(order_, o.order_);
    return *this;
  }
  if (o.is_rational()) {
    for (auto& x : c_) x *= o.c_[0];
    return *this;
  }
  if (is_rational()) {
    Rational s = c_[0];
    *this = o;
    for (auto& x : c_) x *= s;
    return *this;
  }
  if (o.order_ != order_) {
    long l = lcm_long(order_, o.order_);
    *this = lifted(l);
    return *this *= o.lifted(l);
  }
  const auto L = static_cast<size_t>(order_);
  std::vector<Rational> acc(L);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      acc[(i + j) % L] += c_[i] * o.c_[j];
    }
  }
  c_ = reduce(table(order_), acc);
  trim();
  return *this;
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.order_ == b.order_) return a.c_ == b.c_;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  long l = lcm_long(a.order_, b.order_);
  return a.lifted(l).c_ == b.lifted(l).c_;
}

CycNum CycNum::conj() const {
  if (is_rational()) return *this;
  const auto L = static_cast<size_t>(order_);
  std::vector<Rational> acc(L);
  for (size_t i = 0; i < c_.size(); ++i) acc[(L - i) % L] = c_[i];
  return CycNum(order_, reduce(table(order_), acc));
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero cyclotomic number");
  if (is_rational()) return CycNum(1 / c_[0]);
  const auto& t = table(order_);
  std::vector<Rational> pc(t.poly.begin(), t.poly.end());
  auto [g, u] = inverse_mod(QPoly(c_), QPoly(std::move(pc)));
  if (g.degree() != 0) throw InternalError("cyclotomic polynomial is not coprime to a nonzero element");
  return CycNum(order_, u.coeffs());
}

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum result(Rational(1));
  CycNum base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::complex<double> CycNum::to_complex() const {
  std::complex<double> z = 0;
  for (size_t i = 0; i < c_.size(); ++i) {
    double ang = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(order_);
    z += c_[i].get_d() * std::polar(1.0, ang);
  }
  return z;
}

std::string CycNum::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].get_str();
    if (i > 0) os << "*z" << order_ << "^" << i;
  }
  return os.str();
}

CycNum epsilon_power(const Rational& a, long m_kappa) {
  // exp(πi a/(mϰ)) = ζ_{2mϰ·den}^{num}
  BigInt order = BigInt(2 * m_kappa) * a.get_den();
  BigInt e = a.get_num();
  return CycNum::root_of_unity(to_long_checked(order), to_long_checked(BigInt(e % order)));
}

CycNum epsilon_sum(const std::vector<EpsilonTerm>& terms, long m_kappa) {
  long den = 1;
  for (const auto& t : terms) den = lcm_long(den, to_long_checked(t.exponent.get_den()));
  const long order = 2 * m_kappa * den;
  std::vector<BigInt> counts(static_cast<size_t>(order));
  for (const auto& t : terms) {
    if (t.coefficient == 0) continue;
    BigInt num = t.exponent.get_num() * (den / to_long_checked(t.exponent.get_den()));
    BigInt r = num % order;
    if (r < 0) r += order;
    counts[static_cast<size_t>(r.get_si())] += t.coefficient;
  }
  return CycNum::from_counts(order, counts);
}

}  // namespace qmod
