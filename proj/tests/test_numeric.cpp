#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "qmod/complexf.hpp"
#include "qmod/cyclotomic.hpp"
#include "qmod/poly.hpp"
#include "qmod/qratfn.hpp"

using namespace qmod;

namespace {

constexpr double kTol = 1e-9;

// Random element Σ c_j ε^{a_j} with small rational exponents, built from roots of unity only.
CycNum random_cyc(std::mt19937& rng, long m_kappa) {
  std::uniform_int_distribution<int> coef(-3, 3), num(-24, 24), den(1, 2), terms(1, 4);
  CycNum x;
  int t = terms(rng);
  for (int j = 0; j < t; ++j) x += CycNum(Rational(coef(rng))) * epsilon_power(Rational(num(rng), den(rng)), m_kappa);
  return x;
}

ComplexF eps_float(double a, long m_kappa) { return std::polar(1.0, std::numbers::pi * a / m_kappa); }

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<BigInt>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<BigInt>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<BigInt>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<BigInt>{1, 0, -1, 0, 1});
  CHECK(euler_phi(36) == 12);
  CHECK(static_cast<long>(cyclotomic_polynomial(105).size()) == euler_phi(105) + 1);
}

TEST_CASE("epsilon_power examples") {
  CHECK(epsilon_power(0, 3) == CycNum(1));
  // A1, ϰ=3 (m=1): ε^{3/2} = e^{πi/2} = i
  CHECK(epsilon_power(Rational(3, 2), 3) == CycNum::imaginary_unit());
  CHECK(epsilon_power(6, 3) == CycNum(1));
  CHECK(epsilon_power(Rational(1, 2), 3) * epsilon_power(Rational(5, 6), 3) == epsilon_power(Rational(4, 3), 3));
}

TEST_CASE("cyc_arith examples") {
  CycNum eps = epsilon_power(1, 3);
  CHECK(eps + eps.conj() == CycNum(1));
  CycNum i = CycNum::imaginary_unit();
  CHECK((CycNum(1) + i) * (CycNum(1) - i) == CycNum(2));
  CHECK_THROWS_AS(CycNum().inverse(), PreconditionError);
  CHECK((i * i) == CycNum(-1));
  // ζ_6^2 - ζ_6 + 1 = 0
  CycNum z6 = CycNum::root_of_unity(6, 1);
  CHECK((z6 * z6 - z6 + CycNum(1)).is_zero());
}

TEST_CASE("sum of all primitive-power roots vanishes") {
  for (long L : {2L, 5L, 12L, 30L}) {
    CycNum s;
    for (long e = 0; e < L; ++e) s += CycNum::root_of_unity(L, e);
    CHECK(s.is_zero());
  }
}

TEST_CASE("sqrt_integer squares back and is positive") {
  for (long n : {1L, 2L, 3L, 8L, 12L, 14L, 147L}) {
    CycNum r = CycNum::sqrt_integer(n);
    CHECK(r * r == CycNum(n));
    CHECK(r.to_complex().real() == doctest::Approx(std::sqrt(static_cast<double>(n))));
    CHECK(std::abs(r.to_complex().imag()) < kTol);
  }
}

TEST_CASE("randomized field properties against the float embedding") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 200; ++trial) {
    long mk = std::uniform_int_distribution<long>(2, 9)(rng);
    CycNum x = random_cyc(rng, mk);
    CycNum y = random_cyc(rng, mk + 1);
    CAPTURE(x.to_string());
    CAPTURE(y.to_string());
    CHECK(approx_equal((x * y).to_complex(), x.to_complex() * y.to_complex(), kTol));
    CHECK(approx_equal((x + y).to_complex(), x.to_complex() + y.to_complex(), kTol));
    CHECK(x.conj().conj() == x);
    CHECK(approx_equal(x.conj().to_complex(), std::conj(x.to_complex()), kTol));
    CHECK(x.is_zero() == (std::abs(x.to_complex()) < kTol));
    if (!x.is_zero()) CHECK(x * x.inverse() == CycNum(1));
    // same value rebuilt in a larger field must compare equal and difference must vanish exactly
    CycNum lifted = x.lifted(x.order() * 3);
    CHECK(lifted == x);
    CHECK((lifted - x).is_zero());
  }
}

TEST_CASE("epsilon_sum matches individual powers") {
  std::vector<EpsilonTerm> terms{{Rational(1, 3), 2}, {Rational(-5, 2), -1}, {Rational(7), 1}};
  CycNum direct = CycNum(2) * epsilon_power(Rational(1, 3), 4) - epsilon_power(Rational(-5, 2), 4) + epsilon_power(7, 4);
  CHECK(epsilon_sum(terms, 4) == direct);
  ComplexF f = 2.0 * eps_float(1.0 / 3, 4) - eps_float(-2.5, 4) + eps_float(7, 4);
  CHECK(approx_equal(direct.to_complex(), f, kTol));
}

TEST_CASE("polynomial gcd and inverse") {
  QPoly x = QPoly::monomial(1, 1);
  QPoly a = (x - QPoly(Rational(1))) * (x + QPoly(Rational(2)));
  QPoly b = (x - QPoly(Rational(1))) * (x - QPoly(Rational(3)));
  CHECK(gcd(a, b) == x - QPoly(Rational(1)));
  QPoly m = x * x + QPoly(Rational(1));
  auto [g, u] = inverse_mod(x + QPoly(Rational(1)), m);
  CHECK(g == QPoly(Rational(1)));
  CHECK(((x + QPoly(Rational(1))) * u).divmod(m).second == QPoly(Rational(1)));
}

TEST_CASE("qratfn examples") {
  QRatFn two = QRatFn::q_number(2);
  CHECK(two == QRatFn::q_power(1) + QRatFn::q_power(-1));
  // [2] at ε = e^{πi/3} is 2cos(π/3) = 1
  CHECK(two.eval_at_epsilon(3) == CycNum(1));
  for (int n = -3; n <= 6; ++n) CHECK(QRatFn::q_number(n).bar() == QRatFn::q_number(n));
  CHECK(QRatFn(Rational(5, 3)).eval_at_epsilon(7) == CycNum(Rational(5, 3)));
  CHECK(QRatFn::q_number(3, 2) == QRatFn::q_power(4) + QRatFn(1) + QRatFn::q_power(-4));
}

TEST_CASE("qratfn canonical form is unique") {
  QRatFn a = QRatFn::q_number(4) / QRatFn::q_number(2);
  QRatFn b = QRatFn::q_power(1) * (QRatFn::q_power(1) + QRatFn::q_power(-3));  // q^2 + q^{-2}
  CHECK(a == b);
  QRatFn c = (QRatFn::q_number(2) * QRatFn::q_number(2)) / QRatFn::q_number(3);
  QRatFn d = (QRatFn::q_power(2) + QRatFn(2) + QRatFn::q_power(-2)) / (QRatFn::q_power(2) + QRatFn(1) + QRatFn::q_power(-2));
  CHECK(c == d);
  CHECK((c - d).is_zero());
  CHECK(c.bar().bar() == c);
  CHECK(c * c.inverse() == QRatFn(1));
}

TEST_CASE("qratfn evaluation is a homomorphism and reports poles") {
  QRatFn f = QRatFn::q_number(5) / QRatFn::q_number(3);
  QRatFn g = QRatFn::q_number(2) + QRatFn::v_power(1);
  for (long mk : {7L, 9L, 11L}) {
    CHECK((f * g).eval_at_epsilon(mk) == f.eval_at_epsilon(mk) * g.eval_at_epsilon(mk));
    CHECK((f + g).eval_at_epsilon(mk) == f.eval_at_epsilon(mk) + g.eval_at_epsilon(mk));
    // bar corresponds to complex conjugation at |v| = 1
    CHECK(f.bar().eval_at_epsilon(mk) == f.eval_at_epsilon(mk).conj());
  }
  // [3] vanishes at ε = e^{πi/3}
  QRatFn h = QRatFn(1) / QRatFn::q_number(3);
  CHECK_THROWS_AS(h.eval_at_epsilon(3), PoleError);
  try {
    h.eval_at_epsilon(3);
  } catch (const PoleError& e) {
    CHECK(std::string(e.what()).find("pole at ε") != std::string::npos);
    CHECK(!e.denominator().empty());
  }
}
