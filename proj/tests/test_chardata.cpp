#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qmod/chardata.hpp"
#include "qmod/complexf.hpp"
#include "qmod/weyl.hpp"

using namespace qmod;

namespace {

Weight w(std::vector<int> c) { return Weight(std::move(c)); }

// Independent oracle: orbit-sum of Weyl numerator divided by the denominator as Laurent series.
// Here: brute-force Freudenthal-free check via the Weyl character formula, χ·δ = Σ sign e^{w(λ+ρ)}.
std::map<Weight, long> times_delta(const RootSystemData& rs, const std::map<Weight, long>& f) {
  std::map<Weight, long> cur = f;
  for (const auto& a : rs.positive_roots) {
    std::map<Weight, long> next;
    Weight h = a.half();
    for (const auto& [mu, c] : cur) {
      next[mu + h] += c;
      next[mu - h] -= c;
    }
    cur.clear();
    for (const auto& [mu, c] : next)
      if (c != 0) cur[mu] = c;
  }
  return cur;
}

double sine_product_dim(const RootSystemData& rs, const Weight& l, int kappa) {
  double p = 1.0;
  for (const auto& a : rs.positive_roots) {
    double num = form(rs, a, l + rs.rho).get_d(), den = form(rs, a, rs.rho).get_d();
    p *= std::sin(std::numbers::pi * num / kappa) / std::sin(std::numbers::pi * den / kappa);
  }
  return p;
}

}  // namespace

TEST_CASE("weight_multiplicities examples") {
  auto a1 = build_root_system("A1");
  CHECK(weight_multiplicities(a1, w({0})).mults == std::map<Weight, long>{{w({0}), 1}});
  CHECK(weight_multiplicities(a1, w({2})).mults == std::map<Weight, long>{{w({-2}), 1}, {w({0}), 1}, {w({2}), 1}});
  auto a2 = build_root_system("A2");
  const auto& adj = weight_multiplicities(a2, a2.theta);
  CHECK(adj.multiplicity(Weight::zero(2)) == 2);
  CHECK(adj.mults.size() == 7);
  for (const auto& a : a2.positive_roots) {
    CHECK(adj.multiplicity(a) == 1);
    CHECK(adj.multiplicity(-a) == 1);
  }
  CHECK_THROWS_AS(weight_multiplicities(a2, w({-1, 0})), PreconditionError);
}

TEST_CASE("Freudenthal agrees with the Weyl character formula") {
  for (const std::string name : {"A2", "A3", "B2", "C3", "G2"}) {
    auto rs = build_root_system(name);
    for (const auto& l : dominant_weights_with_level(rs, 3)) {
      CAPTURE(name);
      CAPTURE(l.to_string());
      const auto& t = weight_multiplicities(rs, l);
      CHECK(BigInt(t.dimension()) == weyl_dimension(rs, l));
      CHECK(t.multiplicity(l) == 1);
      std::map<Weight, long> alt;
      for (const auto& g : weyl_group(rs)) alt[g.apply(l + rs.rho)] += g.sign();
      CHECK(times_delta(rs, t.mults) == alt);
      for (int i = 0; i < rs.rank; ++i)
        for (const auto& [mu, m] : t.mults) CHECK(t.multiplicity(simple_reflection(rs, i, mu)) == m);
    }
  }
}

TEST_CASE("char_value examples") {
  auto a1 = build_root_system("A1");
  CHECK(char_value(a1, w({0}), w({5}), 3) == CycNum(1));
  CHECK(char_value(a1, w({1}), 2 * a1.rho, 3) == CycNum(1));
  CHECK(char_value(a1, w({1}), 2 * a1.rho, 4) == CycNum::root_of_unity(8, 1) + CycNum::root_of_unity(8, -1));
}

TEST_CASE("quantum_dim examples") {
  auto a1 = build_root_system("A1");
  CHECK(quantum_dim(a1, w({0}), 3) == CycNum(1));
  CHECK(quantum_dim(a1, w({1}), 3) == CycNum(1));
  CHECK(quantum_dim(a1, w({2}), 3).is_zero());
}

TEST_CASE("weyl_denominator_value examples") {
  auto a1 = build_root_system("A1");
  CycNum z6 = CycNum::root_of_unity(6, 1);
  CHECK(weyl_denominator_value(a1, -2 * a1.rho, 3) == z6.inverse() - z6);
  CHECK(weyl_denominator_value(a1, -2 * a1.rho, 3) == -CycNum::imaginary_unit() * CycNum::sqrt_integer(3));
  for (const std::string name : {"A1", "B2", "G2"}) {
    auto rs = build_root_system(name);
    CHECK(weyl_denominator_value(rs, Weight::zero(rs.rank), rs.dual_coxeter + 1).is_zero());
  }
  auto a2 = build_root_system("A2");
  double s = std::sin(std::numbers::pi / 4);
  ComplexF expected = std::pow(ComplexF(0, -2), 3) * s * s * std::sin(std::numbers::pi / 2);
  CHECK(approx_equal(weyl_denominator_value(a2, -2 * a2.rho, 4).to_complex(), expected, 1e-9));
}

TEST_CASE("vanishing_criterion examples and agreement") {
  auto a1 = build_root_system("A1");
  CHECK(vanishing_criterion(a1, w({5}), 3));
  CHECK(vanishing_criterion(a1, w({2}), 3));
  CHECK_FALSE(vanishing_criterion(a1, w({1}), 3));
  for (const std::string name : {"A1", "A2", "B2", "G2", "C3"}) {
    auto rs = build_root_system(name);
    for (int kappa = rs.dual_coxeter; kappa <= rs.dual_coxeter + 3; ++kappa) {
      for (const auto& l : enumerate_alcove(rs, kappa)) CHECK_FALSE(vanishing_criterion(rs, l, kappa));
      for (const auto& l : dominant_weights_with_level(rs, kappa + 1)) {
        CAPTURE(name);
        CAPTURE(kappa);
        CAPTURE(l.to_string());
        CHECK(vanishing_criterion(rs, l, kappa) == quantum_dim(rs, l, kappa).is_zero());
        if (pairing(rs, l + rs.rho, rs.theta) == kappa) CHECK(vanishing_criterion(rs, l, kappa));
      }
    }
  }
}

TEST_CASE("character invariants on the alcove") {
  for (const std::string name : {"A1", "A2", "B2", "G2"}) {
    auto rs = build_root_system(name);
    for (int kappa = rs.dual_coxeter; kappa <= rs.dual_coxeter + 2; ++kappa) {
      auto alcove = enumerate_alcove(rs, kappa);
      for (const auto& l : alcove) {
        CycNum d = quantum_dim(rs, l, kappa);
        CHECK(d.conj() == d);
        CHECK(d == quantum_dim(rs, star(rs, l), kappa));
        CHECK(d.to_complex().real() > 0);
        CHECK(std::abs(d.to_complex().real() - sine_product_dim(rs, l, kappa)) < 1e-9);
        const auto& table = weight_multiplicities(rs, l);
        for (const auto& mu : alcove) {
          Weight point = -2 * (mu + rs.rho);
          CycNum ratio = char_value(rs, l, point, kappa);
          CHECK(ratio == evaluate_at_epsilon(rs, kappa, table.mults, point));
          // invariance under the shifted affine Weyl group at the evaluation point
          for (int i = 0; i < rs.rank; ++i) {
            Weight moved = simple_reflection(rs, i, mu + rs.rho) - rs.rho;
            CHECK(char_value(rs, l, -2 * (moved + rs.rho), kappa) == ratio);
          }
          Weight x = mu + rs.rho;
          Weight affine = x - (static_cast<int>(to_long_checked(pairing(rs, x, rs.theta).get_num())) - kappa) * rs.theta;
          CHECK(char_value(rs, l, -2 * affine, kappa) == ratio);
        }
      }
    }
  }
}
