#include <random>

#include "doctest.h"
#include "qmod/lie.hpp"
#include "qmod/weyl.hpp"

using namespace qmod;

namespace {

const std::vector<std::string> kAllTypes{"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4",
                                         "D4", "D5", "E6", "E7", "E8", "F4", "G2"};

Weight w(std::vector<int> c) { return Weight(std::move(c)); }

}  // namespace

TEST_CASE("build_root_system examples") {
  auto a1 = build_root_system('A', 1);
  CHECK(a1.num_positive_roots() == 1);
  CHECK(a1.dual_coxeter == 2);
  CHECK(a1.lacing == 1);
  CHECK(a1.lattice_det == 2);
  CHECK(a1.dim_g == 3);

  auto g2 = build_root_system('G', 2);
  CHECK(g2.lacing == 3);
  CHECK(g2.dual_coxeter == 4);
  CHECK(g2.num_positive_roots() == 6);

  auto a2 = build_root_system("A2");
  CHECK(a2.lattice_det == 3);
  CHECK(a2.num_positive_roots() == 3);
  CHECK(pairing(a2, a2.rho, a2.theta) == 2);
}

TEST_CASE("build_root_system rejects invalid types") {
  CHECK_THROWS_AS(build_root_system('B', 1), PreconditionError);
  CHECK_THROWS_AS(build_root_system('D', 3), PreconditionError);
  CHECK_THROWS_AS(build_root_system('E', 9), PreconditionError);
  CHECK_THROWS_AS(build_root_system('H', 3), PreconditionError);
  CHECK_THROWS_AS(build_root_system("X"), PreconditionError);
  try {
    build_root_system('F', 3);
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("F4") != std::string::npos);
  }
}

TEST_CASE("tabulated constants for every type") {
  // (name, h∨, |R+|, dim g, N, m)
  struct Row {
    const char* name;
    int hv, npos, dim, det, m;
  };
  const Row rows[] = {{"A1", 2, 1, 3, 2, 1},    {"A3", 4, 6, 15, 4, 1},    {"B2", 3, 4, 10, 2, 2},
                      {"B3", 5, 9, 21, 2, 2},   {"C3", 4, 9, 21, 2, 2},    {"D4", 6, 12, 28, 4, 1},
                      {"D5", 8, 20, 45, 4, 1},  {"E6", 12, 36, 78, 3, 1},  {"E7", 18, 63, 133, 2, 1},
                      {"E8", 30, 120, 248, 1, 1}, {"F4", 9, 24, 52, 1, 2}, {"G2", 4, 6, 14, 1, 3}};
  for (const auto& r : rows) {
    CAPTURE(r.name);
    auto rs = build_root_system(r.name);
    CHECK(rs.dual_coxeter == r.hv);
    CHECK(rs.num_positive_roots() == r.npos);
    CHECK(rs.dim_g == r.dim);
    CHECK(rs.lattice_det == r.det);
    CHECK(rs.lacing == r.m);
  }
}

TEST_CASE("root system invariants") {
  for (const auto& name : kAllTypes) {
    CAPTURE(name);
    auto rs = build_root_system(name);
    CHECK(form(rs, rs.theta, rs.theta) == 2);
    BigInt g = 0;
    for (int d : rs.d) {
      CHECK(d > 0);
      mpz_gcd_ui(g.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(d));
    }
    CHECK(g == 1);
    for (const auto& a : rs.simple_roots) CHECK(pairing(rs, rs.rho, a) == 1);
    CHECK(pairing(rs, rs.rho, rs.theta) == rs.dual_coxeter - 1);
    CHECK(2 * rs.num_positive_roots() == rs.dim_g - rs.rank);

    Weight sum = Weight::zero(rs.rank);
    for (const auto& a : rs.positive_roots) sum += a;
    CHECK(sum == 2 * rs.rho);

    // Pairing integrality on P and denominators of the form dividing N.
    for (int i = 0; i < rs.rank; ++i) {
      Weight wi = Weight::zero(rs.rank);
      wi.coords[static_cast<size_t>(i)] = 1;
      for (const auto& a : rs.positive_roots) CHECK(is_integer(pairing(rs, wi, a)));
      for (int j = 0; j < rs.rank; ++j) {
        Weight wj = Weight::zero(rs.rank);
        wj.coords[static_cast<size_t>(j)] = 1;
        Rational f = form(rs, wi, wj);
        Rational fp = form(rs, wi, wj, FormVariant::primed);
        CHECK(fp == rs.lacing * f);
        CHECK(rs.lattice_det % fp.get_den() == 0);
      }
    }
  }
}

TEST_CASE("form examples") {
  auto a1 = build_root_system("A1");
  CHECK(form(a1, a1.simple_roots[0], a1.simple_roots[0]) == 2);
  CHECK(form(a1, w({1}), w({1})) == Rational(1, 2));
  auto g2 = build_root_system("G2");
  Weight long_root = g2.theta;
  CHECK(form(g2, long_root, long_root, FormVariant::primed) == 6);
  CHECK_THROWS_AS(form(g2, w({1}), w({1, 0})), PreconditionError);
}

TEST_CASE("pairing examples") {
  auto a2 = build_root_system("A2");
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Weight wi = Weight::zero(2);
      wi.coords[static_cast<size_t>(i)] = 1;
      CHECK(pairing(a2, wi, a2.simple_roots[static_cast<size_t>(j)]) == (i == j ? 1 : 0));
    }
  auto a1 = build_root_system("A1");
  CHECK(pairing(a1, a1.rho, a1.theta) == 1);
  CHECK(pairing(a2, a2.rho + w({1, 0}), a2.theta) == 3);
  CHECK_THROWS_AS(pairing(a2, a2.rho, Weight::zero(2)), PreconditionError);
  // half-weights give rational pairings
  CHECK(pairing(a1, a1.simple_roots[0].half(), a1.theta) == 1);
  CHECK(pairing(a1, w({1}).half(), a1.theta) == Rational(1, 2));
}

TEST_CASE("lattice_index examples") {
  auto a1 = build_root_system("A1");
  CHECK(lattice_index(a1, parse_lattice_spec("P"), parse_lattice_spec("3Qv")) == 6);
  auto a2 = build_root_system("A2");
  CHECK(lattice_index(a2, parse_lattice_spec("P"), parse_lattice_spec("Q")) == 3);
  for (const auto& name : kAllTypes) {
    auto rs = build_root_system(name);
    CHECK(lattice_index(rs, parse_lattice_spec("P"), parse_lattice_spec("P")) == 1);
    CHECK(lattice_index(rs, parse_lattice_spec("P"), parse_lattice_spec("Q")) == rs.lattice_det);
    BigInt pq = lattice_index(rs, parse_lattice_spec("P"), parse_lattice_spec("Qv"));
    BigInt scaled = lattice_index(rs, parse_lattice_spec("P"), parse_lattice_spec("5Qv"));
    BigInt five_r;
    mpz_ui_pow_ui(five_r.get_mpz_t(), 5, static_cast<unsigned long>(rs.rank));
    CHECK(scaled == five_r * pq);
  }
  CHECK_THROWS_AS(lattice_index(a2, parse_lattice_spec("Q"), parse_lattice_spec("P")), PreconditionError);
  CHECK_THROWS_AS(lattice_index(a2, parse_lattice_spec("P"), parse_lattice_spec("0Q")), PreconditionError);
  CHECK_THROWS_AS(parse_lattice_spec("R"), PreconditionError);
}

TEST_CASE("smith normal form") {
  auto d = smith_diagonal({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  CHECK(d == std::vector<BigInt>{2, 6, 12});
}

TEST_CASE("form is Weyl invariant") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (const std::string name : {"A2", "A3", "B2", "C3", "G2", "D4"}) {
    auto rs = build_root_system(name);
    const auto& group = weyl_group(rs);
    for (int t = 0; t < 20; ++t) {
      Weight x = Weight::zero(rs.rank), y = Weight::zero(rs.rank);
      for (auto& c : x.coords) c = coord(rng);
      for (auto& c : y.coords) c = coord(rng);
      const auto& g = group[static_cast<size_t>(rng() % group.size())];
      CHECK(form(rs, g.apply(x), g.apply(y)) == form(rs, x, y));
    }
  }
}
