#include "doctest.h"
#include "qmod/chardata.hpp"
#include "qmod/fusion.hpp"
#include "qmod/weyl.hpp"

using namespace qmod;

namespace {

Weight w(std::vector<int> c) { return Weight(std::move(c)); }

void require_all_pass(const VerificationReport& r) {
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CAPTURE(c.witness);
    CHECK(c.status == CheckStatus::pass);
  }
}

// Oracle: multiply characters as weight multisets and peel off highest weights.
std::map<Weight, long> peel_decomposition(const RootSystemData& rs, const Weight& a, const Weight& b) {
  std::map<Weight, long> prod;
  for (const auto& [x, m] : weight_multiplicities(rs, a).mults)
    for (const auto& [y, k] : weight_multiplicities(rs, b).mults) prod[x + y] += m * k;
  std::map<Weight, long> out;
  while (!prod.empty()) {
    // a dominant weight maximal in height is a highest weight of a summand
    Weight top;
    Rational best = -1;
    for (const auto& [x, m] : prod) {
      if (!is_dominant(x)) continue;
      Rational h = 0;
      for (const auto& c : root_coordinates(rs, x + 2 * rs.rho)) h += c;
      if (h > best) best = h, top = x;
    }
    long m = prod.at(top);
    out[top] += m;
    for (const auto& [x, k] : weight_multiplicities(rs, top).mults) {
      prod[x] -= m * k;
      if (prod[x] == 0) prod.erase(x);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("classical_tensor examples") {
  auto a1 = build_root_system("A1");
  CHECK(classical_tensor(a1, w({1}), w({1})) == std::map<Weight, long>{{w({0}), 1}, {w({2}), 1}});
  auto a2 = build_root_system("A2");
  CHECK(classical_tensor(a2, w({1, 0}), w({0, 1})) == std::map<Weight, long>{{w({0, 0}), 1}, {w({1, 1}), 1}});
  for (const std::string name : {"A2", "B2", "G2"}) {
    auto rs = build_root_system(name);
    for (const auto& l : dominant_weights_with_level(rs, 2))
      CHECK(classical_tensor(rs, l, Weight::zero(rs.rank)) == std::map<Weight, long>{{l, 1}});
  }
}

TEST_CASE("classical_tensor agrees with character peeling") {
  for (const std::string name : {"A2", "B2", "G2", "A3"}) {
    auto rs = build_root_system(name);
    auto weights = dominant_weights_with_level(rs, 2);
    for (const auto& a : weights)
      for (const auto& b : weights) {
        CAPTURE(name);
        auto dec = classical_tensor(rs, a, b);
        CHECK(dec == classical_tensor(rs, b, a));
        CHECK(dec == peel_decomposition(rs, a, b));
        BigInt total = 0;
        for (const auto& [nu, m] : dec) total += m * weyl_dimension(rs, nu);
        CHECK(total == weyl_dimension(rs, a) * weyl_dimension(rs, b));
      }
  }
}

TEST_CASE("fusion_coefficients examples") {
  auto a1 = build_root_system("A1");
  CHECK(fusion_coefficients(a1, w({1}), w({1}), 3) == std::map<Weight, long>{{w({0}), 1}});
  CHECK(fusion_coefficients(a1, w({1}), w({1}), 4) == std::map<Weight, long>{{w({0}), 1}, {w({2}), 1}});
  auto a2 = build_root_system("A2");
  CHECK(fusion_coefficients(a2, w({1, 0}), w({1, 0}), 4) == std::map<Weight, long>{{w({0, 1}), 1}});
  CHECK_THROWS_AS(fusion_coefficients(a1, w({2}), w({1}), 3), PreconditionError);
}

TEST_CASE("verlinde_coefficient examples") {
  auto a1 = build_root_system("A1");
  auto md4 = build_modular_data(a1, 4);
  CHECK(verlinde_coefficient(md4, 0, 0, 0) == CycNum(1));
  CHECK(verlinde_coefficient(md4, 1, 1, 2) == CycNum(1));
  auto md3 = build_modular_data(a1, 3);
  CHECK(verlinde_coefficient(md3, 1, 1, 1).is_zero());
}

TEST_CASE("fusion and Grothendieck suites") {
  for (auto [name, kappa] : std::vector<std::pair<std::string, int>>{{"A1", 3}, {"A1", 4}, {"A2", 4}, {"A2", 5}, {"B2", 4}, {"G2", 5}}) {
    CAPTURE(name);
    CAPTURE(kappa);
    auto rs = build_root_system(name);
    auto md = build_modular_data(rs, kappa);
    auto table = build_fusion_table(rs, kappa);
    require_all_pass(verify_fusion(md, table));
    require_all_pass(verify_grothendieck(md, table));
  }
}
