#include <sstream>

#include "doctest.h"
#include "qmod/cli.hpp"
#include "qmod/serialize.hpp"

using namespace qmod;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(const RunConfig& cfg) {
  std::ostringstream out, err;
  const int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

RunConfig cfg_for(std::string command) {
  RunConfig c;
  c.command = std::move(command);
  return c;
}

}  // namespace

TEST_CASE("verify modular A1 kappa 3 passes") {
  auto c = cfg_for("verify");
  c.suite = "modular";
  c.algebra = "A1";
  c.kappa = 3;
  const auto r = invoke(c);
  CHECK(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["counts"]["pass"].get<int>() >= 6);
  CHECK_FALSE(j.contains("duration_seconds"));
}

TEST_CASE("modular A1 kappa 2 is the trivial category") {
  auto c = cfg_for("modular");
  c.algebra = "A1";
  c.kappa = 2;
  const auto r = invoke(c);
  REQUIRE(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["s"].size() == 1);
  CHECK(cycnum_from_json(j["s"][0][0]) == CycNum(1));
  CHECK(cycnum_from_json(j["t"][0][0]) == CycNum(1));
}

TEST_CASE("verify section5 n=2 k=2 K=2 passes") {
  auto c = cfg_for("verify");
  c.suite = "section5";
  c.n = 2;
  c.k = 2;
  c.K = 2;
  const auto r = invoke(c);
  CHECK(r.code == kExitOk);
  CHECK(Json::parse(r.out)["passed"] == true);
}

TEST_CASE("exact output is byte-identical across runs") {
  auto c = cfg_for("modular");
  c.algebra = "B2";
  c.kappa = 4;
  CHECK(invoke(c).out == invoke(c).out);
  auto v = cfg_for("verify");
  v.suite = "all";
  v.algebra = "A2";
  v.kappa = 4;
  v.n = 2;
  v.k = 1;
  v.K = 2;
  const auto a = invoke(v), b = invoke(v);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
}

TEST_CASE("timing flag adds a duration") {
  auto c = cfg_for("verify");
  c.suite = "modular";
  c.algebra = "A1";
  c.kappa = 4;
  c.timing = true;
  CHECK(Json::parse(invoke(c).out).contains("duration_seconds"));
}

TEST_CASE("precondition failures exit with code 2") {
  auto c = cfg_for("modular");
  c.algebra = "A1";
  c.kappa = 1;
  auto r = invoke(c);
  CHECK(r.code == kExitUsage);
  CHECK(r.out.empty());
  CHECK(r.err.find("error") != std::string::npos);

  c.algebra = "Q3";
  c.kappa = 5;
  CHECK(invoke(c).code == kExitUsage);

  auto f = cfg_for("fusion");
  f.algebra = "A2";
  f.kappa = 4;
  f.lhs = "3,0";
  f.rhs = "0,0";
  CHECK(invoke(f).code == kExitUsage);
  f.lhs = "1";
  CHECK(invoke(f).code == kExitUsage);

  auto m = cfg_for("modular");
  m.algebra = "A1";
  CHECK(invoke(m).code == kExitUsage);
  CHECK(invoke(cfg_for("nonsense")).code == kExitUsage);
}

TEST_CASE("fusion product and csv output") {
  auto f = cfg_for("fusion");
  f.algebra = "A1";
  f.kappa = 4;
  f.lhs = "1";
  f.rhs = "1";
  const Json j = Json::parse(invoke(f).out);
  REQUIRE(j["result"].size() == 2);
  CHECK(j["result"][0]["nu"] == Json::array({0}));
  CHECK(j["result"][1]["nu"] == Json::array({2}));

  auto m = cfg_for("modular");
  m.algebra = "A1";
  m.kappa = 3;
  m.format = "csv";
  const auto r = invoke(m);
  CHECK(r.out.rfind("s,0,1\n0,1,1\n1,1,-1\n", 0) == 0);
}

TEST_CASE("macdonald commands") {
  auto p = cfg_for("macdonald");
  p.subcommand = "poly";
  p.n = 2;
  p.k = 1;
  p.lambda = "2";
  const Json j = Json::parse(invoke(p).out);
  CHECK(j["terms"].size() == 3);
  auto s = cfg_for("macdonald");
  s.subcommand = "su";
  s.n = 3;
  s.k = 2;
  s.K = 1;
  s.mode = "float";
  CHECK(invoke(s).code == kExitOk);
  s.subcommand = "";
  CHECK(invoke(s).code == kExitUsage);
}
