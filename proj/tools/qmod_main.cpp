#include <iostream>

#include "CLI11.hpp"
#include "qmod/cli.hpp"
#include "qmod/complexf.hpp"

int main(int argc, char** argv) {
  qmod::RunConfig cfg;
  cfg.tolerance = qmod::default_tolerance();

  CLI::App app{"Modular data of quantum-group categories at roots of unity"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--mode", cfg.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--format", cfg.format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
    sub->add_option("--tol", cfg.tolerance, "float comparison tolerance (env QMOD_TOLERANCE)");
    sub->add_option("--out", cfg.out, "write output to this file instead of stdout");
  };
  auto add_algebra = [&cfg](CLI::App* sub) {
    sub->add_option("--algebra", cfg.algebra, "simple type such as A2, B3, G2");
    sub->add_option("--kappa", cfg.kappa, "level, at least the dual Coxeter number");
  };
  auto add_nkK = [&cfg](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "sl_n rank plus one");
    sub->add_option("--k", cfg.k, "Macdonald parameter t = q^k");
    sub->add_option("--K", cfg.K, "level of C_K; kappa = K + k n");
  };

  auto* lie = app.add_subcommand("lie-info", "root system tables");
  lie->add_option("--algebra", cfg.algebra, "simple type")->required();
  add_common(lie);

  auto* alcove = app.add_subcommand("alcove", "list the alcove C, or C_K with --n/--K");
  add_algebra(alcove);
  add_nkK(alcove);
  add_common(alcove);

  auto* dims = app.add_subcommand("dims", "quantum dimensions on the alcove");
  add_algebra(dims);
  add_common(dims);

  auto* modular = app.add_subcommand("modular", "s, t, c matrices and scalars");
  add_algebra(modular);
  add_common(modular);

  auto* fusion = app.add_subcommand("fusion", "fusion table or one product");
  add_algebra(fusion);
  fusion->add_option("--lhs", cfg.lhs, "left weight, comma-separated coordinates");
  fusion->add_option("--rhs", cfg.rhs, "right weight, comma-separated coordinates");
  add_common(fusion);

  auto* mac = app.add_subcommand("macdonald", "type A Macdonald polynomials");
  mac->require_subcommand(1);
  auto* poly = mac->add_subcommand("poly", "P_lambda at generic q");
  add_nkK(poly);
  poly->add_option("--lambda", cfg.lambda, "dominant weight, comma-separated coordinates")->required();
  add_common(poly);
  auto* su = mac->add_subcommand("su", "S_U and T_U at q = eps");
  add_nkK(su);
  add_common(su);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", cfg.suite, "modular, fusion, section5 or all")
      ->check(CLI::IsMember({"modular", "fusion", "section5", "all"}));
  add_algebra(verify);
  add_nkK(verify);
  verify->add_option("--max-level", cfg.max_level, "generic-q Macdonald checks up to this level (default K)");
  verify->add_flag("--timing", cfg.timing, "include wall-clock duration in the report");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return qmod::kExitUsage;
  }

  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  if (poly->parsed()) cfg.subcommand = "poly";
  if (su->parsed()) cfg.subcommand = "su";
  return qmod::run(cfg, std::cout, std::cerr);
}
