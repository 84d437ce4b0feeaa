#include "qmod/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "qmod/chardata.hpp"
#include "qmod/fusion.hpp"
#include "qmod/macdonald.hpp"
#include "qmod/modular.hpp"
#include "qmod/serialize.hpp"
#include "qmod/weyl.hpp"

namespace qmod {
namespace {

struct Artifact {
  Json json;
  std::string text;  // pretty or csv rendering, when the command supports it
  int exit_code = kExitOk;
};

template <class T>
T require(const std::optional<T>& v, const char* flag) {
  if (!v) throw PreconditionError(std::string("missing required option --") + flag);
  return *v;
}

Weight parse_weight(const std::string& text, int rank, const char* flag) {
  if (text.empty()) throw PreconditionError(std::string("missing required option --") + flag);
  std::vector<int> coords;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      coords.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw PreconditionError(std::string("--") + flag + ": cannot parse '" + item + "' as an integer");
    }
  }
  if (static_cast<int>(coords.size()) != rank)
    throw PreconditionError(std::string("--") + flag + " needs " + std::to_string(rank) + " comma-separated coordinates");
  return Weight(coords);
}

std::string weight_label(const Weight& w) {
  std::string s;
  for (size_t i = 0; i < w.coords.size(); ++i) s += (i ? "." : "") + std::to_string(w.coords[i]);
  return s;
}

std::string format_complex(ComplexF z) {
  char buf[64];
  const double re = std::abs(z.real()) < 1e-15 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 1e-15 ? 0.0 : z.imag();
  if (im == 0.0) std::snprintf(buf, sizeof buf, "%.12g", re);
  else std::snprintf(buf, sizeof buf, "%.12g%+.12gi", re, im);
  return buf;
}

std::string csv_matrix(const std::string& name, const std::vector<Weight>& idx, const ComplexMatrix& m) {
  std::string s = name;
  for (const auto& w : idx) s += "," + weight_label(w);
  s += "\n";
  for (size_t i = 0; i < m.size(); ++i) {
    s += weight_label(idx[i]);
    for (const auto& z : m[i]) s += "," + format_complex(z);
    s += "\n";
  }
  return s;
}

std::string pretty_matrix(const std::string& name, const std::vector<Weight>& idx, const CycMatrix& m) {
  std::string s = name + ":\n";
  for (size_t i = 0; i < m.size(); ++i) {
    s += "  " + idx[i].to_string() + ":";
    for (const auto& x : m[i]) s += "  " + x.to_string();
    s += "\n";
  }
  return s;
}

std::string csv_quote(const std::string& v) {
  std::string s = "\"";
  for (char c : v) s += c == '"' ? std::string("\"\"") : std::string(1, c);
  return s + "\"";
}

Artifact report_artifact(const VerificationReport& r, const RunConfig& cfg) {
  Artifact a;
  a.json = to_json(r, cfg.timing);
  a.exit_code = r.passed() ? kExitOk : kExitVerificationFailed;
  if (cfg.format == "csv") {
    a.text = "name,anchor,status,witness\n";
    for (const auto& c : r.checks)
      a.text += csv_quote(c.name) + "," + csv_quote(c.anchor) + "," + to_string(c.status) + "," + csv_quote(c.witness) + "\n";
  } else if (cfg.format == "pretty") {
    a.text = "suite " + r.suite + ": " + (r.passed() ? "PASS" : "FAIL") + "\n";
    for (const auto& c : r.checks) {
      a.text += "  [" + to_string(c.status) + "] " + c.name + "  (" + c.anchor + ")\n";
      if (!c.witness.empty()) a.text += "      " + c.witness + "\n";
    }
    for (const auto& n : r.notes) a.text += "  note: " + n + "\n";
    if (cfg.timing) {
      std::ostringstream t;
      t << std::fixed << std::setprecision(3) << r.duration_seconds;
      a.text += "  time: " + t.str() + " s\n";
    }
  }
  return a;
}

Artifact cmd_lie_info(const RunConfig& cfg) {
  const auto rs = build_root_system(cfg.algebra.empty() ? throw PreconditionError("missing required option --algebra") : cfg.algebra);
  Json roots = Json::array();
  for (const auto& a : rs.positive_roots) roots.push_back(to_json(a));
  Json gram = Json::array();
  for (const auto& row : rs.weight_gram) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_fraction_string(x));
    gram.push_back(r);
  }
  Artifact a;
  a.json = Json{{"algebra", rs.name()},
                {"rank", rs.rank},
                {"cartan", rs.cartan},
                {"weight_gram", gram},
                {"positive_roots", roots},
                {"rho", to_json(rs.rho)},
                {"theta", to_json(rs.theta)},
                {"comarks", rs.comarks},
                {"dual_coxeter", rs.dual_coxeter},
                {"lacing", rs.lacing},
                {"d", rs.d},
                {"N", rs.lattice_det},
                {"dim_g", rs.dim_g},
                {"weyl_order", weyl_group_order(rs)}};
  std::ostringstream s;
  s << rs.name() << ": rank " << rs.rank << ", h_dual " << rs.dual_coxeter << ", m " << rs.lacing << ", N "
    << rs.lattice_det << ", dim g " << rs.dim_g << ", |R+| " << rs.num_positive_roots() << ", |W| "
    << weyl_group_order(rs) << "\n  rho " << rs.rho.to_string() << ", theta " << rs.theta.to_string() << "\n";
  a.text = s.str();
  return a;
}

Artifact cmd_alcove(const RunConfig& cfg) {
  Artifact a;
  std::vector<Weight> ws;
  if (cfg.n) {
    const auto rs = build_root_system('A', *cfg.n - 1);
    ws = enumerate_CK(rs, require(cfg.K, "K"), cfg.k.value_or(1));
    a.json = Json{{"algebra", rs.name()}, {"K", *cfg.K}, {"weights", Json::array()}};
  } else {
    const auto rs = build_root_system(cfg.algebra);
    ws = enumerate_alcove(rs, require(cfg.kappa, "kappa"));
    a.json = Json{{"algebra", rs.name()}, {"kappa", *cfg.kappa}, {"weights", Json::array()}};
  }
  for (const auto& w : ws) {
    a.json["weights"].push_back(to_json(w));
    a.text += weight_label(w) + "\n";
  }
  if (cfg.format == "csv") a.text = "weight\n" + a.text;
  return a;
}

Artifact cmd_dims(const RunConfig& cfg) {
  const auto rs = build_root_system(cfg.algebra);
  const int kappa = require(cfg.kappa, "kappa");
  Artifact a;
  Json rows = Json::array();
  a.text = cfg.format == "csv" ? "weight,dim\n" : "";
  for (const auto& w : enumerate_alcove(rs, kappa)) {
    const CycNum d = quantum_dim(rs, w, kappa);
    rows.push_back(Json{{"weight", to_json(w)}, {"dim", cfg.mode == "float" ? Json(d.to_complex().real()) : to_json(d)}});
    a.text += cfg.format == "csv" ? weight_label(w) + "," + format_complex(d.to_complex()) + "\n"
                                  : w.to_string() + "  " + d.to_string() + "  ~ " + format_complex(d.to_complex()) + "\n";
  }
  a.json = Json{{"algebra", rs.name()}, {"kappa", kappa}, {"mode", cfg.mode}, {"dims", rows}};
  return a;
}

Artifact cmd_modular(const RunConfig& cfg) {
  const auto md = build_modular_data(build_root_system(cfg.algebra), require(cfg.kappa, "kappa"));
  Artifact a;
  a.json = cfg.mode == "float" ? to_json_float(md) : to_json(md);
  if (cfg.format == "csv") {
    const auto f = build_modular_data_float(md.rs, md.kappa);
    a.text = csv_matrix("s", md.alcove, f.s) + "\n" + csv_matrix("t", md.alcove, f.t) + "\n" +
             csv_matrix("c", md.alcove, to_complex(md.c));
  } else {
    a.text = md.rs.name() + " at kappa=" + std::to_string(md.kappa) + "\n" + pretty_matrix("s", md.alcove, md.s) +
             pretty_matrix("t", md.alcove, md.t) + "p+ = " + md.p_plus.to_string() + "\np- = " + md.p_minus.to_string() +
             "\nD^2 = " + md.D2.to_string() + "\nzeta = " + md.zeta.to_string() +
             "\ncentral charge = " + to_fraction_string(md.central_charge) + "\n";
  }
  return a;
}

Artifact cmd_fusion(const RunConfig& cfg) {
  const auto rs = build_root_system(cfg.algebra);
  const int kappa = require(cfg.kappa, "kappa");
  Artifact a;
  if (!cfg.lhs.empty() || !cfg.rhs.empty()) {
    const Weight l = parse_weight(cfg.lhs, rs.rank, "lhs"), m = parse_weight(cfg.rhs, rs.rank, "rhs");
    const auto res = fusion_coefficients(rs, l, m, kappa);
    a.json = fusion_product_json(l, m, res);
    for (const auto& [nu, c] : res) a.text += weight_label(l) + "," + weight_label(m) + "," + weight_label(nu) + "," + std::to_string(c) + "\n";
  } else {
    const auto t = build_fusion_table(rs, kappa);
    a.json = to_json(t);
    a.json["algebra"] = rs.name();
    for (size_t i = 0; i < t.alcove.size(); ++i)
      for (size_t j = 0; j < t.alcove.size(); ++j)
        for (size_t c = 0; c < t.alcove.size(); ++c)
          if (t.at(i, j, c) != 0)
            a.text += weight_label(t.alcove[i]) + "," + weight_label(t.alcove[j]) + "," + weight_label(t.alcove[c]) + "," +
                      std::to_string(t.at(i, j, c)) + "\n";
  }
  if (cfg.format == "csv") a.text = "lambda,mu,nu,mult\n" + a.text;
  return a;
}

Artifact cmd_macdonald(const RunConfig& cfg) {
  const int n = require(cfg.n, "n"), k = require(cfg.k, "k");
  Artifact a;
  if (cfg.subcommand == "poly") {
    MacdonaldContext ctx(n, k, cfg.K.value_or(0));
    const Weight l = parse_weight(cfg.lambda, n - 1, "lambda");
    const auto& p = ctx.polynomial(l);
    a.json = Json{{"n", n}, {"k", k}, {"lambda", to_json(l)}, {"terms", to_json(p)}, {"norm", to_json(ctx.norm(l))}};
    for (const auto& [w, c] : p.terms) a.text += w.to_string() + "  " + c.to_string() + "\n";
    a.text += "norm  " + ctx.norm(l).to_string() + "\n";
    return a;
  }
  if (cfg.subcommand == "su") {
    MacdonaldContext ctx(n, k, require(cfg.K, "K"));
    const SUData su = build_su_data(ctx);
    a.json = cfg.mode == "float" ? to_json_float(su) : to_json(su);
    if (cfg.format == "csv") {
      a.text = csv_matrix("S", su.alcove, to_complex(su.S)) + "\n" + csv_matrix("T", su.alcove, to_complex(su.T));
    } else {
      a.text = pretty_matrix("S", su.alcove, su.S) + pretty_matrix("T", su.alcove, su.T) +
               "kappa_C = " + su.kappa_c.to_string() + "\ntheta_U = " + su.theta_u.to_string() + "\n";
    }
    return a;
  }
  throw PreconditionError("macdonald needs a subcommand: poly or su");
}

Artifact cmd_verify(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport total;
  total.suite = cfg.suite;
  const bool want_modular = cfg.suite == "modular" || cfg.suite == "all";
  const bool want_fusion = cfg.suite == "fusion" || cfg.suite == "all";
  const bool want_s5 = cfg.suite == "section5" || cfg.suite == "all";
  if (!want_modular && !want_fusion && !want_s5)
    throw PreconditionError("unknown suite '" + cfg.suite + "'; expected modular, fusion, section5 or all");
  const bool have_algebra = !cfg.algebra.empty();
  const bool have_n = cfg.n.has_value();
  if (cfg.suite == "all" && !have_algebra && !have_n)
    throw PreconditionError("suite all needs --algebra/--kappa and/or --n/--k/--K");

  if ((want_modular || want_fusion) && (cfg.suite != "all" || have_algebra)) {
    const auto md = build_modular_data(build_root_system(cfg.algebra), require(cfg.kappa, "kappa"));
    if (want_modular) total.append(verify_modular_relations(md, cfg.tolerance));
    if (want_fusion) {
      const auto table = build_fusion_table(md.rs, md.kappa);
      total.append(verify_fusion(md, table));
      total.append(verify_grothendieck(md, table));
    }
  }
  if (want_s5 && (cfg.suite != "all" || have_n)) {
    MacdonaldContext ctx(require(cfg.n, "n"), require(cfg.k, "k"), require(cfg.K, "K"));
    total.append(verify_macdonald_generic(ctx, cfg.max_level.value_or(ctx.K())));
    total.append(verify_section5(ctx, cfg.tolerance));
  }
  total.duration_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report_artifact(total, cfg);
}

Artifact dispatch(const RunConfig& cfg) {
  if (cfg.mode != "exact" && cfg.mode != "float") throw PreconditionError("--mode must be exact or float");
  if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "pretty")
    throw PreconditionError("--format must be json, csv or pretty");
  if (!(cfg.tolerance > 0)) throw PreconditionError("--tol must be positive");
  if (cfg.command == "lie-info") return cmd_lie_info(cfg);
  if (cfg.command == "alcove") return cmd_alcove(cfg);
  if (cfg.command == "dims") return cmd_dims(cfg);
  if (cfg.command == "modular") return cmd_modular(cfg);
  if (cfg.command == "fusion") return cmd_fusion(cfg);
  if (cfg.command == "macdonald") return cmd_macdonald(cfg);
  if (cfg.command == "verify") return cmd_verify(cfg);
  throw PreconditionError("unknown command '" + cfg.command + "'");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Artifact a;
  try {
    a = dispatch(config);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PoleError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  const std::string body = config.format == "json" ? a.json.dump(2) + "\n" : a.text;
  if (config.out.empty()) {
    out << body;
  } else {
    std::ofstream file(config.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << config.out << " for writing\n";
      return kExitUsage;
    }
    file << body;
  }
  return a.exit_code;
}

}  // namespace qmod
