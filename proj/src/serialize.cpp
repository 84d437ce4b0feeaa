#include "qmod/serialize.hpp"

namespace qmod {
namespace {

Json laurent_json(const LaurentTerms& terms) {
  Json out = Json::array();
  for (const auto& [e, c] : terms) out.push_back(Json::array({e, to_fraction_string(c)}));
  return out;
}

LaurentTerms laurent_from_json(const Json& j) {
  LaurentTerms out;
  for (const auto& t : j) out.emplace_back(t.at(0).get<int>(), parse_fraction(t.at(1).get<std::string>()));
  return out;
}

Json weights_json(const std::vector<Weight>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(to_json(w));
  return out;
}

template <class T>
Json vector_json(const std::vector<T>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

}  // namespace

Json to_json(const CycNum& x) {
  Json coeffs = Json::array();
  const auto& c = x.coeffs();
  for (size_t e = 0; e < c.size(); ++e)
    if (c[e] != 0) coeffs.push_back(Json::array({e, to_fraction_string(c[e])}));
  return Json{{"order", x.order()}, {"coeffs", coeffs}};
}

CycNum cycnum_from_json(const Json& j) {
  const long order = j.at("order").get<long>();
  if (order < 1) throw PreconditionError("cyclotomic order must be positive");
  std::vector<Rational> coeffs;
  for (const auto& t : j.at("coeffs")) {
    const long e = t.at(0).get<long>();
    if (e < 0) throw PreconditionError("negative power-basis index");
    if (coeffs.size() <= static_cast<size_t>(e)) coeffs.resize(static_cast<size_t>(e) + 1);
    coeffs[static_cast<size_t>(e)] = parse_fraction(t.at(1).get<std::string>());
  }
  return CycNum::from_coeffs(order, coeffs);
}

Json to_json(const QRatFn& f) {
  return Json{{"num", laurent_json(f.numerator_terms())}, {"den", laurent_json(f.denominator_terms())}};
}

QRatFn qratfn_from_json(const Json& j) {
  return QRatFn::from_laurent(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

Json to_json(const Weight& w) {
  if (w.denom == 1) return Json(w.coords);
  return Json{{"coords", w.coords}, {"denom", w.denom}};
}

Weight weight_from_json(const Json& j) {
  if (j.is_array()) return Weight(j.get<std::vector<int>>());
  return Weight(j.at("coords").get<std::vector<int>>(), j.at("denom").get<int>());
}

Json to_json(const ComplexF& z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const CycMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(vector_json(row));
  return out;
}

Json to_json(const ComplexMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(vector_json(row));
  return out;
}

Json to_json(const ModularData& md) {
  return Json{{"algebra", md.rs.name()},
              {"kappa", md.kappa},
              {"mode", "exact"},
              {"alcove", weights_json(md.alcove)},
              {"s", to_json(md.s)},
              {"t", to_json(md.t)},
              {"c", to_json(md.c)},
              {"dims", vector_json(md.dims)},
              {"p_plus", to_json(md.p_plus)},
              {"p_minus", to_json(md.p_minus)},
              {"D2", to_json(md.D2)},
              {"zeta", to_json(md.zeta)},
              {"central_charge", to_fraction_string(md.central_charge)}};
}

Json to_json_float(const ModularData& md) {
  const ModularDataFloat f = build_modular_data_float(md.rs, md.kappa);
  std::vector<ComplexF> dims;
  for (const auto& d : md.dims) dims.push_back(d.to_complex());
  return Json{{"algebra", md.rs.name()},
              {"kappa", md.kappa},
              {"mode", "float"},
              {"alcove", weights_json(md.alcove)},
              {"s", to_json(f.s)},
              {"t", to_json(f.t)},
              {"c", to_json(to_complex(md.c))},
              {"dims", vector_json(dims)},
              {"s_tilde", to_json(f.s_tilde)},
              {"t_tilde", to_json(f.t_tilde)},
              {"p_plus", to_json(f.p_plus)},
              {"p_minus", to_json(f.p_minus)},
              {"D2", to_json(f.D2)},
              {"zeta", to_json(f.zeta)},
              {"central_charge", md.central_charge.get_d()}};
}

Json fusion_product_json(const Weight& lambda, const Weight& mu, const std::map<Weight, long>& result) {
  Json res = Json::array();
  for (const auto& [nu, m] : result) res.push_back(Json{{"nu", to_json(nu)}, {"mult", m}});
  return Json{{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"result", res}};
}

Json to_json(const FusionTable& t) {
  Json products = Json::array();
  for (size_t a = 0; a < t.alcove.size(); ++a)
    for (size_t b = 0; b < t.alcove.size(); ++b) {
      std::map<Weight, long> res;
      for (size_t c = 0; c < t.alcove.size(); ++c)
        if (t.at(a, b, c) != 0) res[t.alcove[c]] = t.at(a, b, c);
      products.push_back(fusion_product_json(t.alcove[a], t.alcove[b], res));
    }
  return Json{{"kappa", t.kappa}, {"alcove", weights_json(t.alcove)}, {"products", products}};
}

Json to_json(const QWPoly& p) {
  Json terms = Json::array();
  for (const auto& [w, c] : p.terms) terms.push_back(Json{{"weight", to_json(w)}, {"coeff", to_json(c)}});
  return terms;
}

Json to_json(const SUData& su) {
  return Json{{"n", su.n},
              {"k", su.k},
              {"K", su.K},
              {"kappa", su.kappa},
              {"mode", "exact"},
              {"alcove", weights_json(su.alcove)},
              {"S", to_json(su.S)},
              {"T", to_json(su.T)},
              {"d", vector_json(su.d)},
              {"norms", vector_json(su.norms)},
              {"kappa_C", to_json(su.kappa_c)},
              {"theta_U", to_json(su.theta_u)}};
}

Json to_json_float(const SUData& su) {
  auto floats = [](const std::vector<CycNum>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(to_json(x.to_complex()));
    return out;
  };
  return Json{{"n", su.n},
              {"k", su.k},
              {"K", su.K},
              {"kappa", su.kappa},
              {"mode", "float"},
              {"alcove", weights_json(su.alcove)},
              {"S", to_json(to_complex(su.S))},
              {"T", to_json(to_complex(su.T))},
              {"d", floats(su.d)},
              {"norms", floats(su.norms)},
              {"kappa_C", to_json(su.kappa_c.to_complex())},
              {"theta_U", to_json(su.theta_u.to_complex())}};
}

Json to_json(const VerificationReport& r, bool with_timing) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json entry{{"name", c.name}, {"anchor", c.anchor}, {"status", to_string(c.status)}};
    if (!c.witness.empty()) entry["witness"] = c.witness;
    checks.push_back(entry);
  }
  Json out{{"suite", r.suite},
           {"passed", r.passed()},
           {"counts", {{"pass", r.count(CheckStatus::pass)}, {"fail", r.count(CheckStatus::fail)}, {"skipped", r.count(CheckStatus::skipped)}}},
           {"checks", checks},
           {"notes", r.notes}};
  if (with_timing) out["duration_seconds"] = r.duration_seconds;
  return out;
}

}  // namespace qmod
