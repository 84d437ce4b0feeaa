#include "qmod/macdonald.hpp"

#include <cmath>
#include <numbers>

#include "qmod/chardata.hpp"
#include "qmod/modular.hpp"

namespace qmod {
namespace {

long factorial(int n) {
  long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

int to_int(const Rational& x) {
  if (!is_integer(x)) throw InternalError("expected an integral pairing, got " + to_fraction_string(x));
  return static_cast<int>(to_long_checked(x.get_num()));
}

CycNum sign_power(long e) { return e % 2 == 0 ? CycNum(1) : CycNum(-1); }

std::string weights_label(const Weight& a, const Weight& b) { return "(" + a.to_string() + ", " + b.to_string() + ")"; }

std::string mismatch(const SUData& su, const CycMatrix& lhs, const CycMatrix& rhs) {
  auto bad = first_mismatch(lhs, rhs);
  if (!bad) return {};
  auto [i, j] = *bad;
  return "entry " + weights_label(su.alcove[i], su.alcove[j]) + ": lhs=" + lhs[i][j].to_string() +
         " rhs=" + rhs[i][j].to_string();
}

}  // namespace

bool dominance_leq(const RootSystemData& rs, const Weight& mu, const Weight& lambda) {
  for (const auto& c : root_coordinates(rs, lambda - mu))
    if (!is_integer(c) || c < 0) return false;
  return true;
}

QWPoly delta_k_product(const RootSystemData& rs, int k) {
  if (k < 1) throw PreconditionError("k must be positive");
  QWPoly acc = QWPoly::monomial(Weight::zero(rs.rank));
  for (int i = 0; i < k; ++i) {
    const QRatFn middle = -(QRatFn::q_power(2 * i) + QRatFn::q_power(-2 * i));
    for (const auto& alpha : rs.positive_roots) {
      QWPoly factor = QWPoly::monomial(alpha) + QWPoly::monomial(-alpha) + QWPoly::monomial(Weight::zero(rs.rank), middle);
      acc = acc * factor;
    }
  }
  return acc;
}

QRatFn norm_formula(const RootSystemData& rs, const Weight& lambda, int k) {
  if (!is_dominant(lambda)) throw PreconditionError("norm_formula needs a dominant weight");
  QRatFn acc(1);
  const Weight shifted = lambda + k * rs.rho;
  for (const auto& alpha : rs.positive_roots) {
    const int a = to_int(form(rs, alpha, shifted));
    for (int i = 1; i < k; ++i) acc *= QRatFn::q_number(a + i) / QRatFn::q_number(a - i);
  }
  return acc;
}

MacdonaldContext::MacdonaldContext(int n, int k, int K) : n_(n), k_(k), K_(K) {
  if (n < 2) throw PreconditionError("n must be at least 2");
  if (k < 1) throw PreconditionError("k must be positive");
  if (K < 0) throw PreconditionError("K must be non-negative");
  rs_ = build_root_system('A', n - 1);
  alcove_ = enumerate_CK(rs_, K, k);
  delta_ = delta_k_product(rs_, k);
  const QRatFn unsigned_one = delta_.coefficient(Weight::zero(rs_.rank)) / QRatFn(factorial(n));
  const QRatFn target = norm_formula(rs_, Weight::zero(rs_.rank), k);
  if (unsigned_one == target) {
    sigma_ = 1;
  } else if (unsigned_one == -target) {
    sigma_ = -1;
  } else {
    throw InternalError("constant term of Delta_k is not a signed multiple of the norm at 0: " +
                        unsigned_one.to_string() + " vs " + target.to_string());
  }
}

QRatFn MacdonaldContext::inner_product(const QWPoly& f, const QWPoly& g) const {
  QRatFn acc;
  for (const auto& [b, gb] : g.terms) {
    const Weight bs = star(rs_, b);
    const QRatFn gbar = gb.bar();
    for (const auto& [a, fa] : f.terms) {
      auto it = delta_.terms.find(-(a + bs));
      if (it != delta_.terms.end()) acc += fa * gbar * it->second;
    }
  }
  return QRatFn(sigma_) * acc / QRatFn(factorial(n_));
}

const QWPoly& MacdonaldContext::polynomial(const Weight& lambda) {
  auto it = polys_.find(lambda);
  if (it != polys_.end()) return it->second;
  if (!is_dominant(lambda) || lambda.rank() != rs_.rank)
    throw PreconditionError("Macdonald polynomials are indexed by dominant weights of A" + std::to_string(rs_.rank));
  const auto below = dominant_weights_below(rs_, lambda);
  const QWPoly m = orbit_sum<QRatFn>(rs_, lambda);
  QWPoly p = m;
  for (auto mu = below.rbegin(); mu != below.rend(); ++mu) {
    if (*mu == lambda) continue;
    const QWPoly& pm = polynomial(*mu);
    const QRatFn coef = inner_product(m, pm) / norm(*mu);
    p -= coef * pm;
  }
  norms_[lambda] = inner_product(p, p);
  return polys_.emplace(lambda, std::move(p)).first->second;
}

const QRatFn& MacdonaldContext::norm(const Weight& lambda) {
  auto it = norms_.find(lambda);
  if (it == norms_.end()) {
    polynomial(lambda);
    it = norms_.find(lambda);
  }
  return it->second;
}

CycWPoly specialize(const QWPoly& p, int kappa) {
  CycWPoly out;
  for (const auto& [w, c] : p.terms) out.add_term(w, c.eval_at_epsilon(kappa));
  return out;
}

CycNum evaluate_at(const RootSystemData& rs, const CycWPoly& f, const Weight& point, int kappa) {
  const long mk = static_cast<long>(rs.lacing) * kappa;
  CycNum acc;
  for (const auto& [w, c] : f.terms) acc += c * epsilon_power(form(rs, w, point, FormVariant::primed), mk);
  return acc;
}

SUData build_su_data(MacdonaldContext& ctx) {
  SUData su;
  const auto& rs = ctx.rs();
  su.n = ctx.n();
  su.k = ctx.k();
  su.K = ctx.K();
  su.kappa = ctx.kappa();
  su.alcove = ctx.alcove();
  const int n = su.n, k = su.k, kappa = su.kappa;
  const size_t m = su.alcove.size();

  std::vector<CycWPoly> special;
  for (const auto& mu : su.alcove) {
    try {
      special.push_back(specialize(ctx.polynomial(mu), kappa));
      su.norms.push_back(ctx.norm(mu).eval_at_epsilon(kappa));
    } catch (const PoleError& e) {
      throw InternalError("P_" + mu.to_string() + " has a pole at q = eps although it lies in C_K: " + e.what());
    }
  }

  long radicand = n;
  for (int i = 1; i < n; ++i) radicand *= kappa;
  const CycNum prefactor = CycNum::imaginary_unit().pow(n * (n - 1) / 2) / CycNum::sqrt_integer(radicand);

  su.S.assign(m, std::vector<CycNum>(m));
  su.T.assign(m, std::vector<CycNum>(m));
  for (size_t l = 0; l < m; ++l) {
    const Weight shifted = su.alcove[l] + k * rs.rho;
    CycNum d = prefactor;
    for (const auto& alpha : rs.positive_roots) {
      const Rational a = form(rs, alpha, shifted);
      for (int i = 0; i < k; ++i) d *= epsilon_sum({{-a, 1}, {a - 2 * i, -1}}, kappa);
    }
    su.d.push_back(d);
    const Weight point = -2 * shifted;
    for (size_t j = 0; j < m; ++j) su.S[l][j] = d * evaluate_at(rs, special[j], point, kappa);
    su.T[l][l] = epsilon_power(form(rs, shifted, shifted) - make_rational(kappa, n) * form(rs, rs.rho, rs.rho), kappa);
  }
  const long e = static_cast<long>(n) * (n - 1) * k * (k - 1);
  su.kappa_c = sign_power(static_cast<long>(k - 1) * n * (n - 1) / 2) * epsilon_power(Rational(e / 2), kappa);
  su.theta_u = epsilon_power(Rational(e), kappa);
  return su;
}

ComplexMatrix su_matrix_float(const SUData& su) { return to_complex(su.S); }

VerificationReport verify_macdonald_generic(MacdonaldContext& ctx, int max_level) {
  VerificationReport r;
  r.suite = "macdonald";
  const auto& rs = ctx.rs();
  const auto weights = dominant_weights_with_level(rs, max_level);
  r.notes.push_back("n=" + std::to_string(ctx.n()) + " k=" + std::to_string(ctx.k()) + " level<=" +
                    std::to_string(max_level) + ", inner product sign sigma=" + std::to_string(ctx.sigma()));

  std::string w;
  for (const auto& l : weights) {
    const auto& p = ctx.polynomial(l);
    if (p.coefficient(l) != QRatFn(1)) w = "leading coefficient of P_" + l.to_string();
    for (const auto& [mu, c] : p.terms)
      if (!dominance_leq(rs, make_dominant(rs, mu).dominant, l)) w = "P_" + l.to_string() + " has term " + mu.to_string();
    if (!is_symmetric(rs, p)) w = "P_" + l.to_string() + " is not W-invariant";
    if (!w.empty()) break;
  }
  r.add("triangularity", "Sec 5 def (1) P_l=e^l+lower terms", w.empty(), w);

  w.clear();
  for (size_t a = 0; a < weights.size() && w.empty(); ++a)
    for (size_t b = a + 1; b < weights.size() && w.empty(); ++b) {
      QRatFn ip = ctx.inner_product(ctx.polynomial(weights[a]), ctx.polynomial(weights[b]));
      if (!ip.is_zero()) w = "(P_l, P_m) = " + ip.to_string() + " at " + weights_label(weights[a], weights[b]);
    }
  r.add("orthogonality", "Sec 5 def (2) (P_l,P_m)_k=0", w.empty(), w);

  w.clear();
  for (const auto& l : weights) {
    QRatFn lhs = ctx.norm(l), rhs = norm_formula(rs, l, ctx.k());
    if (lhs != rhs) {
      w = "at " + l.to_string() + ": Gram-Schmidt " + lhs.to_string() + " vs formula " + rhs.to_string();
      break;
    }
  }
  r.add("norm formula", "(5.7) (P_l,P_l)_k = prod [(a,l+k rho)+i]/[(a,l+k rho)-i]", w.empty(), w);

  w.clear();
  for (size_t a = 0; a < weights.size() && w.empty(); ++a)
    for (size_t b = 0; b < weights.size() && w.empty(); ++b) {
      const QWPoly ma = orbit_sum<QRatFn>(rs, weights[a]);
      const auto& pb = ctx.polynomial(weights[b]);
      if (ctx.inner_product(pb, ma) != ctx.inner_product(ma, pb).bar())
        w = "(g,f) != conj (f,g) at " + weights_label(weights[a], weights[b]);
    }
  r.add("hermitian symmetry", "(4.5) (g,f)=conj (f,g)", w.empty(), w);

  w.clear();
  std::vector<Weight> samples = rs.simple_roots;
  samples.push_back(rs.theta);
  samples.push_back(2 * rs.theta - rs.simple_roots.front());
  for (const auto& l : weights) {
    const auto& p = ctx.polynomial(l);
    if (bar(rs, p) != ctx.polynomial(star(rs, l))) w = "conj(P_l) != P_l* at " + l.to_string();
    for (const auto& mu : samples) {
      QRatFn neg, st;
      for (const auto& [nu, c] : p.terms) {
        neg += c * QRatFn::q_power(to_int(form(rs, nu, -mu)));
        st += c * QRatFn::q_power(to_int(form(rs, nu, star(rs, mu))));
      }
      if (neg != st) w = "P_l(q^{-m}) != P_l(q^{m*}) at " + weights_label(l, mu);
    }
    if (!w.empty()) break;
  }
  r.add("conjugation symmetry", "(5.5) conj P_l = P_l*, P_l(q^{-m})=P_l(q^{m*})", w.empty(), w);

  if (ctx.k() == 1) {
    w.clear();
    for (const auto& l : weights) {
      QWPoly chi;
      for (const auto& [mu, m] : weight_multiplicities(rs, l).mults) chi.add_term(mu, QRatFn(m));
      if (ctx.polynomial(l) != chi) {
        w = "P_" + l.to_string() + " differs from the Weyl character";
        break;
      }
    }
    r.add("k=1 polynomials are Weyl characters", "Sec 5 k=1 Macdonald = Schur", w.empty(), w);
  }
  return r;
}

VerificationReport verify_section5(MacdonaldContext& ctx, double tol) {
  using std::numbers::pi;
  VerificationReport r;
  r.suite = "section5";
  const auto& rs = ctx.rs();
  const int n = ctx.n(), k = ctx.k(), K = ctx.K(), kappa = ctx.kappa();
  r.notes.push_back("n=" + std::to_string(n) + " k=" + std::to_string(k) + " K=" + std::to_string(K) +
                    " kappa=" + std::to_string(kappa) + ", inner product sign sigma=" + std::to_string(ctx.sigma()));

  std::string w;
  for (const auto& l : ctx.alcove()) {
    try {
      specialize(ctx.polynomial(l), kappa);
    } catch (const PoleError& e) {
      w = "P_" + l.to_string() + ": " + e.what();
      break;
    }
  }
  r.add("P_l regular at q=eps on C_K", "Thm 5.2 P_l well defined at q=eps", w.empty(), w);
  if (!w.empty()) return r;

  const SUData su = build_su_data(ctx);
  const size_t m = su.alcove.size();
  std::vector<size_t> dual(m);
  for (size_t i = 0; i < m; ++i) {
    const Weight s = star(rs, su.alcove[i]);
    for (size_t j = 0; j < m; ++j)
      if (su.alcove[j] == s) dual[i] = j;
  }
  CycMatrix perm(m, std::vector<CycNum>(m));
  for (size_t i = 0; i < m; ++i) perm[i][dual[i]] = CycNum(1);
  const CycNum kc = su.kappa_c, kc_inv = su.kappa_c.inverse();

  {
    CycMatrix lhs(m, std::vector<CycNum>(m)), rhs = lhs;
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) {
        lhs[i][j] = su.S[i][j];
        rhs[i][j] = su.S[dual[i]][dual[j]];
      }
    r.add("S_{lm} = S_{l*m*}", "(5.10) S_{lm}=S_{l*m*}", lhs == rhs, mismatch(su, lhs, rhs));
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) {
        lhs[i][j] = su.S[i][j].conj();
        rhs[i][j] = kc * su.S[dual[i]][j];
      }
    r.add("conj(S_{lm}) = kappa_C S_{l*m}", "(5.10) conj S_{lm}=(-1)^{(k-1)n(n-1)/2}eps^{n(n-1)k(k-1)/2}S_{l*m}",
          lhs == rhs, mismatch(su, lhs, rhs));
  }

  const CycMatrix S2 = multiply(su.S, su.S);
  {
    const CycMatrix expected = scale(kc_inv, perm);
    const bool printed = S2 == expected;
    const bool flipped = S2 == scale(kc, perm);
    r.add("S^2 = kappa_C^{-1} delta_{lm*}", "Thm 5.7 S^2=(-1)^{(k-1)n(n-1)/2}eps^{-n(n-1)k(k-1)/2}delta_{lm*}", printed,
          mismatch(su, S2, expected));
    std::string note = "S^2 scalar: ";
    if (printed && flipped) note += "both eps^{-n(n-1)k(k-1)/2} and eps^{+n(n-1)k(k-1)/2} match (they coincide here)";
    else if (printed) note += "matches the printed Thm 5.7 phase eps^{-n(n-1)k(k-1)/2}; the Thm 5.5 phase eps^{+...} does not";
    else if (flipped) note += "matches eps^{+n(n-1)k(k-1)/2}, not the printed Thm 5.7 phase";
    else note += "matches neither candidate phase";
    r.notes.push_back(note);
    // S^2 acts as C; Thm 5.5 gives C^{-1} = kappa_C on the intertwiners.
    r.add("Thm 5.5 and Thm 5.7 constants consistent", "Thm 5.5 Phi C^{-1}=kappa_C Phi*; Thm 5.7 S^2=C",
          kc * kc_inv == CycNum(1) && printed, "S^2 scalar is not the inverse of the Thm 5.5 scalar");
  }
  {
    const Weight u = (k - 1) * n * Weight([&] {
      std::vector<int> c(static_cast<size_t>(rs.rank), 0);
      c[0] = 1;
      return c;
    }());
    const CycNum twist = epsilon_power(form(rs, u, u + 2 * rs.rho), kappa);
    r.add("theta_U = eps^{n(n-1)k(k-1)}", "Remark after Thm 5.5 theta_U=eps^{n(n-1)k(k-1)}", twist == su.theta_u,
          "twist of U = " + twist.to_string());
    const CycNum c_scalar = kc_inv;
    r.add("C^2 = theta_U^{-1}", "Remark after Thm 5.5 C^2=theta_U^{-1}", c_scalar * c_scalar == su.theta_u.inverse(),
          "C scalar squared = " + (c_scalar * c_scalar).to_string());
    r.notes.push_back("kappa_C^2 = theta_U for the Thm 5.5 scalar kappa_C; its inverse (the scalar of C) squares to theta_U^{-1}");
  }
  {
    const CycMatrix st = multiply(su.S, su.T);
    const CycMatrix st3 = multiply(multiply(st, st), st);
    r.add("(ST)^3 = S^2", "Thm 5.7 (ST)^3=S^2", st3 == S2, mismatch(su, st3, S2));
  }
  {
    w.clear();
    for (size_t i = 0; i < m && w.empty(); ++i)
      for (size_t j = 0; j < m && w.empty(); ++j)
        if (su.S[i][j] * su.norms[i] != su.S[j][i] * su.norms[j])
          w = "at " + weights_label(su.alcove[i], su.alcove[j]);
    r.add("S_{lm} N_l = S_{ml} N_m", "Thm 5.6 (5.12) S_{lm}(P_l,P_l)_k=S_{ml}(P_m,P_m)_k", w.empty(), w);

    w.clear();
    for (size_t i = 0; i < m && w.empty(); ++i)
      for (size_t j = 0; j < m && w.empty(); ++j) {
        const auto pi_ = specialize(ctx.polynomial(su.alcove[i]), kappa);
        const auto pj = specialize(ctx.polynomial(su.alcove[j]), kappa);
        const Weight xi = -2 * (su.alcove[i] + k * rs.rho), xj = -2 * (su.alcove[j] + k * rs.rho);
        const CycNum lhs = evaluate_at(rs, pi_, xj, kappa) * norm_formula(rs, su.alcove[j], k).eval_at_epsilon(kappa) * su.d[j];
        const CycNum rhs = evaluate_at(rs, pj, xi, kappa) * norm_formula(rs, su.alcove[i], k).eval_at_epsilon(kappa) * su.d[i];
        if (lhs != rhs) w = "at " + weights_label(su.alcove[i], su.alcove[j]);
      }
    r.add("symmetry identity", "(5.13) P_l(eps^{-2(m+k rho)})N_m d_m = P_m(eps^{-2(l+k rho)})N_l d_l", w.empty(), w);

    const CycMatrix g = diagonal_matrix(su.norms);
    const CycMatrix lhs = multiply(multiply(conj_transpose(su.S), g), su.S);
    r.add("S unitary for the norm form: S^dagger G S = G", "Thm 2.5 unitarity of S on Hom(H,U)", lhs == g, mismatch(su, lhs, g));
  }
  {
    // Norm criterion on a box of dominant weights reaching two levels past C_K.
    w.clear();
    std::vector<std::string> skipped;
    size_t tested = 0;
    for (const auto& l : dominant_weights_with_level(rs, K + 2)) {
      const int level = to_int(pairing(rs, l, rs.theta));
      const bool in_ck = level <= K;
      // The criterion is stated for λ with λ + (k-1)ρ in the alcove, i.e. level <= K + k - 1.
      if (level > K + k - 1) {
        skipped.push_back(l.to_string());
        continue;
      }
      ++tested;
      const bool nonzero = !norm_formula(rs, l, k).eval_at_epsilon(kappa).is_zero();
      if (nonzero != in_ck) w = "norm at eps " + std::string(nonzero ? "nonzero" : "zero") + " at " + l.to_string();
    }
    r.add("norm nonzero at eps iff l in C_K (" + std::to_string(tested) + " weights)",
          "Thm 5.1 (Phi_l,Phi_l)!=0 iff l in C_K", w.empty(), w);
    if (!skipped.empty()) {
      std::string list;
      for (const auto& s : skipped) list += (list.empty() ? "" : " ") + s;
      r.skip("norm criterion outside l+(k-1)rho in C", "Thm 5.1 hypothesis", "weights " + list);
    }
  }
  {
    // Cross-checks against the modular data of sl_n at the same level, in floating point.
    const ModularDataFloat f = build_modular_data_float(rs, kappa);
    const double D = std::sqrt(f.D2.real());
    w.clear();
    for (size_t i = 0; i < m; ++i) {
      const Weight shifted = su.alcove[i] + k * rs.rho;
      double dim = 1.0;
      ComplexF phi0(1.0);
      for (const auto& alpha : rs.positive_roots) {
        const double a = form(rs, alpha, shifted).get_d();
        dim *= std::sin(pi * a / kappa) / std::sin(pi * form(rs, alpha, rs.rho).get_d() / kappa);
        for (int j = 1; j < k; ++j) phi0 *= std::polar(1.0, -pi * a / kappa) - std::polar(1.0, pi * (a - 2 * j) / kappa);
      }
      if (!approx_equal(su.d[i].to_complex(), dim / D * phi0, tol)) w = "d_l mismatch at " + su.alcove[i].to_string();
    }
    r.add("d_l = dim_eps V_{l^k} / D * phi_0 (float)", "Thm 5.4 proof d_l=(dim V_{l^k}/D)phi_0", w.empty(), w);

    const auto md = build_modular_data(rs, kappa);
    w.clear();
    const CycNum zeta_inv = md.zeta.inverse();
    for (size_t i = 0; i < m && w.empty(); ++i) {
      const Weight lk = su.alcove[i] + (k - 1) * rs.rho;
      const CycNum theta = epsilon_power(form(rs, lk, lk + 2 * rs.rho), kappa);
      if (su.T[i][i] != theta * zeta_inv) w = "T mismatch at " + su.alcove[i].to_string();
    }
    r.add("T_l = theta_{l^k} zeta^{-1}", "Thm 5.4 proof T from (3.19)", w.empty(), w);

    if (k == 1) {
      ComplexMatrix expected(m, std::vector<ComplexF>(m));
      for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) expected[i][j] = f.s_tilde[md.index_of(su.alcove[i])][md.index_of(su.alcove[j])];
      r.add("k=1: S_U = s/D (float)", "Sec 5 k=1 reduces to (3.20)", approx_equal(su_matrix_float(su), expected, tol),
            "S_U differs from the normalized s-matrix");
    }
  }
  return r;
}

}  // namespace qmod
