#include "qmod/modular.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "qmod/chardata.hpp"
#include "qmod/weyl.hpp"

namespace qmod {
namespace {

std::string pair_label(const ModularData& md, size_t i, size_t j) {
  return "(" + md.alcove[i].to_string() + ", " + md.alcove[j].to_string() + ")";
}

std::string matrix_witness(const ModularData& md, const CycMatrix& lhs, const CycMatrix& rhs) {
  auto bad = first_mismatch(lhs, rhs);
  if (!bad) return {};
  auto [i, j] = *bad;
  if (i >= lhs.size() || j >= lhs[i].size() || i >= rhs.size() || j >= rhs[i].size()) return "shape mismatch";
  return "entry " + pair_label(md, i, j) + ": lhs=" + lhs[i][j].to_string() + " rhs=" + rhs[i][j].to_string();
}

std::string scalar_witness(const CycNum& lhs, const CycNum& rhs) {
  return "lhs=" + lhs.to_string() + " rhs=" + rhs.to_string();
}

CycNum s_numerator(const RootSystemData& rs, int kappa, const Weight& lambda, const Weight& mu) {
  const Weight lr = lambda + rs.rho, mr = mu + rs.rho;
  std::vector<EpsilonTerm> terms;
  for (const auto& w : weyl_group(rs)) terms.push_back({-2 * form(rs, w.apply(lr), mr, FormVariant::primed), w.sign()});
  return epsilon_sum(terms, static_cast<long>(rs.lacing) * kappa);
}

bool is_root_of_unity(const CycNum& x) { return x.pow(x.order()) == CycNum(1); }

}  // namespace

size_t ModularData::index_of(const Weight& lambda) const {
  for (size_t i = 0; i < alcove.size(); ++i)
    if (alcove[i] == lambda) return i;
  throw PreconditionError("weight " + lambda.to_string() + " is not in the alcove at level " + std::to_string(kappa));
}

size_t ModularData::dual_index(size_t i) const { return index_of(star(rs, alcove[i])); }

CycNum s_entry_extended(const RootSystemData& rs, int kappa, const Weight& lambda, const Weight& mu) {
  return s_numerator(rs, kappa, lambda, mu) / weyl_denominator_value(rs, -2 * rs.rho, kappa);
}

CycNum d2_closed_form(const RootSystemData& rs, int kappa) {
  BigInt index = lattice_index(rs, LatticeSpec{}, LatticeSpec{LatticeSpec::Kind::coroot, kappa});
  CycNum delta = weyl_denominator_value(rs, -2 * rs.rho, kappa);
  CycNum value = CycNum(Rational(index)) / (delta * delta);
  return rs.num_positive_roots() % 2 == 0 ? value : -value;
}

ModularData build_modular_data(const RootSystemData& rs, int kappa) {
  ModularData md;
  md.rs = rs;
  md.kappa = kappa;
  md.alcove = enumerate_alcove(rs, kappa);
  const size_t n = md.alcove.size();
  const long mk = md.m_kappa();
  const CycNum inv_delta = weyl_denominator_value(rs, -2 * rs.rho, kappa).inverse();

  md.s.assign(n, std::vector<CycNum>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      md.s[i][j] = s_numerator(rs, kappa, md.alcove[i], md.alcove[j]) * inv_delta;
      md.s[j][i] = md.s[i][j];
    }

  for (const auto& l : md.alcove) {
    md.theta.push_back(epsilon_power(form(rs, l, l + 2 * rs.rho, FormVariant::primed), mk));
    md.dims.push_back(quantum_dim(rs, l, kappa));
  }
  md.t = diagonal_matrix(md.theta);
  md.c.assign(n, std::vector<CycNum>(n));
  for (size_t i = 0; i < n; ++i) md.c[i][md.dual_index(i)] = CycNum(1);

  for (size_t i = 0; i < n; ++i) {
    CycNum d2 = md.dims[i] * md.dims[i];
    md.p_plus += md.theta[i] * d2;
    md.p_minus += md.theta[i].inverse() * d2;
  }
  md.D2 = md.p_plus * md.p_minus;
  const int hv = rs.dual_coxeter;
  md.zeta = epsilon_power(make_rational(kappa - hv, hv) * form(rs, rs.rho, rs.rho, FormVariant::primed), mk);
  md.central_charge = make_rational(static_cast<long>(kappa - hv) * rs.dim_g, kappa);
  return md;
}

ModularDataFloat build_modular_data_float(const RootSystemData& rs, int kappa) {
  using std::numbers::pi;
  ModularDataFloat f;
  const auto alcove = enumerate_alcove(rs, kappa);
  const size_t n = alcove.size();
  const double mk = static_cast<double>(rs.lacing) * kappa;
  auto eps = [&](const Rational& a) { return std::polar(1.0, pi * a.get_d() / mk); };

  ComplexF delta(1.0);
  for (const auto& a : rs.positive_roots) {
    double x = form(rs, a, rs.rho).get_d();
    delta *= ComplexF(0.0, -2.0 * std::sin(pi * x / kappa));
  }
  f.s.assign(n, std::vector<ComplexF>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      ComplexF acc(0.0);
      for (const auto& w : weyl_group(rs))
        acc += static_cast<double>(w.sign()) *
               eps(-2 * form(rs, w.apply(alcove[i] + rs.rho), alcove[j] + rs.rho, FormVariant::primed));
      f.s[i][j] = acc / delta;
    }
  f.t.assign(n, std::vector<ComplexF>(n));
  for (size_t i = 0; i < n; ++i) {
    const auto& l = alcove[i];
    ComplexF theta = eps(form(rs, l, l + 2 * rs.rho, FormVariant::primed));
    f.t[i][i] = theta;
    double dim = 1.0;
    for (const auto& a : rs.positive_roots)
      dim *= std::sin(pi * form(rs, a, l + rs.rho).get_d() / kappa) / std::sin(pi * form(rs, a, rs.rho).get_d() / kappa);
    f.p_plus += theta * dim * dim;
    f.p_minus += dim * dim / theta;
  }
  f.D2 = f.p_plus * f.p_minus;
  const int hv = rs.dual_coxeter;
  f.zeta = eps(make_rational(kappa - hv, hv) * form(rs, rs.rho, rs.rho, FormVariant::primed));
  const double D = std::sqrt(f.D2.real());
  f.s_tilde = f.s;
  for (auto& row : f.s_tilde)
    for (auto& x : row) x /= D;
  f.t_tilde = f.t;
  for (auto& row : f.t_tilde)
    for (auto& x : row) x /= f.zeta;
  return f;
}

VerificationReport verify_modular_relations(const ModularData& md, double tol) {
  using std::numbers::pi;
  VerificationReport r;
  r.suite = "modular";
  const auto& rs = md.rs;
  const size_t n = md.alcove.size();
  r.notes.push_back("algebra " + rs.name() + ", kappa " + std::to_string(md.kappa) + ", " + std::to_string(n) +
                    " simple objects");

  {
    std::string w;
    for (size_t i = 0; i < n && w.empty(); ++i)
      for (size_t j = 0; j < n && w.empty(); ++j)
        if (md.s[i][j] != md.s[j][i]) w = "entry " + pair_label(md, i, j);
    r.add("s symmetric", "Lemma 6.1 s_{lm}=s_{ml}", w.empty(), w);
  }
  {
    std::string w;
    for (size_t i = 0; i < n && w.empty(); ++i) {
      if (md.s[i][0] != md.dims[i]) w = "s_{l0} at " + md.alcove[i].to_string() + ": " + scalar_witness(md.s[i][0], md.dims[i]);
      if (!md.dims[i].is_zero() && md.dims[i].to_complex().real() <= 0) w = "non-positive dim at " + md.alcove[i].to_string();
    }
    r.add("s_{l0} = dim_eps V_l > 0", "Prop 1.2 s_{i0}=dim X_i; Prop 3.8 dim>0", w.empty(), w);
  }
  {
    std::string w;
    for (size_t i = 0; i < n && w.empty(); ++i)
      for (size_t j = 0; j < n && w.empty(); ++j) {
        size_t is = md.dual_index(i), js = md.dual_index(j);
        if (md.s[i][j] != md.s[is][js]) w = "s_{l*m*} differs at " + pair_label(md, i, j);
        else if (md.s[i][j].conj() != md.s[i][js]) w = "conj(s) differs from s_{lm*} at " + pair_label(md, i, j);
      }
    r.add("s_{lm} = s_{l*m*} and conj(s_{lm}) = s_{lm*}", "(1.5), (1.23) conj s_{ij}=s_{ij*}", w.empty(), w);
  }
  {
    std::string w;
    if (md.theta[0] != CycNum(1)) w = "theta_0 = " + md.theta[0].to_string();
    for (size_t i = 0; i < n && w.empty(); ++i) {
      const CycNum& th = md.theta[i];
      if (th != md.theta[md.dual_index(i)]) w = "theta_l != theta_l* at " + md.alcove[i].to_string();
      else if (th.conj() * th != CycNum(1)) w = "conj(theta) != theta^-1 at " + md.alcove[i].to_string();
      else if (!is_root_of_unity(th)) w = "theta not a root of unity at " + md.alcove[i].to_string();
    }
    if (w.empty() && !is_root_of_unity(md.zeta)) w = "zeta not a root of unity: " + md.zeta.to_string();
    r.add("twists: theta_0 = 1, theta_l = theta_l*, roots of unity", "Thm 1.11 theta_i, zeta roots of unity", w.empty(), w);
  }
  r.add("conj(p+) = p-", "(1.24) conj p^+ = p^-", md.p_plus.conj() == md.p_minus,
        scalar_witness(md.p_plus.conj(), md.p_minus));
  {
    CycNum sum;
    for (const auto& d : md.dims) sum += d * d;
    r.add("p+ p- = sum dim^2", "(1.11) p^+p^-=sum (dim X_i)^2", sum == md.D2, scalar_witness(md.D2, sum));
    CycNum closed = d2_closed_form(rs, md.kappa);
    r.add("D^2 closed form", "(6.4) D^2=|P/kQv|(-1)^{|R+|}delta^{-2}", closed == md.D2, scalar_witness(md.D2, closed));
  }

  const CycMatrix s2 = multiply(md.s, md.s);
  {
    CycMatrix rhs = scale(md.D2, md.c);
    r.add("s^2 = D^2 c", "Thm 6.2 s^2=D^2 c", s2 == rhs, matrix_witness(md, s2, rhs));
  }
  {
    CycMatrix st = multiply(md.s, md.t);
    CycMatrix st3 = multiply(multiply(st, st), st);
    CycMatrix rhs = scale(md.p_plus, s2);
    r.add("(st)^3 = p+ s^2", "Thm 1.7 (1.13) (st)^3=p^+ s^2", st3 == rhs, matrix_witness(md, st3, rhs));
  }
  {
    CycMatrix lhs = multiply(s2, md.t), rhs = multiply(md.t, s2);
    r.add("s^2 t = t s^2", "Thm 1.7 (1.13) s^2 t=t s^2", lhs == rhs, matrix_witness(md, lhs, rhs));
  }
  {
    CycMatrix lhs = multiply(md.s, conj_transpose(md.s));
    CycMatrix rhs = scale(md.D2, identity_matrix(n));
    r.add("s s^dagger = D^2 Id", "Prop 1.12 s~, t~ unitary", lhs == rhs, matrix_witness(md, lhs, rhs));
  }
  {
    CycNum z6 = md.zeta.pow(6);
    r.add("zeta^6 p- = p+", "(1.14) D zeta^3=p^+, D zeta^{-3}=p^-", z6 * md.p_minus == md.p_plus,
          scalar_witness(z6 * md.p_minus, md.p_plus));
  }
  {
    CycNum det = determinant(md.s);
    r.add("det s != 0", "Cor 6.3 s non-degenerate", !det.is_zero(), "det s = 0");
  }

  // Wall-extended entries on a box of weights.
  {
    const int radius = rs.rank <= 2 ? md.kappa : 2;
    std::vector<Weight> box;
    std::vector<int> cur(static_cast<size_t>(rs.rank), -radius);
    while (true) {
      box.emplace_back(cur);
      size_t i = 0;
      while (i < cur.size() && cur[i] == radius) cur[i++] = -radius;
      if (i == cur.size()) break;
      ++cur[i];
    }
    std::string w;
    for (size_t i = 0; i < n && w.empty(); ++i) {
      for (const auto& mu : box) {
        auto fold = fold_to_alcove(rs, mu, md.kappa);
        CycNum ext = s_entry_extended(rs, md.kappa, md.alcove[i], mu);
        CycNum expected;
        if (fold.sign != 0) expected = CycNum(fold.sign) * md.s[i][md.index_of(fold.representative)];
        if (ext != expected) {
          w = "s_{l,m} at l=" + md.alcove[i].to_string() + " m=" + mu.to_string() + ": " + scalar_witness(ext, expected);
          break;
        }
        if (s_entry_extended(rs, md.kappa, mu, md.alcove[i]) != ext) {
          w = "asymmetric extended entry at m=" + mu.to_string();
          break;
        }
      }
    }
    r.add("extended s: wall zeros, symmetry, fold sign", "Lemma 6.1 s_{lm}=(-1)^{l(w)}s_{l w.m}", w.empty(), w);
  }

  // Float-mode consequences.
  {
    ComplexF zeta = md.zeta.to_complex();
    ComplexF expected = std::polar(1.0, 2 * pi * md.central_charge.get_d() / 24.0);
    r.add("zeta = exp(2 pi i c/24) (float)", "(3.19) zeta=e^{2 pi i c/24}", approx_equal(zeta, expected, tol),
          "zeta=" + md.zeta.to_string());
    const double D = std::sqrt(md.D2.to_complex().real());
    ComplexF p = md.p_plus.to_complex();
    r.add("D zeta^3 = p+ (float)", "(1.14) D zeta^3=p^+", approx_equal(D * zeta * zeta * zeta, p, tol),
          "p+=" + md.p_plus.to_string());
    BigInt index = lattice_index(rs, LatticeSpec{}, LatticeSpec{LatticeSpec::Kind::coroot, md.kappa});
    double prod = index.get_d();
    for (const auto& a : rs.positive_roots) {
      double x = 2 * std::sin(pi * form(rs, a, rs.rho).get_d() / md.kappa);
      prod /= x * x;
    }
    r.add("D^2 sine product (float)", "(3.19) D^2=|P/kQv| / prod (2 sin)^2", approx_equal(md.D2.to_complex(), prod, tol),
          "D2=" + md.D2.to_string());

    ModularDataFloat f = build_modular_data_float(rs, md.kappa);
    bool agree = approx_equal(f.s, to_complex(md.s), tol) && approx_equal(f.t, to_complex(md.t), tol) &&
                 approx_equal(f.p_plus, md.p_plus.to_complex(), tol) && approx_equal(f.zeta, zeta, tol);
    r.add("float build agrees with exact", "(3.18) s, t closed forms", agree, "float and exact tables differ");

    ComplexMatrix st(n, std::vector<ComplexF>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) st[i][j] = f.s_tilde[i][j] * f.t_tilde[j][j];
    auto mul = [n](const ComplexMatrix& a, const ComplexMatrix& b) {
      ComplexMatrix out(n, std::vector<ComplexF>(n));
      for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
          for (size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
      return out;
    };
    r.add("(s~t~)^3 = s~^2 (float)", "(1.16) (s~t~)^3=s~^2", approx_equal(mul(mul(st, st), st), mul(f.s_tilde, f.s_tilde), tol),
          "normalized relation fails");
  }
  return r;
}

}  // namespace qmod
