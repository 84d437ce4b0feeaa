#include "qmod/fusion.hpp"

#include "qmod/chardata.hpp"
#include "qmod/weyl.hpp"

namespace qmod {
namespace {

std::string triple_label(const FusionTable& t, size_t a, size_t b, size_t c) {
  return "(" + t.alcove[a].to_string() + ", " + t.alcove[b].to_string() + ", " + t.alcove[c].to_string() + ")";
}

}  // namespace

std::map<Weight, long> classical_tensor(const RootSystemData& rs, const Weight& lambda, const Weight& mu) {
  if (!is_dominant(lambda) || !is_dominant(mu)) throw PreconditionError("classical_tensor needs dominant weights");
  // Run the alternating sum over the smaller module.
  const bool swap = weyl_dimension(rs, mu) > weyl_dimension(rs, lambda);
  const Weight& big = swap ? mu : lambda;
  const Weight& small = swap ? lambda : mu;
  std::map<Weight, long> acc;
  for (const auto& [nu, m] : weight_multiplicities(rs, small).mults) {
    DominantFold f = make_dominant(rs, big + nu + rs.rho);
    bool regular = true;
    for (int c : f.dominant.coords) regular = regular && c != 0;
    if (regular) acc[f.dominant - rs.rho] += f.sign * m;
  }
  std::map<Weight, long> out;
  for (const auto& [nu, m] : acc) {
    if (m < 0) throw InternalError("negative classical multiplicity at " + nu.to_string());
    if (m > 0) out[nu] = m;
  }
  return out;
}

std::map<Weight, long> fusion_coefficients(const RootSystemData& rs, const Weight& lambda, const Weight& mu, int kappa) {
  for (const auto& x : {lambda, mu}) {
    if (!is_dominant(x) || pairing(rs, x + rs.rho, rs.theta) >= kappa)
      throw PreconditionError("weight " + x.to_string() + " is not in the alcove at level " + std::to_string(kappa));
  }
  std::map<Weight, long> acc;
  for (const auto& [nu, m] : classical_tensor(rs, lambda, mu)) {
    AffineFoldResult f = fold_to_alcove(rs, nu, kappa);
    if (f.sign != 0) acc[f.representative] += f.sign * m;
  }
  std::map<Weight, long> out;
  for (const auto& [nu, m] : acc) {
    if (m < 0)
      throw InternalError("negative fusion coefficient for (" + lambda.to_string() + ", " + mu.to_string() + ", " +
                          nu.to_string() + ")");
    if (m > 0) out[nu] = m;
  }
  return out;
}

FusionTable build_fusion_table(const RootSystemData& rs, int kappa) {
  FusionTable t;
  t.kappa = kappa;
  t.alcove = enumerate_alcove(rs, kappa);
  const size_t n = t.alcove.size();
  std::map<Weight, size_t> index;
  for (size_t i = 0; i < n; ++i) index[t.alcove[i]] = i;
  t.n.assign(n, std::vector<std::vector<long>>(n, std::vector<long>(n, 0)));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a; b < n; ++b)
      for (const auto& [nu, m] : fusion_coefficients(rs, t.alcove[a], t.alcove[b], kappa)) {
        t.n[a][b][index.at(nu)] = m;
        t.n[b][a][index.at(nu)] = m;
      }
  return t;
}

std::vector<std::vector<std::vector<CycNum>>> verlinde_table(const ModularData& md) {
  const size_t n = md.alcove.size();
  std::vector<CycNum> norm(n);
  for (size_t s = 0; s < n; ++s) {
    if (md.s[0][s].is_zero()) throw InternalError("s_{0,sigma} vanishes at " + md.alcove[s].to_string());
    norm[s] = (md.D2 * md.s[0][s]).inverse();
  }
  std::vector<std::vector<std::vector<CycNum>>> out(n, std::vector<std::vector<CycNum>>(n, std::vector<CycNum>(n)));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a; b < n; ++b) {
      std::vector<CycNum> ab(n);
      for (size_t s = 0; s < n; ++s) ab[s] = md.s[a][s] * md.s[b][s] * norm[s];
      for (size_t c = 0; c < n; ++c) {
        CycNum acc;
        for (size_t s = 0; s < n; ++s) acc += ab[s] * md.s[c][s].conj();
        out[a][b][c] = acc;
        out[b][a][c] = acc;
      }
    }
  return out;
}

CycNum verlinde_coefficient(const ModularData& md, size_t lambda, size_t mu, size_t nu) {
  CycNum acc;
  for (size_t s = 0; s < md.alcove.size(); ++s) {
    if (md.s[0][s].is_zero()) throw InternalError("s_{0,sigma} vanishes at " + md.alcove[s].to_string());
    acc += md.s[lambda][s] * md.s[mu][s] * md.s[nu][s].conj() / (md.D2 * md.s[0][s]);
  }
  return acc;
}

VerificationReport verify_fusion(const ModularData& md, const FusionTable& t) {
  VerificationReport r;
  r.suite = "fusion";
  const size_t n = t.alcove.size();
  if (t.alcove != md.alcove) throw PreconditionError("fusion table and modular data use different alcoves");
  std::vector<size_t> dual(n);
  for (size_t i = 0; i < n; ++i) dual[i] = md.dual_index(i);

  std::string w;
  for (size_t a = 0; a < n && w.empty(); ++a)
    for (size_t b = 0; b < n && w.empty(); ++b)
      for (size_t c = 0; c < n && w.empty(); ++c) {
        long v = t.at(a, b, c);
        if (v < 0) w = "negative at " + triple_label(t, a, b, c);
        else if (v != t.at(b, a, c)) w = "N_{lm}^n != N_{ml}^n at " + triple_label(t, a, b, c);
        else if (v != t.at(a, dual[c], dual[b])) w = "N_{lm}^n != N_{ln*}^{m*} at " + triple_label(t, a, b, c);
        else if (v != t.at(dual[a], dual[b], dual[c])) w = "N_{lm}^n != N_{l*m*}^{n*} at " + triple_label(t, a, b, c);
      }
  r.add("fusion symmetries", "(1.2) N_{ij}^k symmetries", w.empty(), w);

  w.clear();
  for (size_t a = 0; a < n && w.empty(); ++a)
    for (size_t b = 0; b < n && w.empty(); ++b) {
      if (t.at(a, b, 0) != (b == dual[a] ? 1 : 0)) w = "N_{lm}^0 at " + triple_label(t, a, b, 0);
      if (t.at(a, 0, b) != (a == b ? 1 : 0)) w = "N_{l0}^n at " + triple_label(t, a, 0, b);
    }
  r.add("unit and duality: N_{lm}^0 = delta_{l,m*}", "(1.2) N_{ij}^0=delta_{ij*}", w.empty(), w);

  w.clear();
  for (size_t a = 0; a < n && w.empty(); ++a)
    for (size_t b = 0; b < n && w.empty(); ++b)
      for (size_t c = 0; c < n && w.empty(); ++c)
        for (size_t d = 0; d < n && w.empty(); ++d) {
          long lhs = 0, rhs = 0;
          for (size_t s = 0; s < n; ++s) {
            lhs += t.at(a, b, s) * t.at(s, c, d);
            rhs += t.at(b, c, s) * t.at(a, s, d);
          }
          if (lhs != rhs) w = "(l m) n vs l (m n) at " + triple_label(t, a, b, c) + " -> " + t.alcove[d].to_string();
        }
  r.add("associativity", "(3.17) fusion ring associative", w.empty(), w);

  w.clear();
  const auto ver = verlinde_table(md);
  for (size_t a = 0; a < n && w.empty(); ++a)
    for (size_t b = 0; b < n && w.empty(); ++b)
      for (size_t c = 0; c < n && w.empty(); ++c)
        if (ver[a][b][c] != CycNum(t.at(a, b, c)))
          w = "Verlinde " + ver[a][b][c].to_string() + " vs folding " + std::to_string(t.at(a, b, c)) + " at " +
              triple_label(t, a, b, c);
  r.add("folding = Verlinde", "Thm 6.5 f_V diagonalizes fusion", w.empty(), w);

  w.clear();
  for (size_t a = 0; a < n && w.empty(); ++a)
    for (size_t b = 0; b < n && w.empty(); ++b) {
      CycNum acc;
      for (size_t c = 0; c < n; ++c)
        if (t.at(a, b, c) != 0) acc += CycNum(t.at(a, b, c)) * md.dims[c];
      if (acc != md.dims[a] * md.dims[b]) w = "dim mismatch at (" + t.alcove[a].to_string() + ", " + t.alcove[b].to_string() + ")";
    }
  r.add("dim homomorphism", "Lemma 1.1 dim V(x)W = dim V dim W", w.empty(), w);

  w.clear();
  for (size_t a = 0; a < n && w.empty(); ++a)
    for (size_t b = 0; b < n && w.empty(); ++b) {
      auto classical = classical_tensor(md.rs, t.alcove[a], t.alcove[b]);
      bool inside = true;
      for (const auto& [nu, m] : classical)
        inside = inside && pairing(md.rs, nu + md.rs.rho, md.rs.theta) < md.kappa;
      if (!inside) continue;
      for (size_t c = 0; c < n && w.empty(); ++c) {
        auto it = classical.find(t.alcove[c]);
        long expected = it == classical.end() ? 0 : it->second;
        if (expected != t.at(a, b, c)) w = "classical limit differs at " + triple_label(t, a, b, c);
      }
    }
  r.add("classical limit", "(3.17) fusion = tensor when summands lie in C", w.empty(), w);
  return r;
}

VerificationReport verify_grothendieck(const ModularData& md, const FusionTable& t) {
  VerificationReport r;
  r.suite = "grothendieck";
  const auto& rs = md.rs;
  const size_t n = md.alcove.size();
  // f[l][p] = χ_λ(ε^{-2(p+ρ)})
  CycMatrix f(n, std::vector<CycNum>(n));
  for (size_t l = 0; l < n; ++l)
    for (size_t p = 0; p < n; ++p) f[l][p] = char_value(rs, md.alcove[l], -2 * (md.alcove[p] + rs.rho), md.kappa);

  std::string w;
  for (size_t a = 0; a < n && w.empty(); ++a)
    for (size_t b = a; b < n && w.empty(); ++b)
      for (size_t p = 0; p < n && w.empty(); ++p) {
        CycNum rhs;
        for (size_t c = 0; c < n; ++c)
          if (t.at(a, b, c) != 0) rhs += CycNum(t.at(a, b, c)) * f[c][p];
        if (f[a][p] * f[b][p] != rhs)
          w = "f_l f_m != sum N f_n at (" + md.alcove[a].to_string() + ", " + md.alcove[b].to_string() + ") point " +
              md.alcove[p].to_string();
      }
  r.add("pointwise ring homomorphism", "Thm 6.5 V -> f_V is a ring isomorphism", w.empty(), w);

  CycNum det = determinant(f);
  r.add("evaluation matrix non-singular", "Thm 6.5 det chi_l(eps^{-2(m+rho)}) != 0", !det.is_zero(), "determinant vanishes");

  w.clear();
  for (size_t l = 0; l < n && w.empty(); ++l)
    for (size_t p = 0; p < n && w.empty(); ++p)
      if (f[l][p] * md.s[0][p] != md.s[l][p]) w = "chi_l(eps^{-2(m+rho)}) s_{0m} != s_{lm} at " + md.alcove[l].to_string();
  r.add("f_V matches s-matrix ratios", "(6.2) s_{lm}=chi_l(eps^{-2(m+rho)}) s_{0m}", w.empty(), w);
  return r;
}

}  // namespace qmod
