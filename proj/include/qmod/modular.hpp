#pragma once

#include <vector>

#include "qmod/complexf.hpp"
#include "qmod/cycmatrix.hpp"
#include "qmod/lie.hpp"
#include "qmod/report.hpp"

namespace qmod {

/// Modular data of the category at level ϰ, indexed by the alcove in lexicographic order.
struct ModularData {
  RootSystemData rs;
  int kappa = 0;
  std::vector<Weight> alcove;
  CycMatrix s, t, c;
  std::vector<CycNum> dims;   // dim_ε V_λ
  std::vector<CycNum> theta;  // twists, the diagonal of t
  CycNum p_plus, p_minus, D2, zeta;
  Rational central_charge;

  long m_kappa() const { return static_cast<long>(rs.lacing) * kappa; }
  size_t index_of(const Weight& lambda) const;
  size_t dual_index(size_t i) const;
};

/// Float counterpart computed directly from exponentials, independent of the exact kernel.
struct ModularDataFloat {
  ComplexMatrix s, t;
  ComplexF p_plus, p_minus, D2, zeta;
  /// s̃ = s/D and t̃ = ζ^{-1} t with D the positive square root of D².
  ComplexMatrix s_tilde, t_tilde;
};

ModularData build_modular_data(const RootSystemData& rs, int kappa);
ModularDataFloat build_modular_data_float(const RootSystemData& rs, int kappa);

/// Σ_w (-1)^{l(w)} ε^{-2(w(λ+ρ), μ+ρ)'} / δ(ε^{-2ρ}) for arbitrary λ, μ ∈ P.
CycNum s_entry_extended(const RootSystemData& rs, int kappa, const Weight& lambda, const Weight& mu);

/// |P/ϰQ^∨| (-1)^{|R+|} δ(ε^{-2ρ})^{-2}.
CycNum d2_closed_form(const RootSystemData& rs, int kappa);

VerificationReport verify_modular_relations(const ModularData& md, double tol = kDefaultTolerance);

}  // namespace qmod
