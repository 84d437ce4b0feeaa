#pragma once

#include <map>
#include <vector>

#include "qmod/lie.hpp"
#include "qmod/modular.hpp"
#include "qmod/report.hpp"

namespace qmod {

/// Decomposition of V_λ ⊗ V_μ for the classical algebra.
std::map<Weight, long> classical_tensor(const RootSystemData& rs, const Weight& lambda, const Weight& mu);

/// Level-ϰ fusion product of two alcove weights.
std::map<Weight, long> fusion_coefficients(const RootSystemData& rs, const Weight& lambda, const Weight& mu, int kappa);

/// N_{λμ}^ν for all triples of the alcove; n[a][b][c] uses alcove indices.
struct FusionTable {
  int kappa = 0;
  std::vector<Weight> alcove;
  std::vector<std::vector<std::vector<long>>> n;

  long at(size_t a, size_t b, size_t c) const { return n[a][b][c]; }
};

FusionTable build_fusion_table(const RootSystemData& rs, int kappa);

/// Σ_σ s_{λσ} s_{μσ} conj(s_{νσ}) / (D² s_{0σ}).
CycNum verlinde_coefficient(const ModularData& md, size_t lambda, size_t mu, size_t nu);

/// Full Verlinde table; shares the per-σ normalizations.
std::vector<std::vector<std::vector<CycNum>>> verlinde_table(const ModularData& md);

/// Fusion-table invariants, Verlinde agreement, associativity and the dimension homomorphism.
VerificationReport verify_fusion(const ModularData& md, const FusionTable& table);

/// Ring homomorphism V ↦ f_V onto functions on the alcove, and nondegeneracy of the evaluation matrix.
VerificationReport verify_grothendieck(const ModularData& md, const FusionTable& table);

}  // namespace qmod
