#pragma once

#include <map>

#include "qmod/cyclotomic.hpp"
#include "qmod/lie.hpp"

namespace qmod {

/// Weight multiplicities of the irreducible module V_λ (full W-orbits).
struct CharacterTable {
  Weight highest;
  std::map<Weight, long> mults;

  long multiplicity(const Weight& mu) const {
    auto it = mults.find(mu);
    return it == mults.end() ? 0 : it->second;
  }
  long dimension() const;
};

/// Freudenthal recursion; memoized per (type, λ).
const CharacterTable& weight_multiplicities(const RootSystemData& rs, const Weight& lambda);
/// Dominant μ ≼ λ, ordered by depth below λ (λ first).
std::vector<Weight> dominant_weights_below(const RootSystemData& rs, const Weight& lambda);
/// Π_{α>0} (λ+ρ, α)/(ρ, α).
BigInt weyl_dimension(const RootSystemData& rs, const Weight& lambda);

/// ε^{(μ, point)'} summed over a finitely supported integer combination of weights.
CycNum evaluate_at_epsilon(const RootSystemData& rs, int kappa, const std::map<Weight, long>& terms,
                           const Weight& point);

/// χ_λ(ε^{point}) for any λ ∈ P.
CycNum char_value(const RootSystemData& rs, const Weight& lambda, const Weight& point, int kappa);
/// dim_ε V_λ = χ_λ(ε^{2ρ}).
CycNum quantum_dim(const RootSystemData& rs, const Weight& lambda, int kappa);
/// δ(ε^{point}) = Π_{α>0} (ε^{(α,point)'/2} - ε^{-(α,point)'/2}).
CycNum weyl_denominator_value(const RootSystemData& rs, const Weight& point, int kappa);
/// True iff (λ+ρ, α) ∈ ϰZ for some α > 0.
bool vanishing_criterion(const RootSystemData& rs, const Weight& lambda, int kappa);

}  // namespace qmod
