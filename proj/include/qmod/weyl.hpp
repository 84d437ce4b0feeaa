#pragma once

#include <vector>

#include "qmod/lie.hpp"

namespace qmod {

/// Element of the finite Weyl group as a matrix on ω-coordinates.
struct WeylElement {
  std::vector<std::vector<int>> matrix;
  int length = 0;
  int sign() const { return length % 2 == 0 ? 1 : -1; }
  Weight apply(const Weight& w) const;
};

inline constexpr long kDefaultWeylCap = 1'000'000;

/// Classical order of W for the type.
long weyl_group_order(const RootSystemData& rs);

/// All elements exactly once, identity first, then by length.
std::vector<WeylElement> enumerate_weyl(const RootSystemData& rs, long cap = kDefaultWeylCap);

/// Cached enumeration keyed by the type name.
const std::vector<WeylElement>& weyl_group(const RootSystemData& rs);
const WeylElement& longest_element(const RootSystemData& rs);

Weight simple_reflection(const RootSystemData& rs, int i, const Weight& w);
/// λ* = -w₀(λ).
Weight star(const RootSystemData& rs, const Weight& lambda);

/// Dominant representative w(λ) of the W-orbit and the length parity of w.
struct DominantFold {
  Weight dominant;
  int sign = 1;
};
DominantFold make_dominant(const RootSystemData& rs, const Weight& w);

/// Open alcove {λ ∈ P⁺ : <λ+ρ, θ^∨> < ϰ}, in lexicographic order.
std::vector<Weight> enumerate_alcove(const RootSystemData& rs, int kappa);
/// {λ ∈ P⁺ : <λ, θ^∨> <= K} for type A; also asserts the equivalent root-wise bound for level k.
std::vector<Weight> enumerate_CK(const RootSystemData& rs, int K, int k = 1);

struct AffineFoldResult {
  Weight representative;
  int sign = 1;  // 0 when the orbit meets a wall
  int reflections = 0;
};

/// Folds λ into the closed alcove under the level-ϰ shifted action of W ⋉ ϰQ^∨.
AffineFoldResult fold_to_alcove(const RootSystemData& rs, const Weight& lambda, int kappa);

/// Dominant weights with <λ, θ^∨> <= max_level, in lexicographic order.
std::vector<Weight> dominant_weights_with_level(const RootSystemData& rs, int max_level);

}  // namespace qmod
