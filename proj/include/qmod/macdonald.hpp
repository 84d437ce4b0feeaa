#pragma once

#include <map>
#include <memory>
#include <vector>

#include "qmod/complexf.hpp"
#include "qmod/cycmatrix.hpp"
#include "qmod/report.hpp"
#include "qmod/wpoly.hpp"

namespace qmod {

using QWPoly = WPoly<QRatFn>;
using CycWPoly = WPoly<CycNum>;

/// μ ≼ λ: λ - μ is a non-negative integer combination of simple roots.
bool dominance_leq(const RootSystemData& rs, const Weight& mu, const Weight& lambda);

/// Δ_k = δ_k conj(δ_k) = Π_{i<k} Π_{α>0} (e^α - (q^{2i} + q^{-2i}) + e^{-α}).
QWPoly delta_k_product(const RootSystemData& rs, int k);

/// Π_{α>0} Π_{i=1}^{k-1} [(α, λ+kρ)+i] / [(α, λ+kρ)-i].
QRatFn norm_formula(const RootSystemData& rs, const Weight& lambda, int k);

/// Generic-q Macdonald polynomials P_λ^{q,q^k} of sl_n, built by Gram-Schmidt and cached.
class MacdonaldContext {
 public:
  MacdonaldContext(int n, int k, int K = 0);

  const RootSystemData& rs() const { return rs_; }
  int n() const { return n_; }
  int k() const { return k_; }
  int K() const { return K_; }
  int kappa() const { return K_ + k_ * n_; }
  /// Sign prefactor of the inner product, fixed so that (1,1)_k matches the norm formula.
  int sigma() const { return sigma_; }
  const QWPoly& delta() const { return delta_; }
  const std::vector<Weight>& alcove() const { return alcove_; }

  /// (f, g)_k = σ/|W| [f conj(g) Δ_k]_0.
  QRatFn inner_product(const QWPoly& f, const QWPoly& g) const;
  const QWPoly& polynomial(const Weight& lambda);
  /// (P_λ, P_λ)_k as computed from the inner product.
  const QRatFn& norm(const Weight& lambda);

 private:
  RootSystemData rs_;
  int n_, k_, K_;
  int sigma_ = 1;
  QWPoly delta_;
  std::vector<Weight> alcove_;
  std::map<Weight, QWPoly> polys_;
  std::map<Weight, QRatFn> norms_;
};

/// Coefficientwise substitution q = ε = exp(πi/ϰ). Throws PoleError on a vanishing denominator.
CycWPoly specialize(const QWPoly& p, int kappa);

/// f(ε^{point}) = Σ c_μ ε^{(μ, point)}.
CycNum evaluate_at(const RootSystemData& rs, const CycWPoly& f, const Weight& point, int kappa);

struct SUData {
  int n = 2, k = 1, K = 0, kappa = 2;
  std::vector<Weight> alcove;
  CycMatrix S, T;
  std::vector<CycNum> d;
  std::vector<CycNum> norms;  // (P_λ, P_λ)_k at q = ε
  /// (-1)^{(k-1)n(n-1)/2} ε^{n(n-1)k(k-1)/2}: the scalar by which C^{-1} acts on the intertwiners.
  CycNum kappa_c;
  CycNum theta_u;
};

SUData build_su_data(MacdonaldContext& ctx);

/// Float S_U computed from the exact polynomials; used for cross-checks.
ComplexMatrix su_matrix_float(const SUData& su);

/// Triangularity, orthogonality, norm formula, conjugation symmetry and the k = 1 reduction,
/// for all dominant λ with <λ, θ^∨> <= max_level.
VerificationReport verify_macdonald_generic(MacdonaldContext& ctx, int max_level);

/// The modular-group identities for S_U and T_U at q = ε.
VerificationReport verify_section5(MacdonaldContext& ctx, double tol = kDefaultTolerance);

}  // namespace qmod
