#include "qmod/weyl.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>

namespace qmod {
namespace {

using IMatrix = std::vector<std::vector<int>>;

IMatrix identity(int n) {
  IMatrix m(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  return m;
}

// s_i(λ) = λ - λ_i α_i, as a matrix on ω-coordinates.
IMatrix reflection_matrix(const RootSystemData& rs, int i) {
  IMatrix m = identity(rs.rank);
  const auto& alpha = rs.simple_roots[static_cast<size_t>(i)].coords;
  for (int k = 0; k < rs.rank; ++k) m[static_cast<size_t>(k)][static_cast<size_t>(i)] -= alpha[static_cast<size_t>(k)];
  return m;
}

IMatrix multiply(const IMatrix& a, const IMatrix& b) {
  const size_t n = a.size();
  IMatrix r(n, std::vector<int>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

long factorial(int n) {
  long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

void enumerate_bounded(int rank, const std::vector<int>& weights, int budget, std::vector<int>& cur, size_t pos,
                       std::vector<Weight>& out) {
  if (pos == static_cast<size_t>(rank)) {
    out.emplace_back(cur);
    return;
  }
  for (int v = 0; v * weights[pos] <= budget; ++v) {
    cur[pos] = v;
    enumerate_bounded(rank, weights, budget - v * weights[pos], cur, pos + 1, out);
  }
  cur[pos] = 0;
}

}  // namespace

Weight WeylElement::apply(const Weight& w) const {
  std::vector<int> out(w.coords.size(), 0);
  for (size_t i = 0; i < matrix.size(); ++i)
    for (size_t j = 0; j < matrix.size(); ++j) out[i] += matrix[i][j] * w.coords[j];
  return Weight(std::move(out), w.denom);
}

long weyl_group_order(const RootSystemData& rs) {
  const int n = rs.rank;
  switch (rs.series) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return (1L << n) * factorial(n);
    case 'D': return (1L << (n - 1)) * factorial(n);
    case 'E': return n == 6 ? 51840L : n == 7 ? 2903040L : 696729600L;
    case 'F': return 1152;
    case 'G': return 12;
    default: throw PreconditionError("unknown series");
  }
}

std::vector<WeylElement> enumerate_weyl(const RootSystemData& rs, long cap) {
  const long order = weyl_group_order(rs);
  if (order > cap) {
    throw PreconditionError("Weyl group of " + rs.name() + " has " + std::to_string(order) +
                            " elements, above the enumeration cap " + std::to_string(cap));
  }
  std::vector<IMatrix> gens;
  for (int i = 0; i < rs.rank; ++i) gens.push_back(reflection_matrix(rs, i));
  std::vector<WeylElement> out;
  std::set<IMatrix> seen;
  std::vector<IMatrix> frontier{identity(rs.rank)};
  seen.insert(frontier.front());
  int length = 0;
  while (!frontier.empty()) {
    for (const auto& m : frontier) out.push_back(WeylElement{m, length});
    std::vector<IMatrix> next;
    for (const auto& m : frontier) {
      for (const auto& g : gens) {
        IMatrix p = multiply(g, m);
        if (seen.insert(p).second) next.push_back(std::move(p));
      }
    }
    frontier = std::move(next);
    ++length;
  }
  if (static_cast<long>(out.size()) != order) {
    throw InternalError("Weyl enumeration produced " + std::to_string(out.size()) + " elements, expected " +
                        std::to_string(order));
  }
  return out;
}

const std::vector<WeylElement>& weyl_group(const RootSystemData& rs) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<std::vector<WeylElement>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[rs.name()];
  if (!slot) slot = std::make_unique<std::vector<WeylElement>>(enumerate_weyl(rs));
  return *slot;
}

const WeylElement& longest_element(const RootSystemData& rs) { return weyl_group(rs).back(); }

Weight simple_reflection(const RootSystemData& rs, int i, const Weight& w) {
  Weight r = w;
  const int c = w.coords[static_cast<size_t>(i)];
  const auto& alpha = rs.simple_roots[static_cast<size_t>(i)].coords;
  for (int k = 0; k < rs.rank; ++k) r.coords[static_cast<size_t>(k)] -= c * alpha[static_cast<size_t>(k)];
  return r;
}

Weight star(const RootSystemData& rs, const Weight& lambda) { return -longest_element(rs).apply(lambda); }

DominantFold make_dominant(const RootSystemData& rs, const Weight& w) {
  DominantFold f{w, 1};
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rs.rank; ++i) {
      if (f.dominant.coords[static_cast<size_t>(i)] < 0) {
        f.dominant = simple_reflection(rs, i, f.dominant);
        f.sign = -f.sign;
        moved = true;
      }
    }
  }
  return f;
}

std::vector<Weight> enumerate_alcove(const RootSystemData& rs, int kappa) {
  if (kappa < rs.dual_coxeter) {
    throw PreconditionError("level " + std::to_string(kappa) + " is below the dual Coxeter number " +
                            std::to_string(rs.dual_coxeter) + " of " + rs.name());
  }
  // <λ+ρ, θ^∨> = Σ comark_i λ_i + h^∨ - 1 < ϰ
  std::vector<Weight> out;
  std::vector<int> cur(static_cast<size_t>(rs.rank), 0);
  enumerate_bounded(rs.rank, rs.comarks, kappa - rs.dual_coxeter, cur, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> enumerate_CK(const RootSystemData& rs, int K, int k) {
  if (rs.series != 'A') throw PreconditionError("C_K is defined for type A only");
  if (K < 0) throw PreconditionError("K must be non-negative");
  if (k < 1) throw PreconditionError("k must be positive");
  std::vector<Weight> out;
  std::vector<int> cur(static_cast<size_t>(rs.rank), 0);
  enumerate_bounded(rs.rank, rs.comarks, K, cur, 0, out);
  std::sort(out.begin(), out.end());
  const int kappa = K + k * rs.dual_coxeter;
  for (const auto& lambda : out) {
    Weight shifted = lambda + k * rs.rho;
    for (const auto& alpha : rs.positive_roots) {
      if (pairing(rs, shifted, alpha) >= kappa - (k - 1)) {
        throw InternalError("C_K element " + lambda.to_string() + " violates the root-wise level bound");
      }
    }
  }
  return out;
}

AffineFoldResult fold_to_alcove(const RootSystemData& rs, const Weight& lambda, int kappa) {
  AffineFoldResult res;
  Weight x = lambda + rs.rho;
  int parity = 0;
  while (true) {
    bool moved = false;
    for (int i = 0; i < rs.rank; ++i) {
      if (x.coords[static_cast<size_t>(i)] < 0) {
        x = simple_reflection(rs, i, x);
        ++parity;
        moved = true;
      }
    }
    if (moved) continue;
    Rational level = pairing(rs, x, rs.theta);
    if (level > kappa) {
      // x ↦ x - (<x, θ^∨> - ϰ) θ, with θ^∨ = θ under the normalized form
      Rational shift = level - kappa;
      if (!is_integer(shift)) throw InternalError("non-integral affine reflection");
      x = x - static_cast<int>(shift.get_num().get_si()) * rs.theta;
      ++parity;
      continue;
    }
    break;
  }
  res.reflections = parity;
  res.representative = x - rs.rho;
  bool wall = pairing(rs, x, rs.theta) == kappa;
  for (int i = 0; i < rs.rank && !wall; ++i) wall = x.coords[static_cast<size_t>(i)] == 0;
  res.sign = wall ? 0 : (parity % 2 == 0 ? 1 : -1);
  return res;
}

std::vector<Weight> dominant_weights_with_level(const RootSystemData& rs, int max_level) {
  std::vector<Weight> out;
  if (max_level < 0) return out;
  std::vector<int> cur(static_cast<size_t>(rs.rank), 0);
  enumerate_bounded(rs.rank, rs.comarks, max_level, cur, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qmod
