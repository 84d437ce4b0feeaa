#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qmod/rational.hpp"

namespace qmod {

/// Integral weight in the fundamental-weight basis. Half-weights such as α/2
/// carry denom = 2; every other weight has denom = 1.
struct Weight {
  std::vector<int> coords;
  int denom = 1;

  Weight() = default;
  explicit Weight(std::vector<int> c, int d = 1);
  static Weight zero(int rank) { return Weight(std::vector<int>(static_cast<size_t>(rank), 0)); }

  int rank() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;
  /// Coordinate i as a rational (coords[i] / denom).
  Rational at(int i) const { return make_rational(coords[static_cast<size_t>(i)], denom); }

  Weight operator-() const;
  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o) { return *this += -o; }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int s, Weight w);
  Weight half() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  /// Lexicographic on coordinates (denominator as a tie-break).
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

  std::string to_string() const;
};

enum class FormVariant { normalized, primed };

/// Constant tables of one simple Lie algebra. Immutable after construction.
struct RootSystemData {
  char series = 'A';
  int rank = 1;
  /// cartan[i][j] = <α_i, α_j^∨>; row i is α_i in ω-coordinates.
  std::vector<std::vector<int>> cartan;
  /// (α_i, α_j) with long roots of squared length 2.
  std::vector<std::vector<Rational>> root_gram;
  /// (ω_i, ω_j) under the same normalization.
  std::vector<std::vector<Rational>> weight_gram;
  /// Inverse of the Cartan matrix transpose: maps ω-coordinates to α-coordinates.
  std::vector<std::vector<Rational>> to_root_coords;

  std::vector<Weight> simple_roots;
  /// Positive roots ordered by height, then lexicographically.
  std::vector<Weight> positive_roots;
  Weight rho;
  Weight theta;
  /// <ω_i, θ^∨>: coefficients of θ^∨ in the simple coroots.
  std::vector<int> comarks;
  int dual_coxeter = 0;
  int lacing = 1;
  std::vector<int> d;
  int lattice_det = 1;  // |P/Q|
  int dim_g = 0;

  std::string name() const { return std::string(1, series) + std::to_string(rank); }
  int num_positive_roots() const { return static_cast<int>(positive_roots.size()); }
};

RootSystemData build_root_system(char series, int rank);
/// Parses names like "A2", "g2", "E8".
RootSystemData build_root_system(const std::string& name);
std::pair<char, int> parse_algebra_name(const std::string& name);

Rational form(const RootSystemData& rs, const Weight& a, const Weight& b,
              FormVariant variant = FormVariant::normalized);
/// <λ, α^∨> = 2(λ, α)/(α, α).
Rational pairing(const RootSystemData& rs, const Weight& lambda, const Weight& alpha);
/// Coordinates of a (root-lattice) weight in the simple-root basis.
std::vector<Rational> root_coordinates(const RootSystemData& rs, const Weight& w);
bool is_dominant(const Weight& w);
/// Coroot α^∨ = 2α/(α, α) as a weight.
Weight coroot(const RootSystemData& rs, const Weight& alpha);

struct LatticeSpec {
  enum class Kind { weight, root, coroot };
  Kind kind = Kind::weight;
  long scale = 1;
};
LatticeSpec parse_lattice_spec(const std::string& text);

/// |numerator / denominator| via the Smith normal form of the change of basis.
BigInt lattice_index(const RootSystemData& rs, const LatticeSpec& numerator, const LatticeSpec& denominator);
/// Invariant factors of an integer square matrix.
std::vector<BigInt> smith_diagonal(std::vector<std::vector<BigInt>> m);

}  // namespace qmod
