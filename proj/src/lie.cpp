#include "qmod/lie.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace qmod {
namespace {

using RMatrix = std::vector<std::vector<Rational>>;

RMatrix invert(RMatrix a) {
  const size_t n = a.size();
  RMatrix inv(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw PreconditionError("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational s = 1 / a[col][col];
    for (size_t j = 0; j < n; ++j) {
      a[col][j] *= s;
      inv[col][j] *= s;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

Rational determinant(RMatrix a) {
  const size_t n = a.size();
  Rational det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  return det;
}

void add_edge(RMatrix& g, int i, int j, const Rational& v) {
  g[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
  g[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
}

// (α_i, α_j) with long roots of squared length 2 (Bourbaki numbering).
RMatrix root_gram_for(char series, int n) {
  RMatrix g(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
  auto diag = [&](int i, const Rational& v) { g[static_cast<size_t>(i)][static_cast<size_t>(i)] = v; };
  switch (series) {
    case 'A':
      for (int i = 0; i < n; ++i) diag(i, 2);
      for (int i = 0; i + 1 < n; ++i) add_edge(g, i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i < n; ++i) diag(i, i + 1 < n ? 2 : 1);
      for (int i = 0; i + 1 < n; ++i) add_edge(g, i, i + 1, -1);
      break;
    case 'C':
      for (int i = 0; i < n; ++i) diag(i, i + 1 < n ? Rational(1) : Rational(2));
      for (int i = 0; i + 2 < n; ++i) add_edge(g, i, i + 1, Rational(-1, 2));
      add_edge(g, n - 2, n - 1, -1);
      break;
    case 'D':
      for (int i = 0; i < n; ++i) diag(i, 2);
      for (int i = 0; i + 2 < n; ++i) add_edge(g, i, i + 1, -1);
      add_edge(g, n - 3, n - 1, -1);
      break;
    case 'E': {
      for (int i = 0; i < n; ++i) diag(i, 2);
      const int edges[][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
      for (const auto& e : edges) {
        if (e[0] <= n && e[1] <= n) add_edge(g, e[0] - 1, e[1] - 1, -1);
      }
      break;
    }
    case 'F':
      diag(0, 2);
      diag(1, 2);
      diag(2, 1);
      diag(3, 1);
      add_edge(g, 0, 1, -1);
      add_edge(g, 1, 2, -1);
      add_edge(g, 2, 3, Rational(-1, 2));
      break;
    case 'G':
      diag(0, Rational(2, 3));
      diag(1, 2);
      add_edge(g, 0, 1, -1);
      break;
    default:
      break;
  }
  return g;
}

void validate_type(char series, int rank) {
  bool ok = false;
  switch (series) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: break;
  }
  if (!ok) {
    throw PreconditionError("invalid simple type " + std::string(1, series) + std::to_string(rank) +
                            "; valid: A_n (n>=1), B_n (n>=2), C_n (n>=2), D_n (n>=4), E6, E7, E8, F4, G2");
  }
}

Weight normalized(Weight w) {
  if (w.denom == 2 && std::all_of(w.coords.begin(), w.coords.end(), [](int c) { return c % 2 == 0; })) {
    for (auto& c : w.coords) c /= 2;
    w.denom = 1;
  }
  return w;
}

}  // namespace

// ---------------------------------------------------------------------------
// Weight

Weight::Weight(std::vector<int> c, int d) : coords(std::move(c)), denom(d) {
  if (d != 1 && d != 2) throw PreconditionError("weight denominator must be 1 or 2");
  *this = normalized(*this);
}

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.rank() != rank()) throw PreconditionError("weight rank mismatch");
  if (denom == o.denom) {
    for (size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  } else {
    for (size_t i = 0; i < coords.size(); ++i) {
      coords[i] = coords[i] * (2 / denom) + o.coords[i] * (2 / o.denom);
    }
    denom = 2;
  }
  *this = normalized(*this);
  return *this;
}

Weight operator*(int s, Weight w) {
  for (auto& c : w.coords) c *= s;
  return normalized(w);
}

Weight Weight::half() const {
  if (denom == 1) return normalized(Weight(coords, 2));
  if (std::all_of(coords.begin(), coords.end(), [](int c) { return c % 2 == 0; })) {
    std::vector<int> c = coords;
    for (auto& x : c) x /= 2;
    return Weight(std::move(c), 2);
  }
  throw PreconditionError("half of a half-weight is outside the supported lattice");
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
  if (auto c = a.coords <=> b.coords; c != 0) return c;
  return a.denom <=> b.denom;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ",";
    os << coords[i];
  }
  os << ")";
  if (denom != 1) os << "/" << denom;
  return os.str();
}

// ---------------------------------------------------------------------------
// Root systems

std::pair<char, int> parse_algebra_name(const std::string& name) {
  if (name.size() < 2 || !std::isalpha(static_cast<unsigned char>(name[0]))) {
    throw PreconditionError("algebra name must look like 'A2', got '" + name + "'");
  }
  char series = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  int rank = 0;
  for (size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) {
      throw PreconditionError("algebra name must look like 'A2', got '" + name + "'");
    }
    rank = rank * 10 + (name[i] - '0');
    if (rank > 1000) throw PreconditionError("rank too large in '" + name + "'");
  }
  return {series, rank};
}

RootSystemData build_root_system(const std::string& name) {
  auto [series, rank] = parse_algebra_name(name);
  return build_root_system(series, rank);
}

RootSystemData build_root_system(char series, int rank) {
  validate_type(series, rank);
  RootSystemData rs;
  rs.series = series;
  rs.rank = rank;
  const auto n = static_cast<size_t>(rank);
  rs.root_gram = root_gram_for(series, rank);

  rs.cartan.assign(n, std::vector<int>(n));
  RMatrix cartan_q(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      Rational v = 2 * rs.root_gram[i][j] / rs.root_gram[j][j];
      if (!is_integer(v)) throw InternalError("non-integral Cartan entry");
      rs.cartan[i][j] = static_cast<int>(v.get_num().get_si());
      cartan_q[i][j] = v;
    }
  }
  // α = C ω, so ω_j = Σ_k C^{-1}[j][k] α_k and (ω_i, ω_j) = C^{-1}[j][i] (α_i, α_i)/2.
  RMatrix cinv = invert(cartan_q);
  rs.weight_gram.assign(n, std::vector<Rational>(n));
  rs.to_root_coords.assign(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      rs.weight_gram[i][j] = cinv[j][i] * rs.root_gram[i][i] / 2;
      rs.to_root_coords[i][j] = cinv[j][i];
    }
  }
  rs.lattice_det = static_cast<int>(determinant(cartan_q).get_num().get_si());

  for (size_t i = 0; i < n; ++i) rs.simple_roots.emplace_back(rs.cartan[i]);

  // Positive roots by height, using root strings in α-coordinates.
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> level;
  for (size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    level.push_back(e);
    known.insert(e);
  }
  std::vector<std::vector<int>> all_alpha;
  while (!level.empty()) {
    std::sort(level.begin(), level.end());
    all_alpha.insert(all_alpha.end(), level.begin(), level.end());
    std::set<std::vector<int>> next;
    for (const auto& beta : level) {
      for (size_t i = 0; i < n; ++i) {
        int pair = 0;  // <β, α_i^∨>
        for (size_t j = 0; j < n; ++j) pair += beta[j] * rs.cartan[j][i];
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        if (p - pair > 0) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    level.assign(next.begin(), next.end());
    known.insert(level.begin(), level.end());
  }
  for (const auto& a : all_alpha) {
    std::vector<int> w(n, 0);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) w[j] += a[i] * rs.cartan[i][j];
    }
    rs.positive_roots.emplace_back(std::move(w));
  }
  rs.theta = rs.positive_roots.back();
  rs.rho = Weight(std::vector<int>(n, 1));

  Rational min_len = rs.root_gram[0][0];
  for (size_t i = 0; i < n; ++i) min_len = std::min(min_len, rs.root_gram[i][i]);
  Rational m = 2 / min_len;
  rs.lacing = static_cast<int>(m.get_num().get_si());
  for (size_t i = 0; i < n; ++i) {
    Rational di = m * rs.root_gram[i][i] / 2;
    rs.d.push_back(static_cast<int>(di.get_num().get_si()));
  }
  for (size_t i = 0; i < n; ++i) {
    Weight wi = Weight::zero(rank);
    wi.coords[i] = 1;
    Rational c = pairing(rs, wi, rs.theta);
    rs.comarks.push_back(static_cast<int>(c.get_num().get_si()));
  }
  rs.dual_coxeter = static_cast<int>(pairing(rs, rs.rho, rs.theta).get_num().get_si()) + 1;
  rs.dim_g = rank + 2 * rs.num_positive_roots();
  return rs;
}

Rational form(const RootSystemData& rs, const Weight& a, const Weight& b, FormVariant variant) {
  if (a.rank() != rs.rank || b.rank() != rs.rank) throw PreconditionError("weight rank does not match the root system");
  Rational acc = 0;
  for (int i = 0; i < rs.rank; ++i) {
    if (a.coords[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < rs.rank; ++j) {
      if (b.coords[static_cast<size_t>(j)] == 0) continue;
      acc += a.coords[static_cast<size_t>(i)] * b.coords[static_cast<size_t>(j)] *
             rs.weight_gram[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
  }
  acc /= a.denom * b.denom;
  if (variant == FormVariant::primed) acc *= rs.lacing;
  return acc;
}

Rational pairing(const RootSystemData& rs, const Weight& lambda, const Weight& alpha) {
  Rational len = form(rs, alpha, alpha);
  if (len == 0) throw PreconditionError("pairing with the zero vector");
  return 2 * form(rs, lambda, alpha) / len;
}

Weight coroot(const RootSystemData& rs, const Weight& alpha) {
  Rational len = form(rs, alpha, alpha);
  if (len == 0) throw PreconditionError("coroot of the zero vector");
  Rational s = 2 / len;
  if (!is_integer(s)) throw InternalError("non-integral coroot multiplier");
  return static_cast<int>(s.get_num().get_si()) * alpha;
}

std::vector<Rational> root_coordinates(const RootSystemData& rs, const Weight& w) {
  std::vector<Rational> out(static_cast<size_t>(rs.rank));
  for (int i = 0; i < rs.rank; ++i) {
    for (int j = 0; j < rs.rank; ++j) {
      out[static_cast<size_t>(i)] += rs.to_root_coords[static_cast<size_t>(i)][static_cast<size_t>(j)] * w.at(j);
    }
  }
  return out;
}

bool is_dominant(const Weight& w) {
  return std::all_of(w.coords.begin(), w.coords.end(), [](int c) { return c >= 0; });
}

// ---------------------------------------------------------------------------
// Lattices

LatticeSpec parse_lattice_spec(const std::string& text) {
  size_t pos = 0;
  long scale = 1;
  if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    scale = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      scale = scale * 10 + (text[pos] - '0');
      ++pos;
    }
  }
  std::string rest = text.substr(pos);
  LatticeSpec spec;
  spec.scale = scale;
  if (rest == "P") {
    spec.kind = LatticeSpec::Kind::weight;
  } else if (rest == "Q") {
    spec.kind = LatticeSpec::Kind::root;
  } else if (rest == "Qv" || rest == "Q^" || rest == "Q∨" || rest == "Qcheck") {
    spec.kind = LatticeSpec::Kind::coroot;
  } else {
    throw PreconditionError("unknown lattice spec '" + text + "' (expected P, Q, Qv with optional integer prefix)");
  }
  return spec;
}

std::vector<BigInt> smith_diagonal(std::vector<std::vector<BigInt>> m) {
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  const size_t n = std::min(rows, cols);
  std::vector<BigInt> diag;
  for (size_t t = 0; t < n; ++t) {
    while (true) {
      // Smallest nonzero |entry| in the trailing block becomes the pivot.
      size_t pr = rows, pc = cols;
      for (size_t i = t; i < rows; ++i) {
        for (size_t j = t; j < cols; ++j) {
          if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) {
        for (size_t k = t; k < n; ++k) diag.emplace_back(0);
        return diag;
      }
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);
      bool clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        BigInt q = m[i][t] / m[t][t];
        for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (size_t j = t + 1; j < cols; ++j) {
        BigInt q = m[t][j] / m[t][t];
        for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility of the remaining block by the pivot.
      bool divides = true;
      for (size_t i = t + 1; i < rows && divides; ++i) {
        for (size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            for (size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    diag.push_back(abs(m[t][t]));
  }
  return diag;
}

BigInt lattice_index(const RootSystemData& rs, const LatticeSpec& numerator, const LatticeSpec& denominator) {
  const auto n = static_cast<size_t>(rs.rank);
  auto basis = [&](const LatticeSpec& spec) {
    if (spec.scale <= 0) throw PreconditionError("lattice scale must be positive (rank-deficient lattice has infinite index)");
    RMatrix b(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i) {
      Weight v;
      switch (spec.kind) {
        case LatticeSpec::Kind::weight:
          v = Weight::zero(rs.rank);
          v.coords[i] = 1;
          break;
        case LatticeSpec::Kind::root: v = rs.simple_roots[i]; break;
        case LatticeSpec::Kind::coroot: v = coroot(rs, rs.simple_roots[i]); break;
      }
      for (size_t j = 0; j < n; ++j) b[i][j] = v.at(static_cast<int>(j)) * spec.scale;
    }
    return b;
  };
  RMatrix num = basis(numerator);
  RMatrix den = basis(denominator);
  RMatrix num_inv = invert(num);
  std::vector<std::vector<BigInt>> change(n, std::vector<BigInt>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      Rational acc = 0;
      for (size_t k = 0; k < n; ++k) acc += den[i][k] * num_inv[k][j];
      if (!is_integer(acc)) throw PreconditionError("denominator lattice is not contained in the numerator lattice");
      change[i][j] = acc.get_num();
    }
  }
  BigInt index = 1;
  for (const auto& d : smith_diagonal(change)) {
    if (d == 0) throw PreconditionError("lattice index is infinite");
    index *= d;
  }
  return index;
}

}  // namespace qmod
