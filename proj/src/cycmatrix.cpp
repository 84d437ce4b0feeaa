#include "qmod/cycmatrix.hpp"

#include <stdexcept>

namespace qmod {

CycMatrix identity_matrix(size_t n) {
  CycMatrix m(n, std::vector<CycNum>(n));
  for (size_t i = 0; i < n; ++i) m[i][i] = CycNum(1);
  return m;
}

CycMatrix multiply(const CycMatrix& a, const CycMatrix& b) {
  const size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  CycMatrix out(n, std::vector<CycNum>(p));
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("matrix shape mismatch");
    for (size_t j = 0; j < k; ++j) {
      if (a[i][j].is_zero()) continue;
      for (size_t l = 0; l < p; ++l) {
        if (!b[j][l].is_zero()) out[i][l] += a[i][j] * b[j][l];
      }
    }
  }
  return out;
}

CycMatrix scale(const CycNum& c, CycMatrix m) {
  for (auto& row : m)
    for (auto& x : row) x *= c;
  return m;
}

CycMatrix transpose(const CycMatrix& m) {
  if (m.empty()) return m;
  CycMatrix out(m[0].size(), std::vector<CycNum>(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
  return out;
}

CycMatrix conj_transpose(const CycMatrix& m) {
  CycMatrix out = transpose(m);
  for (auto& row : out)
    for (auto& x : row) x = x.conj();
  return out;
}

CycMatrix diagonal_matrix(const std::vector<CycNum>& d) {
  CycMatrix m(d.size(), std::vector<CycNum>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
  return m;
}

CycNum determinant(CycMatrix m) {
  const size_t n = m.size();
  CycNum det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return CycNum{};
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const CycNum inv = m[col][col].inverse();
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const CycNum f = m[r][col] * inv;
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

ComplexMatrix to_complex(const CycMatrix& m) {
  ComplexMatrix out(m.size());
  for (size_t i = 0; i < m.size(); ++i)
    for (const auto& x : m[i]) out[i].push_back(x.to_complex());
  return out;
}

std::optional<std::pair<size_t, size_t>> first_mismatch(const CycMatrix& a, const CycMatrix& b) {
  if (a.size() != b.size()) return std::make_pair(a.size(), size_t{0});
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return std::make_pair(i, a[i].size());
    for (size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != b[i][j]) return std::make_pair(i, j);
  }
  return std::nullopt;
}

}  // namespace qmod
