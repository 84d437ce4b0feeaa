#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmod/complexf.hpp"
#include "qmod/cyclotomic.hpp"

namespace qmod {

using CycMatrix = std::vector<std::vector<CycNum>>;

CycMatrix identity_matrix(size_t n);
CycMatrix multiply(const CycMatrix& a, const CycMatrix& b);
CycMatrix scale(const CycNum& c, CycMatrix m);
CycMatrix transpose(const CycMatrix& m);
CycMatrix conj_transpose(const CycMatrix& m);
CycMatrix diagonal_matrix(const std::vector<CycNum>& d);
/// Exact determinant by Gaussian elimination over the field.
CycNum determinant(CycMatrix m);
ComplexMatrix to_complex(const CycMatrix& m);

/// First (row, col) where a and b differ, if any.
std::optional<std::pair<size_t, size_t>> first_mismatch(const CycMatrix& a, const CycMatrix& b);

}  // namespace qmod
