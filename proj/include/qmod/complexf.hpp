#pragma once

#include <complex>
#include <vector>

namespace qmod {

using ComplexF = std::complex<double>;
using ComplexMatrix = std::vector<std::vector<ComplexF>>;

inline constexpr double kDefaultTolerance = 1e-9;

/// Tolerance from QMOD_TOLERANCE if set and parseable, else kDefaultTolerance.
double default_tolerance();

inline bool approx_equal(ComplexF a, ComplexF b, double tol) { return std::abs(a - b) < tol; }
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

}  // namespace qmod
