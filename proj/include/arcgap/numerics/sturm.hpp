#pragma once

#include <cstddef>
#include <span>

namespace arcgap {

/// Number of eigenvalues strictly below t of the symmetric tridiagonal
/// matrix with diagonal d (size N) and off-diagonal e (size N−1).
/// Zero pivots are replaced by 2^-52 times the row's absolute sum.
std::size_t sturm_count_below(std::span<const double> d, std::span<const double> e, double t);

}  // namespace arcgap
