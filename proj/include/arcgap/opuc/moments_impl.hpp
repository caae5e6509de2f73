#pragma once

#include "arcgap/errors.hpp"

namespace arcgap {

template <class T>
DenseMatrix<T> toeplitz_matrix(const std::vector<T>& moments, int n) {
    if (n < 0 || static_cast<std::size_t>(n) > moments.size())
        throw InvalidArgument("toeplitz_matrix: not enough moments");
    DenseMatrix<T> t(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) t(j, k) = moments[j > k ? j - k : k - j];
    return t;
}

}  // namespace arcgap
