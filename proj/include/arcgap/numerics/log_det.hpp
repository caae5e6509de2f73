#pragma once

#include <vector>

#include "arcgap/numerics/double_double.hpp"
#include "arcgap/numerics/matrix.hpp"
#include "arcgap/precision.hpp"

namespace arcgap {

struct SymLogDet {
    double log_det = 0.0;
    std::vector<double> eigenvalues;  // of M, ascending
};

/// Σ ln(1 − λ_i(M)) from a symmetric eigendecomposition of M.
/// Throws InvalidArgument if M is not symmetric to 1e−12 and DomainError
/// (eigenvalue index) if some λ_i ≥ 1.
double sym_log_det_one_minus(const Matrix& m);
SymLogDet sym_log_det_one_minus_detailed(const Matrix& m);

/// ln det T via Cholesky in the scalar type T. ConditioningError carries
/// the index of the first nonpositive pivot.
template <class T>
T cholesky_log_det_t(const DenseMatrix<T>& t);

extern template double cholesky_log_det_t<double>(const DenseMatrix<double>&);
extern template DoubleDouble cholesky_log_det_t<DoubleDouble>(const DenseMatrix<DoubleDouble>&);

double cholesky_log_det(const Matrix& t, Precision precision = Precision::standard);

}  // namespace arcgap
