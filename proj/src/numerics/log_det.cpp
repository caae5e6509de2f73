#include "arcgap/numerics/log_det.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "arcgap/errors.hpp"

namespace arcgap {

SymLogDet sym_log_det_one_minus_detailed(const Matrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw InvalidArgument("sym_log_det_one_minus: matrix not square");
    Eigen::MatrixXd a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (std::fabs(m(i, j) - m(j, i)) > 1e-12)
                throw InvalidArgument("sym_log_det_one_minus: matrix not symmetric");
            a(i, j) = m(i, j);
        }
    }
    SymLogDet out;
    if (n == 0) return out;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& lam = solver.eigenvalues();
    out.eigenvalues.assign(lam.data(), lam.data() + n);
    // largest eigenvalues last; sum small terms first
    for (std::size_t i = 0; i < n; ++i) {
        double one_minus = 1.0 - lam[i];
        if (!(one_minus > 0.0)) throw DomainError("sym_log_det_one_minus: I - M not positive definite", i);
        out.log_det += std::log1p(-lam[i]);
    }
    return out;
}

double sym_log_det_one_minus(const Matrix& m) { return sym_log_det_one_minus_detailed(m).log_det; }

template <class T>
T cholesky_log_det_t(const DenseMatrix<T>& t) {
    using std::log;
    using std::sqrt;
    const std::size_t n = t.rows();
    if (t.cols() != n) throw InvalidArgument("cholesky_log_det: matrix not square");
    DenseMatrix<T> l(n, n);
    T acc(0.0);
    for (std::size_t j = 0; j < n; ++j) {
        T d = t(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
        if (!(to_double(d) > 0.0)) throw ConditioningError("cholesky_log_det: nonpositive pivot", j);
        T ljj = sqrt(d);
        l(j, j) = ljj;
        acc += log(ljj);
        for (std::size_t i = j + 1; i < n; ++i) {
            T s = t(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            l(i, j) = s / ljj;
        }
    }
    return acc * 2.0;
}

template double cholesky_log_det_t<double>(const DenseMatrix<double>&);
template DoubleDouble cholesky_log_det_t<DoubleDouble>(const DenseMatrix<DoubleDouble>&);

double cholesky_log_det(const Matrix& t, Precision precision) {
    if (precision == Precision::standard) return cholesky_log_det_t(t);
    DenseMatrix<DoubleDouble> e(t.rows(), t.cols());
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) e(i, j) = t(i, j);
    return cholesky_log_det_t(e).to_double();
}

}  // namespace arcgap
