#include "arcgap/fredholm/fredholm.hpp"

#include <cmath>
#include <numbers>

#include "arcgap/errors.hpp"
#include "arcgap/numerics/double_double.hpp"
#include "arcgap/numerics/log_det.hpp"
#include "arcgap/numerics/quadrature.hpp"

namespace arcgap {

namespace {

template <class T>
T sinc_kernel(const T& d) {
    if (d.hi == 0.0 && d.lo == 0.0) return T(1.0) / dd_const::pi;
    return sin(d) / (dd_const::pi * d);
}

double sinc_kernel(double d) {
    constexpr double pi = std::numbers::pi;
    return d == 0.0 ? 1.0 / pi : std::sin(d) / (pi * d);
}

double log_det_standard(double s, int m, std::vector<double>* eig) {
    NystromGrid g = build_grid(s, m);
    try {
        SymLogDet r = sym_log_det_one_minus_detailed(g.kernel_matrix);
        if (eig) *eig = std::move(r.eigenvalues);
        return r.log_det;
    } catch (const DomainError& e) {
        throw ConditioningError("log_gap_determinant: I - K not positive definite at s = " + std::to_string(s),
                                e.index());
    }
}

double log_det_extended(double s, int m) {
    auto rule = gauss_legendre<DoubleDouble>(m, DoubleDouble(0.0), DoubleDouble(2.0 * s));
    std::vector<DoubleDouble> sw(m);
    for (int i = 0; i < m; ++i) sw[i] = sqrt(rule.weights[i]);
    DenseMatrix<DoubleDouble> a(m, m);
    for (int i = 0; i < m; ++i) {
        a(i, i) = 1.0 - rule.weights[i] / dd_const::pi;
        for (int j = 0; j < i; ++j) {
            DoubleDouble v = -(sw[i] * sw[j] * sinc_kernel(rule.nodes[i] - rule.nodes[j]));
            a(i, j) = v;
            a(j, i) = v;
        }
    }
    try {
        return cholesky_log_det_t(a).to_double();
    } catch (const ConditioningError& e) {
        throw ConditioningError("log_gap_determinant: I - K not positive definite at s = " + std::to_string(s),
                                e.index());
    }
}

double evaluate(double s, int m, Precision p, std::vector<double>* eig) {
    return p == Precision::standard ? log_det_standard(s, m, eig) : log_det_extended(s, m);
}

}  // namespace

NystromGrid build_grid(double s, int order, GridPlacement placement) {
    if (!(s > 0.0)) throw InvalidArgument("build_grid: s must be positive");
    if (order < 8) throw InvalidArgument("build_grid: order must be at least 8");
    const double lo = placement == GridPlacement::zero_to_two_s ? 0.0 : -s;
    QuadratureRule rule = gauss_legendre(order, lo, lo + 2.0 * s);
    NystromGrid g;
    g.s = s;
    g.order = order;
    g.nodes = rule.nodes;
    g.weights = rule.weights;
    g.kernel_matrix = Matrix(order, order);
    std::vector<double> sw(order);
    for (int i = 0; i < order; ++i) sw[i] = std::sqrt(rule.weights[i]);
    for (int i = 0; i < order; ++i) {
        g.kernel_matrix(i, i) = rule.weights[i] * sinc_kernel(0.0);
        for (int j = 0; j < i; ++j) {
            double v = sw[i] * sw[j] * sinc_kernel(rule.nodes[i] - rule.nodes[j]);
            g.kernel_matrix(i, j) = v;
            g.kernel_matrix(j, i) = v;
        }
    }
    return g;
}

int auto_order(double s) { return std::max(40, static_cast<int>(std::ceil(8.0 * s)) + 20); }

GapDeterminant log_gap_determinant(double s, std::optional<int> order, Precision precision) {
    if (!(s >= 0.0) || !std::isfinite(s)) throw InvalidArgument("log_gap_determinant: s must be nonnegative");
    GapDeterminant out;
    out.s = s;
    out.precision = precision;
    out.auto_order = !order.has_value();
    out.order = order.value_or(auto_order(s));
    if (out.order < 8) throw InvalidArgument("log_gap_determinant: order must be at least 8");
    if (s == 0.0) return out;
    if (precision == Precision::standard && s > kStandardPrecisionCeiling)
        out.warnings.push_back("s above the standard-precision ceiling 14; eigenvalues of K within 1e-14 of 1");
    out.log_delta = evaluate(s, out.order, precision, &out.eigenvalues);
    if (out.auto_order) {
        if (2 * out.order > kMaxQuadratureOrder)
            throw InvalidArgument("log_gap_determinant: s too large for the automatic order");
        double fine = evaluate(s, 2 * out.order, precision, nullptr);
        out.doubling_delta = std::fabs(fine - out.log_delta);
        out.converged = out.doubling_delta <= kOrderConvergenceTol;
        if (!out.converged) out.warnings.push_back("node doubling moved ln Delta by more than 1e-10");
    }
    return out;
}

}  // namespace arcgap
