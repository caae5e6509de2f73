#pragma once

#include <vector>

#include "arcgap/numerics/double_double.hpp"
#include "arcgap/numerics/matrix.hpp"
#include "arcgap/opuc/arc_weight.hpp"
#include "arcgap/precision.hpp"

namespace arcgap {

/// Trigonometric moment c_k of the constant weight on the arc:
/// c_0 = 1 − α/π, c_k = −sin(αk)/(πk), c_{−k} = c_k.
double arc_moment(int k, double alpha);
DoubleDouble arc_moment(int k, const DoubleDouble& alpha);

struct MomentValue {
    double value = 0.0;
    double doubling_delta = 0.0;  // |Q_{2m} − Q_m|
    bool converged = true;        // doubling_delta ≤ 1e−12
};

/// (1/2π)∫_α^{2π−α} cos(kθ) f(θ) dθ by Gauss–Legendre with `nodes` and
/// 2·nodes points. Throws InvalidArgument if nodes < 16.
MomentValue weight_moment(const ArcWeight& weight, int k, int nodes);

/// c_0..c_n for the weight, closed form for f ≡ 1.
template <class T>
std::vector<T> moment_sequence(const ArcWeight& weight, int n);

extern template std::vector<double> moment_sequence<double>(const ArcWeight&, int);
extern template std::vector<DoubleDouble> moment_sequence<DoubleDouble>(const ArcWeight&, int);

/// n×n Toeplitz matrix with entries c_{|j−k|}.
template <class T>
DenseMatrix<T> toeplitz_matrix(const std::vector<T>& moments, int n);

}  // namespace arcgap

#include "arcgap/opuc/moments_impl.hpp"
