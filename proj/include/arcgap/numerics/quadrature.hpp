#pragma once

#include <cstddef>
#include <vector>

#include "arcgap/numerics/double_double.hpp"

namespace arcgap {

/// Gauss–Legendre rule on [-1, 1]; nodes ascending.
template <class T>
struct BasicQuadratureRule {
    std::vector<T> nodes;
    std::vector<T> weights;
    int order = 0;
};

using QuadratureRule = BasicQuadratureRule<double>;
using QuadratureRuleDD = BasicQuadratureRule<DoubleDouble>;

inline constexpr int kMaxQuadratureOrder = 10000;

/// Throws InvalidArgument unless 1 <= order <= 10000.
template <class T = double>
BasicQuadratureRule<T> gauss_legendre(int order);

/// Rule mapped affinely onto [a, b].
template <class T = double>
BasicQuadratureRule<T> gauss_legendre(int order, T a, T b);

extern template BasicQuadratureRule<double> gauss_legendre<double>(int);
extern template BasicQuadratureRule<DoubleDouble> gauss_legendre<DoubleDouble>(int);
extern template BasicQuadratureRule<double> gauss_legendre<double>(int, double, double);
extern template BasicQuadratureRule<DoubleDouble> gauss_legendre<DoubleDouble>(int, DoubleDouble, DoubleDouble);

}  // namespace arcgap
