#include "arcgap/numerics/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "arcgap/errors.hpp"

namespace arcgap {

namespace {

// P_m(x) and P_m'(x) by the three-term recurrence.
template <class T>
void legendre(int m, const T& x, T& p, T& dp) {
    T p0(1.0);
    T p1 = x;
    for (int k = 2; k <= m; ++k) {
        T p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = p2;
    }
    p = m == 0 ? T(1.0) : p1;
    dp = static_cast<double>(m) * (x * p1 - p0) / (x * x - 1.0);
}

std::vector<double> positive_roots(int m) {
    // roots for i = 1..floor(m/2), largest first
    std::vector<double> r;
    r.reserve(m / 2);
    for (int i = 1; i <= m / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i - 0.25) / (m + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p, dp;
            legendre(m, x, p, dp);
            double dx = p / dp;
            x -= dx;
            if (std::fabs(dx) <= 1e-15) break;
        }
        r.push_back(x);
    }
    return r;
}

}  // namespace

template <class T>
BasicQuadratureRule<T> gauss_legendre(int order) {
    if (order < 1 || order > kMaxQuadratureOrder)
        throw InvalidArgument("gauss_legendre: order " + std::to_string(order) + " outside [1, 10000]");
    const int m = order;
    std::vector<double> pos = positive_roots(m);
    BasicQuadratureRule<T> rule;
    rule.order = m;
    rule.nodes.assign(m, T(0.0));
    rule.weights.assign(m, T(0.0));
    auto weight_at = [m](const T& x) {
        T p, dp;
        legendre(m, x, p, dp);
        return T(2.0) / ((T(1.0) - x * x) * dp * dp);
    };
    for (std::size_t i = 0; i < pos.size(); ++i) {
        T x(pos[i]);
        if constexpr (!std::is_same_v<T, double>) {
            for (int it = 0; it < 2; ++it) {
                T p, dp;
                legendre(m, x, p, dp);
                x -= p / dp;
            }
        }
        T w = weight_at(x);
        rule.nodes[m - 1 - i] = x;
        rule.weights[m - 1 - i] = w;
        rule.nodes[i] = -x;
        rule.weights[i] = w;
    }
    if (m % 2 == 1) {
        rule.nodes[m / 2] = T(0.0);
        rule.weights[m / 2] = weight_at(T(0.0));
    }
    return rule;
}

template <class T>
BasicQuadratureRule<T> gauss_legendre(int order, T a, T b) {
    BasicQuadratureRule<T> rule = gauss_legendre<T>(order);
    T half = (b - a) * 0.5;
    T mid = (b + a) * 0.5;
    for (int i = 0; i < rule.order; ++i) {
        rule.nodes[i] = mid + half * rule.nodes[i];
        rule.weights[i] = rule.weights[i] * half;
    }
    return rule;
}

template BasicQuadratureRule<double> gauss_legendre<double>(int);
template BasicQuadratureRule<DoubleDouble> gauss_legendre<DoubleDouble>(int);
template BasicQuadratureRule<double> gauss_legendre<double>(int, double, double);
template BasicQuadratureRule<DoubleDouble> gauss_legendre<DoubleDouble>(int, DoubleDouble, DoubleDouble);

}  // namespace arcgap
