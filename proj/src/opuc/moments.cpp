#include "arcgap/opuc/moments.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "arcgap/errors.hpp"
#include "arcgap/numerics/quadrature.hpp"

namespace arcgap {

double arc_moment(int k, double alpha) {
    if (k < 0) k = -k;
    constexpr double pi = std::numbers::pi;
    if (k == 0) return 1.0 - alpha / pi;
    return -std::sin(alpha * k) / (pi * k);
}

DoubleDouble arc_moment(int k, const DoubleDouble& alpha) {
    if (k < 0) k = -k;
    if (k == 0) return 1.0 - alpha / dd_const::pi;
    return -sin(alpha * static_cast<double>(k)) / (dd_const::pi * static_cast<double>(k));
}

MomentValue weight_moment(const ArcWeight& weight, int k, int nodes) {
    if (nodes < 16) throw InvalidArgument("weight_moment: need at least 16 nodes");
    const double a = weight.alpha();
    const double b = 2.0 * std::numbers::pi - a;
    auto integrate = [&](int m) {
        auto rule = gauss_legendre(m, a, b);
        double s = 0.0;
        for (int i = 0; i < m; ++i) s += rule.weights[i] * std::cos(k * rule.nodes[i]) * weight(rule.nodes[i]);
        return s / (2.0 * std::numbers::pi);
    };
    double q1 = integrate(nodes);
    double q2 = integrate(2 * nodes);
    MomentValue out;
    out.value = q2;
    out.doubling_delta = std::fabs(q2 - q1);
    out.converged = out.doubling_delta <= 1e-12;
    return out;
}

namespace {

template <class T>
void sincos_t(const T& x, T& s, T& c) {
    if constexpr (std::is_same_v<T, double>) {
        s = std::sin(x);
        c = std::cos(x);
    } else {
        sincos(x, s, c);
    }
}

}  // namespace

template <class T>
std::vector<T> moment_sequence(const ArcWeight& weight, int n) {
    if (n < 0) throw InvalidArgument("moment_sequence: negative length");
    std::vector<T> c(n + 1);
    const T alpha(weight.alpha());
    if (weight.is_constant_one()) {
        for (int k = 0; k <= n; ++k) c[k] = arc_moment(k, alpha);
        return c;
    }
    // c_k = (1/π)∫_α^π cos(kθ) f(θ) dθ; e^{ikθ} by rotation, re-anchored every 64 steps
    const int m = 2 * n + 80;
    const T pi = ScalarTraits<T>::pi();
    auto rule = gauss_legendre<T>(m, alpha, pi);
    for (auto& v : c) v = T(0.0);
    for (int i = 0; i < m; ++i) {
        const T& th = rule.nodes[i];
        T f;
        if constexpr (std::is_same_v<T, double>)
            f = weight(th);
        else
            f = weight.value(th);
        T wf = rule.weights[i] * f / pi;
        T s1, c1;
        sincos_t(th, s1, c1);
        T re(1.0), im(0.0);
        for (int k = 0; k <= n; ++k) {
            if (k > 0 && k % 64 == 0) {
                sincos_t(th * static_cast<double>(k), im, re);
            }
            c[k] += wf * re;
            T nre = re * c1 - im * s1;
            im = re * s1 + im * c1;
            re = nre;
        }
    }
    return c;
}

template std::vector<double> moment_sequence<double>(const ArcWeight&, int);
template std::vector<DoubleDouble> moment_sequence<DoubleDouble>(const ArcWeight&, int);

}  // namespace arcgap
