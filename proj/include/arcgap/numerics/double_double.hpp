#pragma once

// Double-double arithmetic: value = hi + lo with |lo| <= ulp(hi)/2.
// Error-free transforms follow Dekker/Knuth; transcendental functions use
// argument reduction plus Taylor series and a Newton step for log.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>

namespace arcgap {

namespace dd_detail {

inline double two_sum(double a, double b, double& err) {
    double s = a + b;
    double bb = s - a;
    err = (a - (s - bb)) + (b - bb);
    return s;
}

inline double quick_two_sum(double a, double b, double& err) {
    double s = a + b;
    err = b - (s - a);
    return s;
}

inline double two_prod(double a, double b, double& err) {
    double p = a * b;
#if defined(FP_FAST_FMA) || defined(__FMA__)
    err = std::fma(a, b, -p);
#else
    constexpr double split = 134217729.0;  // 2^27 + 1
    double t = split * a;
    double ahi = t - (t - a);
    double alo = a - ahi;
    t = split * b;
    double bhi = t - (t - b);
    double blo = b - bhi;
    err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo;
#endif
    return p;
}

}  // namespace dd_detail

struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DoubleDouble() = default;
    constexpr DoubleDouble(double h) : hi(h), lo(0.0) {}  // NOLINT implicit
    constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}

    static DoubleDouble from_sum(double a, double b) {
        double e;
        double s = dd_detail::two_sum(a, b, e);
        return {s, e};
    }

    explicit operator double() const { return hi + lo; }
    double to_double() const { return hi + lo; }

    DoubleDouble operator-() const { return {-hi, -lo}; }

    DoubleDouble& operator+=(const DoubleDouble& b);
    DoubleDouble& operator-=(const DoubleDouble& b) { return *this += -b; }
    DoubleDouble& operator*=(const DoubleDouble& b);
    DoubleDouble& operator/=(const DoubleDouble& b);
};

using dd_real = DoubleDouble;

inline DoubleDouble operator+(const DoubleDouble& a, const DoubleDouble& b) {
    double e1, e2;
    double s = dd_detail::two_sum(a.hi, b.hi, e1);
    double t = dd_detail::two_sum(a.lo, b.lo, e2);
    e1 += t;
    s = dd_detail::quick_two_sum(s, e1, e1);
    e1 += e2;
    s = dd_detail::quick_two_sum(s, e1, e1);
    return {s, e1};
}

inline DoubleDouble operator+(const DoubleDouble& a, double b) {
    double e;
    double s = dd_detail::two_sum(a.hi, b, e);
    e += a.lo;
    s = dd_detail::quick_two_sum(s, e, e);
    return {s, e};
}
inline DoubleDouble operator+(double a, const DoubleDouble& b) { return b + a; }

inline DoubleDouble operator-(const DoubleDouble& a, const DoubleDouble& b) { return a + (-b); }
inline DoubleDouble operator-(const DoubleDouble& a, double b) { return a + (-b); }
inline DoubleDouble operator-(double a, const DoubleDouble& b) { return (-b) + a; }

inline DoubleDouble operator*(const DoubleDouble& a, const DoubleDouble& b) {
    double e;
    double p = dd_detail::two_prod(a.hi, b.hi, e);
    e += a.hi * b.lo + a.lo * b.hi;
    p = dd_detail::quick_two_sum(p, e, e);
    return {p, e};
}

inline DoubleDouble operator*(const DoubleDouble& a, double b) {
    double e;
    double p = dd_detail::two_prod(a.hi, b, e);
    e += a.lo * b;
    p = dd_detail::quick_two_sum(p, e, e);
    return {p, e};
}
inline DoubleDouble operator*(double a, const DoubleDouble& b) { return b * a; }

inline DoubleDouble operator/(const DoubleDouble& a, const DoubleDouble& b) {
    double q1 = a.hi / b.hi;
    DoubleDouble r = a - b * q1;
    double q2 = r.hi / b.hi;
    r -= b * q2;
    double q3 = r.hi / b.hi;
    DoubleDouble q = DoubleDouble::from_sum(q1, q2);
    return q + q3;
}
inline DoubleDouble operator/(const DoubleDouble& a, double b) { return a / DoubleDouble(b); }
inline DoubleDouble operator/(double a, const DoubleDouble& b) { return DoubleDouble(a) / b; }

inline DoubleDouble& DoubleDouble::operator+=(const DoubleDouble& b) { return *this = *this + b; }
inline DoubleDouble& DoubleDouble::operator*=(const DoubleDouble& b) { return *this = *this * b; }
inline DoubleDouble& DoubleDouble::operator/=(const DoubleDouble& b) { return *this = *this / b; }

inline bool operator==(const DoubleDouble& a, const DoubleDouble& b) { return a.hi == b.hi && a.lo == b.lo; }
inline bool operator!=(const DoubleDouble& a, const DoubleDouble& b) { return !(a == b); }
inline bool operator<(const DoubleDouble& a, const DoubleDouble& b) {
    return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}
inline bool operator>(const DoubleDouble& a, const DoubleDouble& b) { return b < a; }
inline bool operator<=(const DoubleDouble& a, const DoubleDouble& b) { return !(b < a); }
inline bool operator>=(const DoubleDouble& a, const DoubleDouble& b) { return !(a < b); }

namespace dd_const {
inline constexpr DoubleDouble pi{3.141592653589793116e+00, 1.224646799147353207e-16};
inline constexpr DoubleDouble half_pi{1.570796326794896558e+00, 6.123233995736766036e-17};
inline constexpr DoubleDouble two_pi{6.283185307179586232e+00, 2.449293598294706414e-16};
inline constexpr DoubleDouble ln2{6.931471805599452862e-01, 2.319046813846299558e-17};
inline constexpr double eps = 4.93038065763132e-32;  // 2^-104
}  // namespace dd_const

inline DoubleDouble abs(const DoubleDouble& a) { return a.hi < 0.0 ? -a : a; }
inline DoubleDouble fabs(const DoubleDouble& a) { return abs(a); }

inline DoubleDouble ldexp(const DoubleDouble& a, int e) { return {std::ldexp(a.hi, e), std::ldexp(a.lo, e)}; }

inline DoubleDouble sqr(const DoubleDouble& a) { return a * a; }

inline DoubleDouble sqrt(const DoubleDouble& a) {
    if (a.hi <= 0.0) return a.hi == 0.0 ? DoubleDouble{} : DoubleDouble{std::numeric_limits<double>::quiet_NaN()};
    double x = 1.0 / std::sqrt(a.hi);
    double ax = a.hi * x;
    DoubleDouble diff = a - sqr(DoubleDouble(ax));
    return DoubleDouble::from_sum(ax, diff.hi * (x * 0.5));
}

inline DoubleDouble floor(const DoubleDouble& a) {
    double h = std::floor(a.hi);
    if (h == a.hi) return DoubleDouble::from_sum(h, std::floor(a.lo));
    return {h, 0.0};
}

inline DoubleDouble round_nearest(const DoubleDouble& a) { return floor(a + 0.5); }

inline DoubleDouble exp(const DoubleDouble& a) {
    if (a.hi > 709.0) return {std::numeric_limits<double>::infinity()};
    if (a.hi < -745.0) return {};
    if (a.hi == 0.0 && a.lo == 0.0) return {1.0};
    double m = std::floor(a.hi / dd_const::ln2.hi + 0.5);
    // r = (a - m ln2) / 2^10, then exp(r)^(2^10)
    DoubleDouble r = ldexp(a - dd_const::ln2 * m, -10);
    DoubleDouble term = r;
    DoubleDouble sum = r;
    for (int k = 2; k < 30; ++k) {
        term = term * r / static_cast<double>(k);
        sum += term;
        if (std::fabs(term.hi) < dd_const::eps * 1e-3) break;
    }
    // exp(r) - 1 squared up: (1+s)^2 - 1 = 2s + s^2 keeps relative accuracy
    for (int k = 0; k < 10; ++k) sum = 2.0 * sum + sqr(sum);
    return ldexp(sum + 1.0, static_cast<int>(m));
}

inline DoubleDouble log(const DoubleDouble& a) {
    if (a.hi <= 0.0) return {std::numeric_limits<double>::quiet_NaN()};
    DoubleDouble x{std::log(a.hi)};
    x = x + a * exp(-x) - 1.0;
    x = x + a * exp(-x) - 1.0;
    return x;
}

namespace dd_detail {

// sin and cos of |r| <= pi/4
inline void sincos_reduced(const DoubleDouble& r, DoubleDouble& s, DoubleDouble& c) {
    DoubleDouble r2 = sqr(r);
    DoubleDouble term = r;
    s = r;
    for (int k = 1; k < 40; ++k) {
        term = -term * r2 / static_cast<double>((2 * k) * (2 * k + 1));
        s += term;
        if (std::fabs(term.hi) < dd_const::eps * 1e-2 * std::fabs(r.hi)) break;
    }
    term = DoubleDouble(1.0);
    c = DoubleDouble(1.0);
    for (int k = 1; k < 40; ++k) {
        term = -term * r2 / static_cast<double>((2 * k - 1) * (2 * k));
        c += term;
        if (std::fabs(term.hi) < dd_const::eps * 1e-2) break;
    }
}

}  // namespace dd_detail

inline void sincos(const DoubleDouble& a, DoubleDouble& s, DoubleDouble& c) {
    DoubleDouble k = round_nearest(a / dd_const::half_pi);
    DoubleDouble r = a - dd_const::half_pi * k;
    DoubleDouble sr, cr;
    dd_detail::sincos_reduced(r, sr, cr);
    double kq = std::fmod(k.hi, 4.0) + std::fmod(k.lo, 4.0);
    int q = static_cast<int>(std::fmod(std::fmod(kq, 4.0) + 4.0, 4.0));
    switch (q) {
        case 0: s = sr; c = cr; break;
        case 1: s = cr; c = -sr; break;
        case 2: s = -sr; c = -cr; break;
        default: s = -cr; c = sr; break;
    }
}

inline DoubleDouble sin(const DoubleDouble& a) {
    DoubleDouble s, c;
    sincos(a, s, c);
    return s;
}

inline DoubleDouble cos(const DoubleDouble& a) {
    DoubleDouble s, c;
    sincos(a, s, c);
    return c;
}

inline std::string to_string(const DoubleDouble& a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g%+.17g", a.hi, a.lo);
    return buf;
}

inline std::ostream& operator<<(std::ostream& os, const DoubleDouble& a) { return os << to_string(a); }

/// Uniform access to double and DoubleDouble in templated kernels.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static constexpr double epsilon = 2.220446049250313e-16;
    static double to_double(double x) { return x; }
    static double pi() { return 3.141592653589793; }
};

template <>
struct ScalarTraits<DoubleDouble> {
    static constexpr double epsilon = dd_const::eps;
    static double to_double(const DoubleDouble& x) { return x.to_double(); }
    static DoubleDouble pi() { return dd_const::pi; }
};

inline double to_double(double x) { return x; }
inline double to_double(const DoubleDouble& x) { return x.to_double(); }

}  // namespace arcgap
