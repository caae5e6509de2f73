#include "arcgap/opuc/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "arcgap/errors.hpp"
#include "arcgap/numerics/quadrature.hpp"
#include "arcgap/opuc/moments.hpp"

namespace arcgap {

namespace {

constexpr double kReflectionLimit = 1.0 - 1e-12;

template <class T>
T cos_t(const T& x) {
    if constexpr (std::is_same_v<T, double>)
        return std::cos(x);
    else
        return cos(x);
}

template <class T>
T log_t(const T& x) {
    if constexpr (std::is_same_v<T, double>)
        return std::log(x);
    else
        return log(x);
}

// Jacobi parameters of the discrete measure Σ w_i δ(x_i), x ascending,
// by the Rutishauser–Kahan–Pal–Walker update (Gautschi's lanczos.m).
// On return b[k] are the diagonal entries and beta[k] the squared
// off-diagonal entries (beta[0] is not used).
template <class T>
void rkpw_lanczos(const std::vector<T>& x, const std::vector<T>& w, std::vector<T>& b, std::vector<T>& beta) {
    const std::size_t n = x.size();
    std::vector<T> p0 = x;
    std::vector<T> p1(n, T(0.0));
    p1[0] = w[0];
    for (std::size_t m = 0; m + 1 < n; ++m) {
        T pn = w[m + 1];
        T gam(1.0), sig(0.0), t(0.0);
        const T xlam = x[m + 1];
        for (std::size_t k = 0; k <= m + 1; ++k) {
            T rho = p1[k] + pn;
            T tmp = gam * rho;
            T tsig = sig;
            if (!(to_double(rho) > 0.0)) {
                gam = T(1.0);
                sig = T(0.0);
            } else {
                gam = p1[k] / rho;
                sig = pn / rho;
            }
            T tk = sig * (p0[k] - xlam) - gam * t;
            p0[k] = p0[k] - (tk - t);
            t = tk;
            if (!(to_double(sig) > 0.0))
                pn = tsig * p1[k];
            else
                pn = (t * t) / sig;
            p1[k] = tmp;
        }
    }
    b = std::move(p0);
    beta = std::move(p1);
}

// Reflection coefficients a_0..a_{n−1} from the Jacobi matrix of the measure
// pushed to [−2, 2cos α] by x = 2cos θ (inverse Geronimus relations).
template <class T>
std::vector<T> szego_map_reflection(const ArcWeight& weight, int n, T& c0) {
    const int m = n + 64;
    const T pi = ScalarTraits<T>::pi();
    auto rule = gauss_legendre<T>(m, T(weight.alpha()), pi);
    std::vector<T> x(m), w(m);
    c0 = T(0.0);
    for (int i = 0; i < m; ++i) {
        // θ ascending gives x descending
        const T& th = rule.nodes[m - 1 - i];
        T f;
        if constexpr (std::is_same_v<T, double>)
            f = weight(th);
        else
            f = weight.value(th);
        x[i] = cos_t(th) * 2.0;
        w[i] = rule.weights[m - 1 - i] * f / pi;
        c0 += w[i];
    }
    if (weight.is_constant_one()) c0 = arc_moment(0, T(weight.alpha()));
    std::vector<T> a(std::max(n, 0));
    if (n == 0) return a;

    std::vector<T> b, beta;
    rkpw_lanczos(x, w, b, beta);

    // alpha_{-1} = −1
    T prev_odd(-1.0);
    a[0] = b[0] * 0.5;
    for (int k = 0;; ++k) {
        const int odd = 2 * k + 1;
        if (odd >= n) break;
        const T& even = a[2 * k];
        a[odd] = beta[k + 1] / ((1.0 - prev_odd) * (1.0 - even * even)) - 1.0;
        if (odd + 1 >= n) break;
        a[odd + 1] = (b[k + 1] + (1.0 + a[odd]) * even) / (1.0 - a[odd]);
        prev_odd = a[odd];
    }
    return a;
}

// Schur recursion on the moment sequence: L_k, M_k generators, a_k = M_k(k+1)/L_k(k).
template <class T>
std::vector<T> schur_reflection(const std::vector<T>& c, int n) {
    std::vector<T> l(c.begin(), c.begin() + n + 1);
    std::vector<T> mm = l;
    std::vector<T> a(n);
    for (int k = 0; k < n; ++k) {
        T ak = mm[k + 1] / l[k];
        a[k] = ak;
        if (std::fabs(to_double(ak)) >= kReflectionLimit)
            throw ConditioningError("build_ladder_from_moments: reflection coefficient reached the unit circle", k);
        for (int j = n; j >= k + 1; --j) {
            T lj = l[j - 1] - ak * mm[j];
            T mj = mm[j] - ak * l[j - 1];
            l[j] = lj;
            mm[j] = mj;
        }
    }
    return a;
}

template <class T>
void fill_log_chi(OpucLadder& lad, const std::vector<T>& a, const T& c0) {
    lad.reflection.resize(a.size());
    lad.log_chi.resize(a.size() + 1);
    T lc = log_t(c0) * -0.5;
    lad.log_chi[0] = to_double(lc);
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (std::fabs(to_double(a[k])) >= kReflectionLimit)
            throw ConditioningError("build_ladder: reflection coefficient reached the unit circle", k);
        lad.reflection[k] = to_double(a[k]);
        lc -= log_t((1.0 - a[k]) * (1.0 + a[k])) * 0.5;
        lad.log_chi[k + 1] = to_double(lc);
    }
}

template <class T>
OpucLadder build_szego(const ArcWeight& weight, int n_max, Precision precision) {
    OpucLadder lad{weight, n_max, {}, {}, {}, precision, LadderMethod::szego_map};
    T c0;
    std::vector<T> a = szego_map_reflection<T>(weight, n_max, c0);
    fill_log_chi(lad, a, c0);
    auto c = moment_sequence<T>(weight, n_max);
    lad.moments.resize(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) lad.moments[k] = to_double(c[k]);
    return lad;
}

template <class T>
OpucLadder build_schur(const ArcWeight& weight, int n_max, Precision precision) {
    OpucLadder lad{weight, n_max, {}, {}, {}, precision, LadderMethod::schur_moments};
    auto c = moment_sequence<T>(weight, n_max);
    std::vector<T> a = schur_reflection(c, n_max);
    fill_log_chi(lad, a, c[0]);
    lad.moments.resize(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) lad.moments[k] = to_double(c[k]);
    return lad;
}

void check_degree(int n_max) {
    if (n_max < 0) throw InvalidArgument("build_ladder: n_max must be nonnegative");
    if (n_max + 64 > kMaxQuadratureOrder) throw InvalidArgument("build_ladder: n_max too large");
}

}  // namespace

OpucLadder build_ladder(const ArcWeight& weight, int n_max, Precision precision) {
    check_degree(n_max);
    if (precision == Precision::standard) return build_szego<double>(weight, n_max, precision);
    return build_szego<DoubleDouble>(weight, n_max, precision);
}

int moment_route_budget(double alpha, Precision precision) {
    const double sigma = std::sin(0.5 * alpha);
    const double per_degree = std::log((1.0 + sigma) / (1.0 - sigma));
    const double limit = 0.8 * precision_digits(precision) * std::log(10.0);
    double n = std::ceil(limit / per_degree) - 1.0;
    return static_cast<int>(std::min(n, 1e6));
}

OpucLadder build_ladder_from_moments(const ArcWeight& weight, int n_max, Precision precision) {
    check_degree(n_max);
    const int budget = moment_route_budget(weight.alpha(), precision);
    if (n_max > budget)
        throw ConditioningError("build_ladder_from_moments: degree beyond the " + std::string(to_string(precision)) +
                                    "-precision budget",
                                static_cast<std::size_t>(budget + 1));
    if (precision == Precision::standard) return build_schur<double>(weight, n_max, precision);
    return build_schur<DoubleDouble>(weight, n_max, precision);
}

namespace {

void check_n(const OpucLadder& lad, int n) {
    if (n < 0 || n > lad.n_max)
        throw InvalidArgument("eval_poly: degree " + std::to_string(n) + " outside [0, " +
                              std::to_string(lad.n_max) + "]");
}

PolyEval run_recursion(const OpucLadder& lad, int n, std::complex<double> z, bool normalized,
                       double* sum_sq = nullptr) {
    using cd = std::complex<double>;
    double start = normalized ? std::exp(lad.log_chi[0]) : 1.0;
    cd p(start), ps(start), dp(0.0), dps(0.0);
    for (int k = 0; k < n; ++k) {
        if (sum_sq) *sum_sq += std::norm(p);
        const double a = lad.reflection[k];
        const double s = normalized ? std::sqrt((1.0 - a) * (1.0 + a)) : 1.0;
        cd zp = z * p;
        cd dzp = p + z * dp;
        cd np = (zp - a * ps) / s;
        cd nps = (ps - a * zp) / s;
        cd ndp = (dzp - a * dps) / s;
        cd ndps = (dps - a * dzp) / s;
        p = np;
        ps = nps;
        dp = ndp;
        dps = ndps;
    }
    return {p, ps, dp, dps};
}

}  // namespace

PolyEval eval_poly(const OpucLadder& ladder, int n, std::complex<double> z) {
    check_n(ladder, n);
    return run_recursion(ladder, n, z, true);
}

PolyEval eval_monic(const OpucLadder& ladder, int n, std::complex<double> z) {
    check_n(ladder, n);
    return run_recursion(ladder, n, z, false);
}

CdSum cd_sum(const OpucLadder& ladder, int n, std::complex<double> x) {
    if (std::fabs(std::abs(x) - 1.0) >= 1e-12) throw InvalidArgument("cd_sum: x must lie on the unit circle");
    check_n(ladder, n);
    CdSum out;
    PolyEval e = run_recursion(ladder, n, x, true, &out.lhs);
    out.rhs = 2.0 * std::real(x * std::conj(e.phi) * e.dphi) - n * std::norm(e.phi);
    return out;
}

double toeplitz_log_det(const OpucLadder& ladder, int n) {
    if (n < 1 || n > ladder.n_max + 1)
        throw InvalidArgument("toeplitz_log_det: n must lie in [1, n_max + 1]");
    double s = 0.0;
    for (int k = 0; k < n; ++k) s += ladder.log_chi[k];
    return -2.0 * s;
}

}  // namespace arcgap
