#include "arcgap/rh/toeplitz_asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "arcgap/errors.hpp"
#include "arcgap/rh/constants.hpp"

namespace arcgap {

namespace {

constexpr double pi = std::numbers::pi;

// ln cos x without the cancellation in 1 − cos x for small x
double log_cos(double x) {
    const double h = std::sin(0.5 * x);
    return std::log1p(-2.0 * h * h);
}

AsymptoticPrediction real_prediction(double v, double lead, RemainderOrder order) {
    AsymptoticPrediction p;
    p.value = v;
    p.leading = lead;
    p.order = order;
    return p;
}

void check_ladder(const OpucLadder& ladder, double alpha) {
    if (std::fabs(ladder.weight.alpha() - alpha) > 1e-15)
        throw InvalidArgument("ladder was built for a different alpha");
}

}  // namespace

AsymptoticPrediction widom_log_det(int n, double alpha) {
    if (!(alpha > 0.0 && alpha < pi)) throw InvalidArgument("widom_log_det: alpha must lie in (0, pi)");
    if (n < 2) throw InvalidArgument("widom_log_det: n must be at least 2");
    const double lead = static_cast<double>(n) * n * log_cos(0.5 * alpha);
    auto p = real_prediction(lead - 0.25 * std::log(n * std::sin(0.5 * alpha)) + kDysonC0, lead,
                             RemainderOrder::little_o_one);
    p.n = n;
    p.alpha = alpha;
    return p;
}

AsymptoticPrediction dyson_log_gap(double s) {
    if (!(s > 0.0)) throw InvalidArgument("dyson_log_gap: s must be positive");
    const double lead = -0.5 * s * s;
    auto p = real_prediction(lead - 0.25 * std::log(s) + kDysonC0, lead, RemainderOrder::s_inv);
    p.s = s;
    return p;
}

AsymptoticPrediction dyson_toeplitz_log_det(int n, double s) {
    if (!(s > 0.0 && n > s)) throw InvalidArgument("dyson_toeplitz_log_det: need n > s > 0");
    const double x = s / n;
    const double lead = static_cast<double>(n) * n * log_cos(x);
    auto p = real_prediction(lead - 0.25 * std::log(n * std::sin(x)) + kDysonC0, lead, RemainderOrder::s_inv);
    p.n = n;
    p.s = s;
    p.alpha = 2.0 * x;
    return p;
}

double deift_rhs(const OpucLadder& ladder, int n, double alpha) {
    check_ladder(ladder, alpha);
    const std::complex<double> x = std::polar(1.0, alpha);
    const PolyEval e = eval_poly(ladder, n, x);
    return n / pi * std::norm(e.phi) - 2.0 / pi * std::real(std::conj(e.phi) * x * e.dphi);
}

double deift_sum(const OpucLadder& ladder, int n, double alpha) {
    check_ladder(ladder, alpha);
    return -cd_sum(ladder, n, std::polar(1.0, alpha)).lhs / pi;
}

AsymptoticPrediction deriv_asymptotic(int n, double alpha) {
    if (!(alpha > 0.0 && alpha < pi)) throw InvalidArgument("deriv_asymptotic: alpha must lie in (0, pi)");
    const double t = std::tan(0.5 * alpha);
    const double lead = -0.5 * n * static_cast<double>(n) * t;
    auto p = real_prediction(lead - 0.125 / t, lead, RemainderOrder::n_sin2_half_inv);
    p.n = n;
    p.alpha = alpha;
    return p;
}

std::string_view to_string(RemainderOrder order) {
    switch (order) {
        case RemainderOrder::rho_inv_cubed: return "rho^-3";
        case RemainderOrder::n_inv_squared: return "n^-2";
        case RemainderOrder::n_inv_cubed: return "n^-3";
        case RemainderOrder::s_inv: return "1/s";
        case RemainderOrder::little_o_one: return "o(1)";
        case RemainderOrder::n_sin2_half_inv: return "1/(n sin^2(alpha/2))";
    }
    return "?";
}

}  // namespace arcgap
