#include "arcgap/rh/theorem2.hpp"

#include <cmath>
#include <numbers>

#include "arcgap/errors.hpp"

namespace arcgap {

namespace {

using cd = std::complex<double>;
constexpr cd I{0.0, 1.0};
constexpr double pi = std::numbers::pi;

cd e(double t) { return std::polar(1.0, t); }

void require_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < pi)) throw InvalidArgument("alpha must lie in (0, pi)");
}

Thm2Constants in_regime(int n, double alpha) {
    Thm2Constants c = thm2_constants(n, alpha);
    if (c.rho < kThm2MinRho)
        throw RegimeError("rho = n sin(alpha/2) = " + std::to_string(c.rho) + " is below " +
                          std::to_string(kThm2MinRho));
    return c;
}

cd sqrt_pi_i_rho(double rho) { return std::sqrt(cd(0.0, pi * rho)); }

}  // namespace

Thm2Constants thm2_constants(int n, double alpha) {
    require_alpha(alpha);
    if (n < 1) throw InvalidArgument("thm2_constants: n must be at least 1");
    Thm2Constants c;
    c.r1_plus = e(-0.5 * alpha) / (48.0 * I) * (1.0 + e(-alpha) - 2.0 * e(alpha));
    c.r1_minus = e(-0.5 * alpha) / (16.0 * I) * (1.0 + 3.0 * e(alpha));
    c.r2_plus = (16.0 - 9.0 * e(alpha) + 43.0 * e(-alpha) - 2.0 * e(-2.0 * alpha)) / 1536.0;
    c.r2_minus = (-6.0 + 7.0 * e(alpha) - 17.0 * e(-alpha)) / 512.0;
    const double g = std::cos(0.5 * alpha);
    c.r1_minus_prime = e(0.5 * alpha) / 4.0 * g * g;
    c.tau = (1.0 + 2.0 * std::cos(alpha)) / (6.0 * I);
    c.rho = n * std::sin(0.5 * alpha);
    return c;
}

AsymptoticPrediction thm2_endpoint(int n, double alpha) {
    const Thm2Constants c = in_regime(n, alpha);
    const double rho = c.rho;
    AsymptoticPrediction p;
    p.log_scale = n * std::log(std::cos(0.5 * alpha));
    p.leading = e(alpha * (0.5 * n - 0.25)) * sqrt_pi_i_rho(rho);
    p.value = p.leading * (1.0 + c.r1_minus / rho + c.r2_minus / (rho * rho));
    p.order = RemainderOrder::rho_inv_cubed;
    p.n = n;
    p.alpha = alpha;
    p.z = e(alpha);
    return p;
}

AsymptoticPrediction thm2_chi(int n, double alpha) {
    require_alpha(alpha);
    if (n < 2) throw InvalidArgument("thm2_chi: n must be at least 2");
    AsymptoticPrediction p;
    p.log_scale = (1.0 - 2.0 * n) * std::log(std::cos(0.5 * alpha));
    p.leading = 1.0;
    p.value = 1.0 + 1.0 / (4.0 * n) + 5.0 / (32.0 * n * static_cast<double>(n));
    p.order = RemainderOrder::n_inv_cubed;
    p.n = n;
    p.alpha = alpha;
    return p;
}

AsymptoticPrediction thm2_derivative(int n, double alpha) {
    const Thm2Constants c = in_regime(n, alpha);
    const double rho = c.rho;
    const AsymptoticPrediction phi = thm2_endpoint(n, alpha);
    const cd h = e(0.5 * alpha);
    const cd irho2 = I * rho * rho;
    const cd bracket = irho2 + h * rho + c.tau +
                       (c.r1_minus * (irho2 + c.tau) + c.r1_plus * h * rho + c.r1_minus_prime) / rho +
                       (c.r2_minus * irho2 + c.r2_plus * h * rho) / (rho * rho);
    const cd pref = e(alpha * (0.5 * n - 1.25)) * sqrt_pi_i_rho(rho) / (2.0 * std::sin(alpha));
    AsymptoticPrediction p;
    p.log_scale = phi.log_scale;
    p.value = 0.5 * n * phi.value * e(-alpha) + pref * bracket;
    p.leading = 0.5 * n * phi.leading * e(-alpha) + pref * irho2;
    p.order = RemainderOrder::rho_inv_cubed;
    p.n = n;
    p.alpha = alpha;
    p.z = e(alpha);
    return p;
}

}  // namespace arcgap
