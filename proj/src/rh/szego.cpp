#include "arcgap/rh/szego.hpp"

#include <cmath>
#include <numbers>

#include "arcgap/errors.hpp"
#include "arcgap/numerics/quadrature.hpp"

namespace arcgap {

namespace {

constexpr double pi = std::numbers::pi;
using cd = std::complex<double>;

// Points this close to the arc (and away from its endpoints) take the
// singularity-subtracted form of the Cauchy integral.
constexpr double kNearArc = 0.5;
constexpr double kEndpointGuard = 0.05;

double log_d_inf_with(const ArcWeight& weight, int nodes) {
    const double alpha = weight.alpha();
    auto rule = gauss_legendre<double>(nodes, 0.0, pi);
    double sum = 0.0;
    for (int i = 0; i < nodes; ++i) {
        double t = rule.nodes[i];
        double st = std::sin(0.5 * t);
        double ct = std::cos(0.5 * t);
        double d1 = (2.0 * pi - 2.0 * alpha) * st * st;
        double d2 = (2.0 * pi - 2.0 * alpha) * ct * ct;
        double theta = alpha + d1;
        // sin(θ/2)/√(2(cosα − cosθ)) dθ = sin(θ/2)(π−α) sin t dt / S, S = 2√(sin((θ−α)/2) sin((2π−α−θ)/2))
        double s = 2.0 * std::sqrt(std::sin(0.5 * d1) * std::sin(0.5 * d2));
        double jac = (pi - alpha) * std::sin(t);
        sum += rule.weights[i] * weight.log_value(theta) * std::sin(0.5 * theta) * jac / s;
    }
    return sum / (2.0 * pi);
}

}  // namespace

SzegoData::SzegoData(ArcWeight weight, int nodes)
    : weight_(std::move(weight)), frame_(weight_.alpha()), nodes_(nodes) {
    if (nodes < 8 || nodes % 2) throw InvalidArgument("SzegoData: nodes must be even and at least 8");
    if (weight_.is_constant_one()) return;
    const double alpha = weight_.alpha();
    auto rule = gauss_legendre<double>(nodes, 0.0, pi);
    rule_.reserve(nodes);
    for (int i = 0; i < nodes; ++i) {
        double t = rule.nodes[i];
        double st = std::sin(0.5 * t);
        double ct = std::cos(0.5 * t);
        // offsets from both endpoints, exact in t
        double d1 = (2.0 * pi - 2.0 * alpha) * st * st;
        double d2 = (2.0 * pi - 2.0 * alpha) * ct * ct;
        double theta = alpha + d1;
        double wt = rule.weights[i] * (pi - alpha) * std::sin(t) / (2.0 * pi);
        cd w_plus = cd(0.0, 2.0) * std::polar(1.0, 0.5 * theta) * std::sqrt(std::sin(0.5 * d1) * std::sin(0.5 * d2));
        rule_.push_back({theta, wt, std::polar(1.0, theta), weight_.log_value(theta) / w_plus});
    }
    log_d_inf_ = log_d_inf_with(weight_, nodes);
    d_inf_ = std::exp(log_d_inf_);
    doubling_delta_ = std::fabs(log_d_inf_ - log_d_inf_with(weight_, 2 * nodes));
    if (!converged())
        warnings_.push_back("Szego function quadrature unstable under node doubling (delta " +
                            std::to_string(doubling_delta_) + ")");
}

cd SzegoData::g_at(double theta) const {
    return weight_.log_value(theta) / frame_.w_boundary(theta, ArcSide::outer);
}

cd SzegoData::g_prime(double theta) const {
    const double h = 1e-5;
    return (g_at(theta + h) - g_at(theta - h)) / (2.0 * h);
}

// I(z) = (1/2πi)∫ G(ξ)dξ/(ξ−z) = −(1/2π)∫ G(θ) e^{iθ} dθ/(e^{iθ}−z)
cd SzegoData::integral(cd z) const {
    cd sum = 0.0;
    for (const auto& nd : rule_) sum += nd.weight * nd.g * nd.x / (nd.x - z);
    return -sum;
}

cd SzegoData::subtracted_integral(cd z, double theta0) const {
    const cd x0 = std::polar(1.0, theta0);
    const cd g0 = g_at(theta0);
    cd sum = 0.0;
    for (const auto& nd : rule_) {
        cd diff = nd.x - z;
        cd q;
        if (std::abs(diff) < 1e-9 && std::abs(z - x0) < 1e-14)
            q = g_prime(nd.theta) / (cd(0.0, 1.0) * nd.x);  // removable: dG/dξ at x0
        else
            q = (nd.g - g0) / diff;
        sum += nd.weight * q * nd.x;
    }
    return -sum;
}

cd SzegoData::log_d(cd z) const {
    if (weight_.is_constant_one()) {
        frame_.w(z);  // boundary check
        return 0.0;
    }
    const cd wz = frame_.w(z);
    const double alpha = weight_.alpha();
    double theta0 = std::arg(z);
    if (theta0 < 0.0) theta0 += 2.0 * pi;
    const bool near = frame_.distance_to_arc(z) < kNearArc && theta0 > alpha + kEndpointGuard &&
                      theta0 < 2.0 * pi - alpha - kEndpointGuard;
    if (!near) return wz * integral(z);
    cd i = subtracted_integral(z, theta0) + g_at(theta0) * frame_.cauchy_log(z);
    return wz * i;
}

cd SzegoData::boundary(double theta, ArcSide side) const {
    if (weight_.is_constant_one()) {
        frame_.w_boundary(theta, side);
        return 1.0;
    }
    const cd x0 = std::polar(1.0, theta);
    cd i = subtracted_integral(x0, theta) + g_at(theta) * frame_.cauchy_log_boundary(theta, side);
    return std::exp(frame_.w_boundary(theta, side) * i);
}

cd szego_function(const ArcWeight& weight, cd z, int nodes) { return SzegoData(weight, nodes)(z); }

double szego_infinity(const ArcWeight& weight, int nodes) { return SzegoData(weight, nodes).d_infinity(); }

}  // namespace arcgap
