#include "arcgap/rh/conformal.hpp"

#include <cmath>
#include <numbers>

#include "arcgap/errors.hpp"

namespace arcgap {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double kArcTol = 1e-12;
using cd = std::complex<double>;

}  // namespace

ConformalFrame::ConformalFrame(double alpha)
    : alpha_(alpha),
      gamma_(std::cos(0.5 * alpha)),
      e_plus_(std::polar(1.0, alpha)),
      e_minus_(std::polar(1.0, -alpha)),
      rot_(std::polar(1.0, pi - alpha)) {
    if (!(alpha > 0.0 && alpha < pi)) throw InvalidArgument("ConformalFrame: alpha must lie in (0, pi)");
}

double ConformalFrame::distance_to_arc(cd z) const {
    double r = std::abs(z);
    if (r == 0.0) return 1.0;
    if (std::fabs(std::arg(z)) >= alpha_) return std::fabs(r - 1.0);
    return std::min(std::abs(z - e_plus_), std::abs(z - e_minus_));
}

void ConformalFrame::require_off_arc(cd z) const {
    if (distance_to_arc(z) < kArcTol) throw BoundaryError("point lies on the arc; use the boundary-value variant");
}

void ConformalFrame::require_open_arc(double theta) const {
    if (!(theta > alpha_ && theta < 2.0 * pi - alpha_))
        throw InvalidArgument("boundary value requested outside the open arc");
}

cd ConformalFrame::rotated_ratio(cd z) const { return (z - e_plus_) / (z - e_minus_) * rot_; }

cd ConformalFrame::w(cd z) const {
    require_off_arc(z);
    // r(z) = (z−e^{iα})/(z−e^{−iα}) sends Σ to the ray arg = α; rotating it
    // onto the negative axis puts the principal cut exactly on Σ.
    return (z - e_minus_) * std::polar(1.0, 0.5 * (alpha_ - pi)) * std::sqrt(rotated_ratio(z));
}

cd ConformalFrame::psi(cd z) const { return (z + 1.0 + w(z)) / (2.0 * gamma_); }

cd ConformalFrame::mu(cd z) const { return (z + 1.0 - w(z)) / (2.0 * gamma_); }

cd ConformalFrame::a_quarter_root(cd z) const {
    require_off_arc(z);
    return std::polar(1.0, 0.25 * (alpha_ - pi)) * std::pow(rotated_ratio(z), 0.25);
}

cd ConformalFrame::cauchy_log(cd z) const {
    require_off_arc(z);
    return (std::log(rotated_ratio(z)) - cd(0.0, pi - alpha_)) / cd(0.0, 2.0 * pi);
}

cd ConformalFrame::omega(cd z) const {
    if (!(std::abs(z - e_plus_) < std::sin(alpha_)))
        throw InvalidArgument("omega: z outside the disc |z - e^{i alpha}| < sin(alpha)");
    cd l = std::log(psi(z) / std::sqrt(z));
    return l * l;
}

cd ConformalFrame::w_boundary(double theta, ArcSide side) const {
    require_open_arc(theta);
    // 2(cos α − cos θ) in product form, accurate near the endpoints
    double s = 2.0 * std::sqrt(std::sin(0.5 * (theta - alpha_)) * std::sin(0.5 * (2.0 * pi - alpha_ - theta)));
    cd outer = cd(0.0, 1.0) * std::polar(1.0, 0.5 * theta) * s;
    return side == ArcSide::outer ? outer : -outer;
}

cd ConformalFrame::psi_boundary(double theta, ArcSide side) const {
    return (std::polar(1.0, theta) + 1.0 + w_boundary(theta, side)) / (2.0 * gamma_);
}

cd ConformalFrame::a_boundary(double theta, ArcSide side) const {
    require_open_arc(theta);
    cd x = std::polar(1.0, theta);
    double mod = std::pow(std::abs((x - e_plus_) / (x - e_minus_)), 0.25);
    cd outer = std::polar(mod, 0.25 * alpha_);
    return side == ArcSide::outer ? outer : cd(0.0, -1.0) * outer;
}

cd ConformalFrame::cauchy_log_boundary(double theta, ArcSide side) const {
    require_open_arc(theta);
    cd x = std::polar(1.0, theta);
    double lr = std::log(std::abs((x - e_plus_) / (x - e_minus_)));
    double arg = side == ArcSide::outer ? pi : -pi;
    return cd(lr, arg - (pi - alpha_)) / cd(0.0, 2.0 * pi);
}

cd psi(cd z, double alpha) { return ConformalFrame(alpha).psi(z); }
cd omega(cd z, double alpha) { return ConformalFrame(alpha).omega(z); }
cd a_quarter_root(cd z, double alpha) { return ConformalFrame(alpha).a_quarter_root(z); }

}  // namespace arcgap
