#pragma once

#include <complex>

namespace arcgap {

/// Side of the arc Σ = {e^{iθ}: α ≤ θ ≤ 2π−α}: outer is |z| > 1 (the + side).
enum class ArcSide { outer, inner };

/// w(z) = √((z−e^{iα})(z−e^{−iα})) cut along Σ with w(z)/z → 1 at ∞, and
/// the functions built from it. Points within 1e−12 of the closed arc
/// raise BoundaryError; boundary values are available in closed form.
class ConformalFrame {
public:
    explicit ConformalFrame(double alpha);

    double alpha() const { return alpha_; }
    double gamma() const { return gamma_; }

    /// Distance from z to the closed arc.
    double distance_to_arc(std::complex<double> z) const;

    std::complex<double> w(std::complex<double> z) const;
    std::complex<double> psi(std::complex<double> z) const;
    std::complex<double> mu(std::complex<double> z) const;  // minus branch
    std::complex<double> a_quarter_root(std::complex<double> z) const;
    /// (1/2πi)∫_Σ dξ/(ξ−z): vanishes at ∞, jumps by 1 across Σ.
    std::complex<double> cauchy_log(std::complex<double> z) const;

    /// ω(z) = (ln(ψ(z)/√z))²; requires |z − e^{iα}| < sin α.
    std::complex<double> omega(std::complex<double> z) const;

    /// Boundary values at e^{iθ}, α < θ < 2π−α.
    std::complex<double> w_boundary(double theta, ArcSide side) const;
    std::complex<double> psi_boundary(double theta, ArcSide side) const;
    std::complex<double> a_boundary(double theta, ArcSide side) const;
    std::complex<double> cauchy_log_boundary(double theta, ArcSide side) const;

private:
    void require_off_arc(std::complex<double> z) const;
    void require_open_arc(double theta) const;
    std::complex<double> rotated_ratio(std::complex<double> z) const;  // r(z)·e^{i(π−α)}

    double alpha_;
    double gamma_;
    std::complex<double> e_plus_;   // e^{iα}
    std::complex<double> e_minus_;  // e^{−iα}
    std::complex<double> rot_;      // e^{i(π−α)}
};

std::complex<double> psi(std::complex<double> z, double alpha);
std::complex<double> omega(std::complex<double> z, double alpha);
std::complex<double> a_quarter_root(std::complex<double> z, double alpha);

}  // namespace arcgap
