#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "arcgap/opuc/arc_weight.hpp"
#include "arcgap/rh/conformal.hpp"

namespace arcgap {

inline constexpr int kDefaultSzegoNodes = 128;

/// Szegő function of an arc weight: D(z) = exp(w(z)·I(z)) with
/// I(z) = (1/2πi)∫_Σ ln f(ξ)/(w₊(ξ)(ξ−z)) dξ. The contour integral runs over
/// θ(t) = α + (2π−2α)sin²(t/2), t ∈ [0, π], with Gauss–Legendre in t.
class SzegoData {
public:
    explicit SzegoData(ArcWeight weight, int nodes = kDefaultSzegoNodes);

    const ArcWeight& weight() const { return weight_; }
    const ConformalFrame& frame() const { return frame_; }
    int nodes() const { return nodes_; }

    double d_infinity() const { return d_inf_; }
    double log_d_infinity() const { return log_d_inf_; }
    /// |ln D∞(nodes) − ln D∞(2·nodes)|.
    double doubling_delta() const { return doubling_delta_; }
    bool converged() const { return doubling_delta_ <= 1e-8; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    std::complex<double> log_d(std::complex<double> z) const;
    std::complex<double> operator()(std::complex<double> z) const { return std::exp(log_d(z)); }
    std::complex<double> boundary(double theta, ArcSide side) const;

private:
    struct Node {
        double theta;
        double weight;  // dθ/dt · Gauss weight / (2π)
        std::complex<double> x;
        std::complex<double> g;  // ln f / w₊
    };
    std::complex<double> g_at(double theta) const;
    std::complex<double> g_prime(double theta) const;
    std::complex<double> integral(std::complex<double> z) const;
    std::complex<double> subtracted_integral(std::complex<double> z, double theta0) const;

    ArcWeight weight_;
    ConformalFrame frame_;
    int nodes_;
    std::vector<Node> rule_;
    double log_d_inf_ = 0.0;
    double d_inf_ = 1.0;
    double doubling_delta_ = 0.0;
    std::vector<std::string> warnings_;
};

std::complex<double> szego_function(const ArcWeight& weight, std::complex<double> z, int nodes = kDefaultSzegoNodes);
double szego_infinity(const ArcWeight& weight, int nodes = kDefaultSzegoNodes);

}  // namespace arcgap
