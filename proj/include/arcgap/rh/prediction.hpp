#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <string_view>

namespace arcgap {

enum class RemainderOrder {
    rho_inv_cubed,        // ρ⁻³, ρ = n sin(α/2)
    n_inv_squared,        // n⁻²
    n_inv_cubed,          // n⁻³
    s_inv,                // 1/s
    little_o_one,         // o(1)
    n_sin2_half_inv,      // 1/(n sin²(α/2))
};

std::string_view to_string(RemainderOrder order);

/// Predicted quantity = value · exp(log_scale). The scale carries factors
/// such as γⁿ that overflow or underflow double at large n.
struct AsymptoticPrediction {
    std::complex<double> value;
    double log_scale = 0.0;
    std::complex<double> leading;  // leading term, same scale; zero if not meaningful
    RemainderOrder order = RemainderOrder::little_o_one;

    std::optional<int> n;
    std::optional<double> alpha;
    std::optional<double> s;
    std::optional<std::complex<double>> z;

    std::complex<double> scaled() const { return value * std::exp(log_scale); }
    double real() const { return (value * std::exp(log_scale)).real(); }
};

}  // namespace arcgap
