#pragma once

#include <complex>

#include "arcgap/rh/prediction.hpp"

namespace arcgap {

/// Endpoint expansions for f ≡ 1 are trusted from this ρ = n sin(α/2) on.
inline constexpr double kThm2MinRho = 5.0;

struct Thm2Constants {
    std::complex<double> r1_plus;
    std::complex<double> r1_minus;
    std::complex<double> r2_plus;
    std::complex<double> r2_minus;
    std::complex<double> r1_minus_prime;
    std::complex<double> tau;
    double rho = 0.0;
};

Thm2Constants thm2_constants(int n, double alpha);

/// φ_n(e^{iα})/χ_n for f ≡ 1, through order ρ⁻².
AsymptoticPrediction thm2_endpoint(int n, double alpha);
/// χ²_{n−1} for f ≡ 1: γ^{−2n+1}(1 + 1/(4n) + 5/(32n²)).
AsymptoticPrediction thm2_chi(int n, double alpha);
/// φ′_n(e^{iα})/χ_n for f ≡ 1; the first term reuses thm2_endpoint.
AsymptoticPrediction thm2_derivative(int n, double alpha);

}  // namespace arcgap
