#pragma once

#include <complex>
#include <vector>

#include "arcgap/opuc/arc_weight.hpp"
#include "arcgap/precision.hpp"

namespace arcgap {

enum class LadderMethod {
    szego_map,      // Lanczos on the pushed-forward measure + inverse Geronimus relations
    schur_moments,  // Schur recursion on the moment sequence
};

/// Reflection coefficients and leading coefficients of the orthonormal
/// polynomials for an arc weight. Convention:
///   Φ_{k+1}(z) = zΦ_k(z) − a_k Φ*_k(z),  Φ*_{k+1}(z) = Φ*_k(z) − a_k zΦ_k(z).
struct OpucLadder {
    ArcWeight weight;
    int n_max = 0;
    std::vector<double> moments;     // c_0..c_{n_max}
    std::vector<double> reflection;  // a_0..a_{n_max−1}
    std::vector<double> log_chi;     // ln χ_0..ln χ_{n_max}
    Precision precision = Precision::extended;
    LadderMethod method = LadderMethod::szego_map;
};

/// Default builder. Throws ConditioningError(k) if |a_k| ≥ 1 − 1e−12.
OpucLadder build_ladder(const ArcWeight& weight, int n_max, Precision precision = Precision::extended);

/// Moment-based builder; refuses n_max beyond the precision budget
/// n·ln((1+σ)/(1−σ)) < 0.8·digits·ln 10, σ = sin(α/2).
OpucLadder build_ladder_from_moments(const ArcWeight& weight, int n_max,
                                     Precision precision = Precision::extended);

/// Largest n_max accepted by build_ladder_from_moments.
int moment_route_budget(double alpha, Precision precision);

struct PolyEval {
    std::complex<double> phi;
    std::complex<double> phi_star;
    std::complex<double> dphi;
    std::complex<double> dphi_star;
};

/// φ_n, φ*_n and derivatives at z. Throws InvalidArgument if n > n_max.
PolyEval eval_poly(const OpucLadder& ladder, int n, std::complex<double> z);

/// Same for the monic Φ_n = φ_n/χ_n; avoids overflow of χ_n.
PolyEval eval_monic(const OpucLadder& ladder, int n, std::complex<double> z);

struct CdSum {
    double lhs = 0.0;  // Σ_{k<n} |φ_k(x)|²
    double rhs = 0.0;  // x·conj(φ_n)·φ′_n + conj of same − n|φ_n|²
};

/// Christoffel–Darboux identity on the unit circle. Throws InvalidArgument
/// if ||x| − 1| ≥ 1e−12.
CdSum cd_sum(const OpucLadder& ladder, int n, std::complex<double> x);

/// ln det T_{n−1} = −2 Σ_{k<n} ln χ_k, 1 ≤ n ≤ n_max + 1.
double toeplitz_log_det(const OpucLadder& ladder, int n);

}  // namespace arcgap
