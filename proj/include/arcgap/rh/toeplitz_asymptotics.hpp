#pragma once

#include "arcgap/opuc/ladder.hpp"
#include "arcgap/rh/prediction.hpp"

namespace arcgap {

/// ln det T_{n−1}(α) ≈ n² ln cos(α/2) − ¼ ln(n sin(α/2)) + c₀ for f ≡ 1.
AsymptoticPrediction widom_log_det(int n, double alpha);
/// ln Δ(s) ≈ −s²/2 − ¼ ln s + c₀.
AsymptoticPrediction dyson_log_gap(double s);
/// Widom's formula at α = 2s/n: n² ln cos(s/n) − ¼ ln(n sin(s/n)) + c₀.
AsymptoticPrediction dyson_toeplitz_log_det(int n, double s);

/// d/dα ln det T_{n−1}(α) = (n/π)|φ_n(e^{iα})|² − (2/π) Re(conj(φ_n) e^{iα} φ′_n), exactly.
double deift_rhs(const OpucLadder& ladder, int n, double alpha);
/// The same derivative as −(1/π) Σ_{k<n} |φ_k(e^{iα})|².
double deift_sum(const OpucLadder& ladder, int n, double alpha);
/// −n² tan(α/2)/2 − cot(α/2)/8.
AsymptoticPrediction deriv_asymptotic(int n, double alpha);

}  // namespace arcgap
