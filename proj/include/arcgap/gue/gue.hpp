#pragma once

#include <cstdint>
#include <vector>

namespace arcgap {

/// β = 2 Hermite ensemble in tridiagonal form: same spectrum law as an N×N
/// GUE matrix with E|H_ij|² = 1, semicircle on [−2√N, 2√N].
struct TridiagonalSample {
    int n = 0;
    std::vector<double> d;  // N(0, 1)
    std::vector<double> e;  // e_i = √Gamma(N − i, 1), i = 1..N−1
    std::uint64_t seed = 0;
    std::uint64_t index = 0;
};

/// Deterministic in (seed, index); distinct indices give independent streams.
TridiagonalSample sample_tridiagonal(int n, std::uint64_t seed, std::uint64_t index = 0);

struct GapEstimate {
    double s = 0.0;
    long trials = 0;
    long hits = 0;
    double p_hat = 0.0;
    double std_error = 0.0;
};

/// Fraction of samples with no eigenvalue in (−s/√N, s/√N). Requires
/// N ≥ 200, 0 ≤ s ≤ 3 and trials ≥ 1000.
GapEstimate gap_probability(int n, double s, long trials, std::uint64_t seed);

/// The same estimate for several s on one batch of samples, so the
/// estimates are nonincreasing in s.
std::vector<GapEstimate> gap_probabilities(int n, const std::vector<double>& s_list, long trials, std::uint64_t seed,
                                           unsigned threads = 0);

}  // namespace arcgap
