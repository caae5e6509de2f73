#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arcgap/cli/report.hpp"
#include "arcgap/precision.hpp"

namespace arcgap {

/// Evenly spaced grid from lo to hi inclusive.
std::vector<double> inclusive_grid(double lo, double hi, double step);

struct GapOptions {
    double s = 1.0;
    std::optional<int> order;
    Precision precision = Precision::extended;
};

struct FredholmFitOptions {
    double s_min = 6.0;
    double s_max = 12.0;
    double step = 0.5;
    int terms = 3;
    Precision precision = Precision::extended;
};

struct WidomFitOptions {
    double alpha = 0.5;
    int n_min = 100;
    int n_max = 600;
    int step = 50;
    int terms = 3;
    Precision precision = Precision::extended;
};

struct Thm2Options {
    double s = 40.0;
    std::vector<int> n_list{200, 400, 800};
    std::vector<double> alpha_grid{0.3, 0.6, 1.0, 1.5, 2.0};
    std::vector<double> rho_list{20.0, 40.0, 80.0, 150.0};
    double bound = 0.1;  // on ρ³-normalized residuals
    double chi_alpha = 0.6;
    std::vector<int> chi_n_list{20, 40, 60, 80, 100, 120, 140, 160, 180, 200};
    double chi_bound = 5.0;  // on n³-normalized residuals
    Precision precision = Precision::extended;
};

struct DeiftOptions {
    std::vector<double> alpha_grid{0.5, 1.0, 1.5};
    std::vector<int> n_list{1, 2, 5, 10, 20, 40};
    double h = 1e-5;
    double tolerance = 1e-6;    // relative, finite difference vs identity
    double asymptotic_bound = 0.1;  // on residual·n sin²(α/2)
    Precision precision = Precision::extended;
};

struct TfOptions {
    double s = 5.0;
    std::vector<int> n_list{500, 1000, 2000};
    double final_tolerance = 1e-2;
    Precision precision = Precision::extended;
};

struct GueOptions {
    std::vector<double> s_list{0.0, 0.5, 1.0, 1.5, 2.0};
    int n = 400;
    long trials = 100000;
    std::uint64_t seed = 0;
    double max_abs_z = 4.0;
    unsigned threads = 0;
};

/// Each run_* evaluates one experiment; ConditioningError propagates,
/// verification failures are recorded in the report (passed = false).
ExperimentReport run_gap(const GapOptions& opt);
ExperimentReport run_fit_c0_fredholm(const FredholmFitOptions& opt);
ExperimentReport run_fit_c0_widom(const WidomFitOptions& opt);
ExperimentReport run_verify_thm2(const Thm2Options& opt);
ExperimentReport run_verify_deift(const DeiftOptions& opt);
ExperimentReport run_crosscheck_tf(const TfOptions& opt);
ExperimentReport run_gue(const GueOptions& opt);

}  // namespace arcgap
