#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arcgap/numerics/matrix.hpp"
#include "arcgap/precision.hpp"

namespace arcgap {

enum class GridPlacement {
    zero_to_two_s,  // (0, 2s)
    centered,       // (−s, s)
};

/// Nyström discretization of the sine kernel sin(x−y)/(π(x−y)) with
/// Gauss–Legendre nodes; kernel_matrix holds √(w_i w_j)·K(x_i, x_j).
struct NystromGrid {
    double s = 0.0;
    int order = 0;
    std::vector<double> nodes;
    std::vector<double> weights;
    Matrix kernel_matrix;
};

/// Throws InvalidArgument unless s > 0 and order ≥ 8.
NystromGrid build_grid(double s, int order, GridPlacement placement = GridPlacement::zero_to_two_s);

struct GapDeterminant {
    double s = 0.0;
    double log_delta = 0.0;        // ln Δ(s) at `order` nodes
    int order = 0;
    bool auto_order = false;
    double doubling_delta = 0.0;   // |value(order) − value(2·order)|, auto only
    bool converged = true;         // doubling_delta ≤ 1e−10, auto only
    Precision precision = Precision::extended;
    std::vector<std::string> warnings;
    std::vector<double> eigenvalues;  // of the kernel matrix, standard precision only
};

inline constexpr double kStandardPrecisionCeiling = 14.0;
inline constexpr double kOrderConvergenceTol = 1e-10;

/// Default node count max(40, ⌈8s⌉ + 20).
int auto_order(double s);

/// ln Δ(s) = ln det(I − K) on (0, 2s). Standard precision diagonalizes the
/// kernel matrix; extended precision assembles it in double-double and
/// factors I − K by Cholesky. Throws ConditioningError when I − K is not
/// numerically positive definite.
GapDeterminant log_gap_determinant(double s, std::optional<int> order = std::nullopt,
                                   Precision precision = Precision::extended);

}  // namespace arcgap
