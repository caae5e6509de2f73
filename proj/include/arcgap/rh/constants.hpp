#pragma once

#include <numbers>

namespace arcgap {

/// ζ′(−1) to 20 digits.
inline constexpr double kZetaPrimeMinusOne = -0.16542114370045092921;

/// Dyson constant c₀ = (1/12) ln 2 + 3ζ′(−1); the one value shared by every
/// large-s and large-n formula.
inline constexpr double kDysonC0 = std::numbers::ln2 / 12.0 + 3.0 * kZetaPrimeMinusOne;

/// First-correction validity: endpoint discs have radius min(sin(α/2), sin(α₀/2)).
inline constexpr double kAlpha0 = 0.3;

}  // namespace arcgap
