#pragma once

#include <string>
#include <string_view>

namespace arcgap {

enum class Precision { standard, extended };

inline std::string_view to_string(Precision p) {
    return p == Precision::standard ? "standard" : "extended";
}

/// Decimal digits carried by the working scalar.
inline double precision_digits(Precision p) {
    return p == Precision::standard ? 16.0 : 32.0;
}

}  // namespace arcgap
