#include "arcgap/numerics/sturm.hpp"

#include <cmath>
#include <string>

#include "arcgap/errors.hpp"

namespace arcgap {

std::size_t sturm_count_below(std::span<const double> d, std::span<const double> e, double t) {
    const std::size_t n = d.size();
    if (n == 0) return 0;
    if (e.size() + 1 != n)
        throw InvalidArgument("sturm_count_below: |e| = " + std::to_string(e.size()) + ", expected " +
                              std::to_string(n - 1));
    constexpr double eps = 0x1p-52;
    std::size_t count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        double off = i > 0 ? e[i - 1] * e[i - 1] / q : 0.0;
        q = d[i] - t - off;
        if (q == 0.0) {
            double row = std::fabs(d[i] - t) + (i > 0 ? std::fabs(e[i - 1]) : 0.0) +
                         (i + 1 < n ? std::fabs(e[i]) : 0.0);
            q = eps * (row > 0.0 ? row : 1.0);
        }
        if (q < 0.0) ++count;
    }
    return count;
}

}  // namespace arcgap
