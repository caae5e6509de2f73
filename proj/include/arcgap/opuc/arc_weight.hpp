#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "arcgap/numerics/double_double.hpp"

namespace arcgap {

/// Weight f(θ) on the arc α ≤ θ ≤ 2π−α, normalized as dμ = f(θ) dθ / 2π.
/// f must be positive on the arc and satisfy f(θ) = f(2π−θ).
class ArcWeight {
public:
    enum class Kind { constant_one, cosine_series, callable };

    static ArcWeight constant_one(double alpha);
    /// f(θ) = Σ_k coeffs[k]·cos(kθ).
    static ArcWeight cosine_series(double alpha, std::vector<double> coeffs);
    /// Arbitrary callable; extended-precision paths evaluate it in double.
    static ArcWeight from_function(double alpha, std::function<double(double)> f, std::string label = "callable");

    double alpha() const { return alpha_; }
    double gamma() const;  // cos(α/2)
    Kind kind() const { return kind_; }
    bool is_constant_one() const { return kind_ == Kind::constant_one; }
    const std::string& label() const { return label_; }
    const std::vector<double>& coefficients() const { return coeffs_; }

    double operator()(double theta) const;
    DoubleDouble value(const DoubleDouble& theta) const;
    double log_value(double theta) const;

    /// Same f on a different arc.
    ArcWeight with_alpha(double alpha) const;

private:
    ArcWeight() = default;
    void validate() const;

    double alpha_ = 0.0;
    Kind kind_ = Kind::constant_one;
    std::vector<double> coeffs_;
    std::shared_ptr<const std::function<double(double)>> fn_;
    std::string label_;
};

}  // namespace arcgap
