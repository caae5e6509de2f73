#include "arcgap/opuc/arc_weight.hpp"

#include <cmath>
#include <numbers>

#include "arcgap/errors.hpp"

namespace arcgap {

namespace {

constexpr int kCheckSamples = 1024;

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < std::numbers::pi))
        throw InvalidArgument("ArcWeight: alpha must lie in (0, pi), got " + std::to_string(alpha));
}

}  // namespace

ArcWeight ArcWeight::constant_one(double alpha) {
    check_alpha(alpha);
    ArcWeight w;
    w.alpha_ = alpha;
    w.kind_ = Kind::constant_one;
    w.label_ = "1";
    return w;
}

ArcWeight ArcWeight::cosine_series(double alpha, std::vector<double> coeffs) {
    check_alpha(alpha);
    if (coeffs.empty()) throw InvalidArgument("ArcWeight: empty cosine series");
    ArcWeight w;
    w.alpha_ = alpha;
    w.kind_ = Kind::cosine_series;
    w.coeffs_ = std::move(coeffs);
    w.label_ = "cosine-series";
    w.validate();
    return w;
}

ArcWeight ArcWeight::from_function(double alpha, std::function<double(double)> f, std::string label) {
    check_alpha(alpha);
    if (!f) throw InvalidArgument("ArcWeight: empty callable");
    ArcWeight w;
    w.alpha_ = alpha;
    w.kind_ = Kind::callable;
    w.fn_ = std::make_shared<const std::function<double(double)>>(std::move(f));
    w.label_ = std::move(label);
    w.validate();
    return w;
}

ArcWeight ArcWeight::with_alpha(double alpha) const {
    check_alpha(alpha);
    ArcWeight w = *this;
    w.alpha_ = alpha;
    w.validate();
    return w;
}

double ArcWeight::gamma() const { return std::cos(0.5 * alpha_); }

void ArcWeight::validate() const {
    const double span = 2.0 * (std::numbers::pi - alpha_);
    for (int i = 0; i < kCheckSamples; ++i) {
        double theta = alpha_ + span * i / (kCheckSamples - 1);
        double f = (*this)(theta);
        if (!(f > 0.0) || !std::isfinite(f))
            throw InvalidArgument("ArcWeight: weight not positive at theta = " + std::to_string(theta));
        double g = (*this)(2.0 * std::numbers::pi - theta);
        if (std::fabs(f - g) > 1e-12 * std::max(1.0, std::fabs(f)))
            throw InvalidArgument("ArcWeight: weight not symmetric at theta = " + std::to_string(theta));
    }
}

double ArcWeight::operator()(double theta) const {
    switch (kind_) {
        case Kind::constant_one:
            return 1.0;
        case Kind::cosine_series: {
            double s = 0.0;
            for (std::size_t k = 0; k < coeffs_.size(); ++k) s += coeffs_[k] * std::cos(k * theta);
            return s;
        }
        case Kind::callable:
            return (*fn_)(theta);
    }
    return 0.0;
}

DoubleDouble ArcWeight::value(const DoubleDouble& theta) const {
    switch (kind_) {
        case Kind::constant_one:
            return DoubleDouble(1.0);
        case Kind::cosine_series: {
            DoubleDouble s(coeffs_[0]);
            for (std::size_t k = 1; k < coeffs_.size(); ++k)
                s += cos(theta * static_cast<double>(k)) * coeffs_[k];
            return s;
        }
        case Kind::callable:
            return DoubleDouble((*fn_)(theta.to_double()));
    }
    return DoubleDouble(0.0);
}

double ArcWeight::log_value(double theta) const {
    return kind_ == Kind::constant_one ? 0.0 : std::log((*this)(theta));
}

}  // namespace arcgap
