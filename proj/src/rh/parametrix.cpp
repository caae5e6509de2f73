#include "arcgap/rh/parametrix.hpp"

#include <algorithm>
#include <cmath>

#include "arcgap/errors.hpp"
#include "arcgap/rh/constants.hpp"

namespace arcgap {

namespace {

using cd = std::complex<double>;
constexpr cd I{0.0, 1.0};

Matrix2c assemble_n(cd a, cd d, double d_inf) {
    const cd ap = 0.5 * (a + 1.0 / a);
    const cd am = 0.5 * (a - 1.0 / a);
    Matrix2c n;
    n(0, 0) = d_inf * ap / d;
    n(0, 1) = -I * am * d_inf * d;
    n(1, 0) = I * am / (d_inf * d);
    n(1, 1) = ap * d / d_inf;
    return n;
}

void require_n(int n) {
    if (n < 1) throw InvalidArgument("degree n must be at least 1");
}

void require_outside_discs(const SzegoData& sz, cd z) {
    const double alpha = sz.frame().alpha();
    const double delta = endpoint_disc_radius(alpha);
    if (std::abs(z - std::polar(1.0, alpha)) < delta || std::abs(z - std::polar(1.0, -alpha)) < delta)
        throw InvalidArgument("z lies inside an endpoint disc; only the outer branch of R1 is available");
}

}  // namespace

double Matrix2c::max_abs() const {
    double r = 0.0;
    for (const auto& row : m)
        for (const auto& v : row) r = std::max(r, std::abs(v));
    return r;
}

Matrix2c operator*(const Matrix2c& a, const Matrix2c& b) {
    Matrix2c c;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return c;
}

Matrix2c operator+(const Matrix2c& a, const Matrix2c& b) {
    Matrix2c c;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

Matrix2c operator-(const Matrix2c& a, const Matrix2c& b) { return a + cd(-1.0) * b; }

Matrix2c operator*(cd s, const Matrix2c& a) {
    Matrix2c c;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c(i, j) = s * a(i, j);
    return c;
}

Matrix2c conj(const Matrix2c& a) {
    Matrix2c c;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c(i, j) = std::conj(a(i, j));
    return c;
}

Matrix2c outer_parametrix(const SzegoData& szego, cd z) {
    const cd a = szego.frame().a_quarter_root(z);
    return assemble_n(a, szego(z), szego.d_infinity());
}

Matrix2c outer_parametrix_boundary(const SzegoData& szego, double theta, ArcSide side) {
    const cd a = szego.frame().a_boundary(theta, side);
    return assemble_n(a, szego.boundary(theta, side), szego.d_infinity());
}

double endpoint_disc_radius(double alpha) { return std::min(std::sin(0.5 * alpha), std::sin(0.5 * kAlpha0)); }

Matrix2c first_correction_residue(const SzegoData& szego, int n) {
    require_n(n);
    const double alpha = szego.frame().alpha();
    const double d2 = szego.d_infinity() * szego.d_infinity();
    Matrix2c a;
    a(0, 0) = 1.0;
    a(0, 1) = -I * d2;
    a(1, 0) = -I / d2;
    a(1, 1) = -1.0;
    return (szego.frame().gamma() / (8.0 * n) * std::polar(1.0, 0.5 * alpha)) * a;
}

Matrix2c first_correction(const SzegoData& szego, int n, cd z) {
    require_outside_discs(szego, z);
    const double alpha = szego.frame().alpha();
    const Matrix2c a = first_correction_residue(szego, n);
    return (1.0 / (z - std::polar(1.0, alpha))) * a + (1.0 / (z - std::polar(1.0, -alpha))) * conj(a);
}

AsymptoticPrediction asympt_phi_general(const SzegoData& szego, int n, cd z) {
    require_n(n);
    require_outside_discs(szego, z);
    const ConformalFrame& fr = szego.frame();
    if (fr.distance_to_arc(z) < endpoint_disc_radius(fr.alpha()))
        throw InvalidArgument("asympt_phi_general: z too close to the arc");
    const double alpha = fr.alpha();
    const double g = fr.gamma();
    const cd ps = fr.psi(z);
    const cd a = fr.a_quarter_root(z);
    const cd ratio = szego.d_infinity() / szego(z);
    const cd phase = std::polar(1.0, n * std::arg(ps));
    const cd lead = 0.5 * (a + 1.0 / a);
    const cd corr = g / (8.0 * n) *
                    (a * std::polar(1.0, 0.5 * alpha) / (z - std::polar(1.0, alpha)) +
                     std::polar(1.0, -0.5 * alpha) / (a * (z - std::polar(1.0, -alpha))));
    AsymptoticPrediction p;
    p.log_scale = n * (std::log(g) + std::log(std::abs(ps)));
    p.value = phase * ratio * (lead + corr);
    p.leading = phase * ratio * lead;
    p.order = RemainderOrder::n_inv_squared;
    p.n = n;
    p.alpha = alpha;
    p.z = z;
    return p;
}

AsymptoticPrediction asympt_phi_matrix(const SzegoData& szego, int n, cd z) {
    require_n(n);
    const ConformalFrame& fr = szego.frame();
    if (fr.distance_to_arc(z) < endpoint_disc_radius(fr.alpha()))
        throw InvalidArgument("asympt_phi_matrix: z too close to the arc");
    const Matrix2c nn = outer_parametrix(szego, z);
    const Matrix2c r = Matrix2c::identity() + first_correction(szego, n, z);
    const cd ps = fr.psi(z);
    const cd phase = std::polar(1.0, n * std::arg(ps));
    AsymptoticPrediction p;
    p.log_scale = n * (std::log(fr.gamma()) + std::log(std::abs(ps)));
    p.value = phase * (r(0, 0) * nn(0, 0) + r(0, 1) * nn(1, 0));
    p.leading = phase * nn(0, 0);
    p.order = RemainderOrder::n_inv_squared;
    p.n = n;
    p.alpha = fr.alpha();
    p.z = z;
    return p;
}

AsymptoticPrediction asympt_chi(const SzegoData& szego, int n) {
    require_n(n);
    const double g = szego.frame().gamma();
    const double base = 1.0 / (szego(0.0).real() * szego.d_infinity());
    AsymptoticPrediction p;
    p.log_scale = (1.0 - 2.0 * n) * std::log(g);
    p.value = base * (1.0 + 1.0 / (4.0 * n));
    p.leading = base;
    p.order = RemainderOrder::n_inv_squared;
    p.n = n;
    p.alpha = szego.frame().alpha();
    return p;
}

AsymptoticPrediction asympt_chi_matrix(const SzegoData& szego, int n) {
    require_n(n);
    const double g = szego.frame().gamma();
    const Matrix2c nn = outer_parametrix(szego, 0.0);
    const Matrix2c r = Matrix2c::identity() + first_correction(szego, n, 0.0);
    AsymptoticPrediction p;
    // γ^{−2n}·entry = γ^{−2n+1}·(entry/γ)
    p.log_scale = (1.0 - 2.0 * n) * std::log(g);
    p.value = (r(1, 0) * nn(0, 0) + r(1, 1) * nn(1, 0)) / g;
    p.leading = nn(1, 0) / g;
    p.order = RemainderOrder::n_inv_squared;
    p.n = n;
    p.alpha = szego.frame().alpha();
    return p;
}

}  // namespace arcgap
