#pragma once

#include <array>
#include <complex>

#include "arcgap/rh/conformal.hpp"
#include "arcgap/rh/prediction.hpp"
#include "arcgap/rh/szego.hpp"

namespace arcgap {

struct Matrix2c {
    std::array<std::array<std::complex<double>, 2>, 2> m{};

    static Matrix2c identity() { return {{{{1.0, 0.0}, {0.0, 1.0}}}}; }
    std::complex<double>& operator()(int i, int j) { return m[i][j]; }
    const std::complex<double>& operator()(int i, int j) const { return m[i][j]; }
    std::complex<double> det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    std::complex<double> trace() const { return m[0][0] + m[1][1]; }
    double max_abs() const;
};

Matrix2c operator*(const Matrix2c& a, const Matrix2c& b);
Matrix2c operator+(const Matrix2c& a, const Matrix2c& b);
Matrix2c operator-(const Matrix2c& a, const Matrix2c& b);
Matrix2c operator*(std::complex<double> s, const Matrix2c& a);
Matrix2c conj(const Matrix2c& a);

/// N(z) = ½ D∞^{σ₃} [[a+a⁻¹, −i(a−a⁻¹)], [i(a−a⁻¹), a+a⁻¹]] D(z)^{−σ₃}.
Matrix2c outer_parametrix(const SzegoData& szego, std::complex<double> z);
Matrix2c outer_parametrix_boundary(const SzegoData& szego, double theta, ArcSide side);

/// Radius of the endpoint discs outside which the outer branch of R₁ holds.
double endpoint_disc_radius(double alpha);

/// A⁽¹⁾ = (γ/8n) e^{iα/2} [[1, −iD∞²], [−iD∞⁻², −1]]; B⁽¹⁾ = conj(A⁽¹⁾).
Matrix2c first_correction_residue(const SzegoData& szego, int n);
/// R₁(z) = A⁽¹⁾/(z−e^{iα}) + B⁽¹⁾/(z−e^{−iα}).
Matrix2c first_correction(const SzegoData& szego, int n, std::complex<double> z);

/// φ_n(z)/χ_n to first order in 1/n, in closed form.
AsymptoticPrediction asympt_phi_general(const SzegoData& szego, int n, std::complex<double> z);
/// Same quantity read off the (1,1) entry of (I + R₁)·N.
AsymptoticPrediction asympt_phi_matrix(const SzegoData& szego, int n, std::complex<double> z);

/// χ²_{n−1} to first order in 1/n, in closed form.
AsymptoticPrediction asympt_chi(const SzegoData& szego, int n);
/// Same quantity from the (2,1) entry of (I + R₁(0))·N(0).
AsymptoticPrediction asympt_chi_matrix(const SzegoData& szego, int n);

}  // namespace arcgap
