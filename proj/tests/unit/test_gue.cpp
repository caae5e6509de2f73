#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "arcgap/errors.hpp"
#include "arcgap/fredholm/fredholm.hpp"
#include "arcgap/gue/gue.hpp"
#include "arcgap/numerics/sturm.hpp"

using namespace arcgap;

TEST_CASE("sample_tridiagonal is deterministic and well formed") {
    auto a = sample_tridiagonal(60, 42, 3);
    auto b = sample_tridiagonal(60, 42, 3);
    CHECK(a.d == b.d);
    CHECK(a.e == b.e);
    CHECK(a.d.size() == 60);
    CHECK(a.e.size() == 59);
    for (double x : a.e) CHECK(x > 0.0);
    CHECK(sample_tridiagonal(60, 42, 4).d != a.d);
    CHECK(sample_tridiagonal(60, 43, 3).d != a.d);
    CHECK_THROWS_AS(sample_tridiagonal(1, 0), InvalidArgument);
}

TEST_CASE("sample moments") {
    const int n = 50, draws = 2000;
    double sum_d = 0.0;
    std::vector<double> sum_e2(n - 1, 0.0);
    for (int k = 0; k < draws; ++k) {
        auto s = sample_tridiagonal(n, 9, k);
        for (double x : s.d) sum_d += x;
        for (int i = 0; i < n - 1; ++i) sum_e2[i] += s.e[i] * s.e[i];
    }
    const double count = static_cast<double>(n) * draws;  // 10⁵ normal draws
    CHECK(std::fabs(sum_d / count) < 3.0 / std::sqrt(count));
    for (int i : {0, 10, 30, 48}) {
        const double dof = n - (i + 1);  // Gamma(N − i) has variance N − i
        CAPTURE(i);
        CHECK(std::fabs(sum_e2[i] / draws - dof) < 3.0 * std::sqrt(dof / draws));
    }
}

TEST_CASE("tridiagonal spectrum follows the semicircle scale") {
    auto s = sample_tridiagonal(400, 1, 0);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(400, 400);
    for (int i = 0; i < 400; ++i) h(i, i) = s.d[i];
    for (int i = 0; i < 399; ++i) h(i, i + 1) = h(i + 1, i) = s.e[i];
    Eigen::VectorXd lam = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(h).eigenvalues();
    CHECK(lam.maxCoeff() < 2.0 * std::sqrt(400.0) * 1.05);
    CHECK(lam.maxCoeff() > 2.0 * std::sqrt(400.0) * 0.95);
    // mean count in (−s/√N, s/√N) is 2s/π for a density-1/π window
    const double sw = 2.0, a = sw / std::sqrt(400.0);
    double total = 0.0;
    for (int k = 0; k < 400; ++k) {
        auto t = sample_tridiagonal(400, 8, k);
        total += static_cast<double>(sturm_count_below(t.d, t.e, a) - sturm_count_below(t.d, t.e, -a));
    }
    CHECK(std::fabs(total / 400 - 2.0 * sw / 3.141592653589793) < 0.1);
}

TEST_CASE("gap_probability") {
    auto g0 = gap_probability(200, 0.0, 1000, 5);
    CHECK(g0.p_hat == 1.0);
    CHECK(g0.std_error == 0.0);
    auto est = gap_probabilities(200, {0.5, 1.0, 2.0}, 4000, 5);
    CHECK(est[0].p_hat >= est[1].p_hat);
    CHECK(est[1].p_hat >= est[2].p_hat);
    CHECK(est[2].p_hat < est[1].p_hat);
    for (const auto& g : est) {
        CHECK(g.p_hat >= 0.0);
        CHECK(g.p_hat <= 1.0);
        CHECK(g.std_error >= 0.0);
        CHECK(g.trials == 4000);
    }
    // thread count does not change the result
    auto one = gap_probabilities(200, {1.0}, 2000, 77, 1);
    auto many = gap_probabilities(200, {1.0}, 2000, 77, 4);
    CHECK(one[0].hits == many[0].hits);
    CHECK(gap_probability(200, 1.0, 2000, 77).hits == one[0].hits);
    CHECK_THROWS_AS(gap_probability(100, 1.0, 1000, 1), InvalidArgument);
    CHECK_THROWS_AS(gap_probability(200, 3.5, 1000, 1), InvalidArgument);
    CHECK_THROWS_AS(gap_probability(200, 1.0, 999, 1), InvalidArgument);
}

TEST_CASE("gap_probability against the Fredholm determinant") {
    auto est = gap_probabilities(400, {0.5, 1.0}, 20000, 2024);
    for (const auto& g : est) {
        const double delta = std::exp(log_gap_determinant(g.s).log_delta);
        CAPTURE(g.s);
        CHECK(std::fabs(g.p_hat - delta) <= std::max(3.0 * g.std_error, 0.01));
    }
}
