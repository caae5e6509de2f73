#include <doctest.h>

#include <cmath>

#include "arcgap/cli/experiments.hpp"
#include "arcgap/errors.hpp"
#include "arcgap/rh/constants.hpp"

using namespace arcgap;

TEST_CASE("inclusive_grid") {
    auto g = inclusive_grid(6.0, 12.0, 0.5);
    CHECK(g.size() == 13);
    CHECK(g.front() == 6.0);
    CHECK(g.back() == doctest::Approx(12.0));
    CHECK(inclusive_grid(1.0, 1.0, 0.3).size() == 1);
    CHECK(inclusive_grid(0.0, 1.0, 0.1).size() == 11);
    CHECK_THROWS_AS(inclusive_grid(1.0, 0.0, 0.1), InvalidArgument);
    CHECK_THROWS_AS(inclusive_grid(0.0, 1.0, 0.0), InvalidArgument);
}

TEST_CASE("fit_inverse_powers recovers an exact model") {
    std::vector<double> x{2, 3, 5, 8, 13}, y;
    for (double v : x) y.push_back(-0.4 + 0.3 / v - 1.5 / (v * v));
    auto f = fit_inverse_powers(x, y, 3, "s");
    CHECK(f.c0_hat == doctest::Approx(-0.4).epsilon(1e-12));
    CHECK(f.coefficients[0] == doctest::Approx(0.3).epsilon(1e-10));
    CHECK(f.coefficients[1] == doctest::Approx(-1.5).epsilon(1e-10));
    CHECK(f.rms_residual < 1e-13);
    CHECK(f.model == "c0 + a/s + b/s^2");
    CHECK(fit_inverse_powers(x, y, 2, "s").rms_residual > 1e-3);
    CHECK_THROWS_AS(fit_inverse_powers(x, y, 4, "s"), InvalidArgument);
    CHECK_THROWS_AS(fit_inverse_powers({1.0}, {1.0, 2.0}, 1, "s"), InvalidArgument);
}

TEST_CASE("report plumbing") {
    ExperimentReport r;
    r.experiment = "x";
    r.columns = {"a", "b"};
    r.add_row({1.5, Cell{}});
    CHECK_THROWS(r.add_row({1.0}));
    CHECK(to_csv(r) == "a,b\n1.5,\n");
    CHECK(r.number(0, "a") == 1.5);
    CHECK_THROWS_AS(r.number(0, "b"), InvalidArgument);
    auto j = to_json(r);
    CHECK(j["rows"][0]["b"].is_null());
    CHECK(j["meta"]["passed"] == true);
    r.fail("because");
    CHECK(!r.passed);
    CHECK(to_table(r).find("FAILED") != std::string::npos);
}

TEST_CASE("Fredholm c0 fit: accuracy, stability, model choice") {
    auto full = run_fit_c0_fredholm({});
    CHECK(full.passed);
    CHECK(std::fabs(full.fit->c0_hat - kDysonC0) <= 5e-3);
    FredholmFitOptions narrow;
    narrow.s_min = 8.0;
    auto n = run_fit_c0_fredholm(narrow);
    CHECK(std::fabs(n.fit->c0_hat - full.fit->c0_hat) < 2e-3);
    FredholmFitOptions two;
    two.terms = 2;
    CHECK(run_fit_c0_fredholm(two).fit->rms_residual > full.fit->rms_residual);
    for (std::size_t i = 0; i < full.rows.size(); ++i)
        CHECK(full.number(i, "residual") ==
              doctest::Approx(full.number(i, "log_delta") - full.number(i, "dyson_prediction")));
}

TEST_CASE("Widom c0 fit: accuracy, alpha independence, grid stability") {
    auto a5 = run_fit_c0_widom({});
    CHECK(std::fabs(a5.fit->c0_hat - kDysonC0) <= 1e-2);
    WidomFitOptions o4;
    o4.alpha = 0.4;
    CHECK(std::fabs(run_fit_c0_widom(o4).fit->c0_hat - a5.fit->c0_hat) < 1e-2);
    WidomFitOptions half;
    half.step = 100;
    CHECK(std::fabs(run_fit_c0_widom(half).fit->c0_hat - a5.fit->c0_hat) < 5e-3);
    CHECK_THROWS_AS(run_fit_c0_widom(WidomFitOptions{.alpha = 4.0}), InvalidArgument);
}

TEST_CASE("verify-thm2 gates out-of-regime rows") {
    Thm2Options o;
    o.alpha_grid = {1.0};
    o.rho_list = {2.0, 20.0};
    o.s = 1.0;  // varying arc with ρ ≈ 1
    o.n_list = {200};
    o.chi_n_list = {20};
    auto r = run_verify_thm2(o);
    CHECK(r.passed);
    // only the ρ = 20 point, three kinds, plus one chi row
    CHECK(r.rows.size() == 4);
}

TEST_CASE("crosscheck-tf degenerate s = 0") {
    TfOptions o;
    o.s = 0.0;
    o.n_list = {10, 20};
    auto r = run_crosscheck_tf(o);
    CHECK(r.passed);
    CHECK(r.number(0, "difference") == 0.0);
    TfOptions small;
    small.s = 1.0;
    small.n_list = {2000};
    CHECK(std::fabs(run_crosscheck_tf(small).number(0, "difference")) <= 1e-3);
}

TEST_CASE("gue report") {
    GueOptions o;
    o.s_list = {0.0, 1.0};
    o.n = 200;
    o.trials = 2000;
    o.seed = 3;
    auto r = run_gue(o);
    CHECK(r.number(0, "p_hat") == 1.0);
    CHECK(r.number(0, "z") == 0.0);
    CHECK(std::fabs(r.number(1, "z")) <= 4.0);
    CHECK(to_csv(r) == to_csv(run_gue(o)));
}
