// arcgap_cli: experiment runner for gap probabilities and Toeplitz determinants on an arc.

#include <CLI11.hpp>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>

#include "arcgap/cli/experiments.hpp"
#include "arcgap/errors.hpp"

using namespace arcgap;

namespace {

enum ExitCode { ok = 0, usage = 1, conditioning = 2, verification = 3 };

struct Global {
    bool json = false;
    bool csv = false;
    bool timing = false;
    std::string out;
    std::string precision = "extended";
    std::uint64_t seed = 20240607;
};

Precision parse_precision(const std::string& p) { return p == "standard" ? Precision::standard : Precision::extended; }

int emit(const Global& g, ExperimentReport report, double seconds) {
    if (g.timing) report.meta.emplace_back("wall_time_s", seconds);
    std::string body;
    if (g.json)
        body = to_json(report).dump(2) + "\n";
    else if (g.csv)
        body = to_csv(report);
    else
        body = to_table(report);
    if (g.out.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(g.out, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write " << g.out << "\n";
            return usage;
        }
        f << body;
    }
    if (!report.passed) {
        for (const auto& f : report.failures) std::cerr << "verification failed: " << f << "\n";
        return verification;
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gap probabilities, Toeplitz determinants on an arc, and their asymptotics"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read key=value options from a file (flags win)");

    Global g;
    app.add_flag("--json", g.json, "Emit JSON");
    app.add_flag("--csv", g.csv, "Emit CSV");
    app.add_option("--out", g.out, "Write output to a file instead of stdout");
    app.add_option("--precision", g.precision, "Working precision")
        ->check(CLI::IsMember({"standard", "extended"}));
    app.add_option("--seed", g.seed, "Random seed (gue)")->envname("ARCGAP_SEED");
    app.add_flag("--timing", g.timing, "Add wall time to the report metadata");

    std::function<ExperimentReport()> run;

    GapOptions gap;
    std::string order = "auto";
    auto* c_gap = app.add_subcommand("gap", "ln Delta(s) by Nystrom quadrature");
    c_gap->add_option("--s", gap.s, "Half-length of the interval")->required();
    c_gap->add_option("--order", order, "Quadrature nodes or 'auto'");
    c_gap->callback([&] {
        if (order != "auto") {
            std::size_t used = 0;
            try {
                gap.order = std::stoi(order, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != order.size()) throw CLI::ValidationError("--order", "expects an integer or 'auto'");
        }
        gap.precision = parse_precision(g.precision);
        run = [&] { return run_gap(gap); };
    });

    FredholmFitOptions ff;
    auto* c_ff = app.add_subcommand("fit-c0-fredholm", "Fit c0 from ln Delta(s) on an s-grid");
    c_ff->add_option("--s-min", ff.s_min);
    c_ff->add_option("--s-max", ff.s_max);
    c_ff->add_option("--step", ff.step);
    c_ff->add_option("--terms", ff.terms, "Basis functions: 1, 1/s, 1/s^2")->check(CLI::Range(1, 3));
    c_ff->callback([&] {
        ff.precision = parse_precision(g.precision);
        run = [&] { return run_fit_c0_fredholm(ff); };
    });

    WidomFitOptions fw;
    auto* c_fw = app.add_subcommand("fit-c0-widom", "Fit c0 from Toeplitz determinants at fixed alpha");
    c_fw->add_option("--alpha", fw.alpha);
    c_fw->add_option("--n-min", fw.n_min);
    c_fw->add_option("--n-max", fw.n_max);
    c_fw->add_option("--step", fw.step);
    c_fw->add_option("--terms", fw.terms, "Basis functions: 1, 1/n, 1/n^2")->check(CLI::Range(1, 3));
    c_fw->callback([&] {
        fw.precision = parse_precision(g.precision);
        run = [&] { return run_fit_c0_widom(fw); };
    });

    Thm2Options t2;
    auto* c_t2 = app.add_subcommand("verify-thm2", "Endpoint asymptotics of the arc polynomials, f = 1");
    c_t2->add_option("--s", t2.s, "Varying-arc rows use alpha = 2s/n");
    c_t2->add_option("--n-list", t2.n_list)->delimiter(',');
    c_t2->add_option("--alpha-grid", t2.alpha_grid)->delimiter(',');
    c_t2->add_option("--rho-list", t2.rho_list)->delimiter(',');
    c_t2->add_option("--bound", t2.bound);
    c_t2->add_option("--chi-alpha", t2.chi_alpha);
    c_t2->add_option("--chi-n-list", t2.chi_n_list)->delimiter(',');
    c_t2->add_option("--chi-bound", t2.chi_bound);
    c_t2->callback([&] {
        t2.precision = parse_precision(g.precision);
        run = [&] { return run_verify_thm2(t2); };
    });

    DeiftOptions df;
    auto* c_df = app.add_subcommand("verify-deift", "Derivative of ln det T_n in alpha, three ways");
    c_df->add_option("--alpha-grid", df.alpha_grid)->delimiter(',');
    c_df->add_option("--n-list", df.n_list)->delimiter(',');
    c_df->add_option("--fd-step", df.h, "Central-difference step in alpha");
    c_df->add_option("--tolerance", df.tolerance);
    c_df->add_option("--asymptotic-bound", df.asymptotic_bound);
    c_df->callback([&] {
        df.precision = parse_precision(g.precision);
        run = [&] { return run_verify_deift(df); };
    });

    TfOptions tf;
    auto* c_tf = app.add_subcommand("crosscheck-tf", "Toeplitz determinant at alpha = 2s/n against ln Delta(s)");
    c_tf->add_option("--s", tf.s);
    c_tf->add_option("--n-list", tf.n_list)->delimiter(',');
    c_tf->add_option("--final-tolerance", tf.final_tolerance);
    c_tf->callback([&] {
        tf.precision = parse_precision(g.precision);
        run = [&] { return run_crosscheck_tf(tf); };
    });

    GueOptions gu;
    auto* c_gu = app.add_subcommand("gue", "Monte Carlo gap probabilities of the GUE bulk");
    c_gu->add_option("--s-list", gu.s_list)->delimiter(',');
    c_gu->add_option("--N", gu.n);
    c_gu->add_option("--trials", gu.trials);
    c_gu->add_option("--max-abs-z", gu.max_abs_z);
    c_gu->add_option("--threads", gu.threads, "Worker threads (0: all cores); does not change results");
    c_gu->callback([&] {
        gu.seed = g.seed;
        run = [&] { return run_gue(gu); };
    });

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }
    if (g.json && g.csv) {
        std::cerr << "error: --json and --csv are exclusive\n";
        return usage;
    }

    try {
        const auto t0 = std::chrono::steady_clock::now();
        ExperimentReport report = run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return emit(g, std::move(report), secs);
    } catch (const ConditioningError& e) {
        std::cerr << "numerical conditioning: " << e.what() << "\n";
        return conditioning;
    } catch (const DomainError& e) {
        std::cerr << "numerical conditioning: " << e.what() << "\n";
        return conditioning;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
}
