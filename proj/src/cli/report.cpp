#include "arcgap/cli/report.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "arcgap/errors.hpp"

namespace arcgap {

namespace {

std::string format_number(double v, int digits) {
    if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string cell_text(const Cell& c, int digits) {
    return std::visit(
        [&](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>)
                return "";
            else if constexpr (std::is_same_v<T, double>)
                return format_number(v, digits);
            else if constexpr (std::is_same_v<T, long long>)
                return std::to_string(v);
            else if constexpr (std::is_same_v<T, bool>)
                return v ? "true" : "false";
            else
                return v;
        },
        c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
    return std::visit(
        [](const auto& v) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>)
                return nullptr;
            else if constexpr (std::is_same_v<T, double>)
                return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
            else
                return v;
        },
        c);
}

nlohmann::ordered_json kv_json(const KeyValues& kv) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, v] : kv) j[k] = cell_json(v);
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

FitResult fit_inverse_powers(const std::vector<double>& x, const std::vector<double>& y, int terms,
                             const std::string& variable) {
    if (terms < 1 || terms > 3) throw InvalidArgument("fit: terms must be 1, 2 or 3");
    if (x.size() != y.size()) throw InvalidArgument("fit: x and y differ in length");
    if (x.size() < static_cast<std::size_t>(terms)) throw InvalidArgument("fit: fewer points than coefficients");
    const int m = static_cast<int>(x.size());
    Eigen::MatrixXd a(m, terms);
    Eigen::VectorXd b(m);
    for (int i = 0; i < m; ++i) {
        for (int k = 0; k < terms; ++k) a(i, k) = std::pow(x[i], -k);
        b(i) = y[i];
    }
    Eigen::VectorXd c = a.colPivHouseholderQr().solve(b);
    Eigen::VectorXd r = b - a * c;

    FitResult f;
    static const char* names[] = {"c0", "a", "b"};
    f.model = "c0";
    if (terms > 1) f.model += " + a/" + variable;
    if (terms > 2) f.model += " + b/" + variable + "^2";
    f.c0_hat = c(0);
    for (int k = 1; k < terms; ++k) {
        f.coefficient_names.push_back(names[k]);
        f.coefficients.push_back(c(k));
    }
    f.grid = x;
    f.residuals.assign(r.data(), r.data() + m);
    f.rms_residual = std::sqrt(r.squaredNorm() / m);
    return f;
}

void ExperimentReport::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw Error("report row width does not match the column list");
    rows.push_back(std::move(row));
}

void ExperimentReport::fail(std::string why) {
    passed = false;
    failures.push_back(std::move(why));
}

double ExperimentReport::number(std::size_t row, const std::string& column) const {
    auto it = std::find(columns.begin(), columns.end(), column);
    if (it == columns.end()) throw InvalidArgument("no column " + column);
    const Cell& c = rows.at(row)[it - columns.begin()];
    if (auto d = std::get_if<double>(&c)) return *d;
    if (auto n = std::get_if<long long>(&c)) return static_cast<double>(*n);
    throw InvalidArgument("column " + column + " is not numeric");
}

nlohmann::ordered_json to_json(const ExperimentReport& report) {
    nlohmann::ordered_json j;
    j["experiment"] = report.experiment;
    j["params"] = kv_json(report.params);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        nlohmann::ordered_json o = nlohmann::ordered_json::object();
        for (std::size_t k = 0; k < row.size(); ++k) o[report.columns[k]] = cell_json(row[k]);
        rows.push_back(std::move(o));
    }
    j["rows"] = std::move(rows);
    if (report.fit) {
        const FitResult& f = *report.fit;
        nlohmann::ordered_json fj;
        fj["model"] = f.model;
        fj["c0_hat"] = f.c0_hat;
        nlohmann::ordered_json coef = nlohmann::ordered_json::object();
        for (std::size_t k = 0; k < f.coefficients.size(); ++k) coef[f.coefficient_names[k]] = f.coefficients[k];
        fj["coefficients"] = coef;
        fj["grid"] = f.grid;
        fj["residuals"] = f.residuals;
        fj["rms_residual"] = f.rms_residual;
        j["fit"] = fj;
    }
    nlohmann::ordered_json meta = kv_json(report.meta);
    meta["passed"] = report.passed;
    meta["failures"] = report.failures;
    j["meta"] = meta;
    return j;
}

std::string to_csv(const ExperimentReport& report) {
    std::ostringstream os;
    for (std::size_t k = 0; k < report.columns.size(); ++k) os << (k ? "," : "") << report.columns[k];
    os << '\n';
    for (const auto& row : report.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << csv_escape(cell_text(row[k], 17));
        os << '\n';
    }
    return os.str();
}

std::string to_table(const ExperimentReport& report) {
    constexpr int digits = 10;
    std::ostringstream os;
    os << report.experiment;
    for (const auto& [k, v] : report.params) os << "  " << k << "=" << cell_text(v, digits);
    os << "\n\n";
    std::vector<std::vector<std::string>> text;
    std::vector<std::size_t> width(report.columns.size());
    for (std::size_t k = 0; k < report.columns.size(); ++k) width[k] = report.columns[k].size();
    for (const auto& row : report.rows) {
        std::vector<std::string> t;
        for (std::size_t k = 0; k < row.size(); ++k) {
            t.push_back(cell_text(row[k], digits));
            width[k] = std::max(width[k], t.back().size());
        }
        text.push_back(std::move(t));
    }
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t k = 0; k < cells.size(); ++k) {
            os << (k ? "  " : "");
            os << std::string(width[k] - cells[k].size(), ' ') << cells[k];
        }
        os << '\n';
    };
    line(report.columns);
    for (const auto& t : text) line(t);
    if (report.fit) {
        const FitResult& f = *report.fit;
        os << "\nfit: " << f.model << "\n  c0_hat = " << format_number(f.c0_hat, digits) << '\n';
        for (std::size_t k = 0; k < f.coefficients.size(); ++k)
            os << "  " << f.coefficient_names[k] << " = " << format_number(f.coefficients[k], digits) << '\n';
        os << "  rms residual = " << format_number(f.rms_residual, digits) << '\n';
    }
    if (!report.meta.empty()) {
        os << '\n';
        for (const auto& [k, v] : report.meta) os << k << ": " << cell_text(v, digits) << '\n';
    }
    os << (report.passed ? "status: ok\n" : "status: FAILED\n");
    for (const auto& f : report.failures) os << "  " << f << '\n';
    return os.str();
}

}  // namespace arcgap
