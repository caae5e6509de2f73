#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace arcgap {

/// One table cell; monostate prints as null / empty.
using Cell = std::variant<std::monostate, double, long long, bool, std::string>;
using KeyValues = std::vector<std::pair<std::string, Cell>>;

/// Least-squares fit of y = c₀ + a/x + b/x² (the first `terms` basis functions).
struct FitResult {
    std::string model;
    double c0_hat = 0.0;
    std::vector<std::string> coefficient_names;
    std::vector<double> coefficients;  // nuisance terms after c₀
    std::vector<double> grid;
    std::vector<double> residuals;
    double rms_residual = 0.0;
};

FitResult fit_inverse_powers(const std::vector<double>& x, const std::vector<double>& y, int terms,
                             const std::string& variable);

struct ExperimentReport {
    std::string experiment;
    KeyValues params;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::optional<FitResult> fit;
    KeyValues meta;
    bool passed = true;
    std::vector<std::string> failures;

    void add_row(std::vector<Cell> row);
    void fail(std::string why);
    /// Column value of row i as double; throws if absent or not numeric.
    double number(std::size_t row, const std::string& column) const;
};

nlohmann::ordered_json to_json(const ExperimentReport& report);
std::string to_csv(const ExperimentReport& report);
std::string to_table(const ExperimentReport& report);

}  // namespace arcgap
