#include "xbound/simplex.hpp"

#include <cmath>
#include <stdexcept>

namespace xbound {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kReducedCostTol = 1e-10;
constexpr long kDegenerateSwitch = 200;  // consecutive stalled pivots before Bland

}  // namespace

SimplexResult simplex_maximize(const std::vector<double>& objective,
                               const std::vector<std::vector<double>>& rows,
                               const std::vector<double>& rhs) {
    const int n = static_cast<int>(objective.size());
    const int m = static_cast<int>(rows.size());
    if (static_cast<int>(rhs.size()) != m)
        throw std::invalid_argument("simplex_maximize: rhs length mismatch");
    for (const auto& row : rows)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("simplex_maximize: row length mismatch");
    for (double b : rhs)
        if (b < 0.0) throw std::invalid_argument("simplex_maximize: requires b >= 0");

    const int total = n + m;  // structural + slack columns
    const int rhs_col = total;

    // Tableau: m constraint rows then the objective row (reduced costs).
    std::vector<std::vector<double>> t(static_cast<std::size_t>(m + 1),
                                       std::vector<double>(static_cast<std::size_t>(total + 1), 0.0));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) t[i][static_cast<std::size_t>(j)] = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        t[i][static_cast<std::size_t>(n + i)] = 1.0;
        t[i][static_cast<std::size_t>(rhs_col)] = rhs[static_cast<std::size_t>(i)];
    }
    for (int j = 0; j < n; ++j) t[m][static_cast<std::size_t>(j)] = objective[static_cast<std::size_t>(j)];

    std::vector<int> basis(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = n + i;

    SimplexResult result;
    const long iteration_cap = 50000 + 50L * (n + m);
    long stalled = 0;
    bool bland = false;

    while (true) {
        // Entering column.
        int enter = -1;
        if (bland) {
            for (int j = 0; j < total; ++j)
                if (t[m][static_cast<std::size_t>(j)] > kReducedCostTol) {
                    enter = j;
                    break;
                }
        } else {
            double best = kReducedCostTol;
            for (int j = 0; j < total; ++j)
                if (t[m][static_cast<std::size_t>(j)] > best) {
                    best = t[m][static_cast<std::size_t>(j)];
                    enter = j;
                }
        }
        if (enter < 0) {
            result.status = LpStatus::Optimal;
            break;
        }

        // Ratio test; ties resolved toward the smallest basis index (Bland-safe).
        int leave = -1;
        double best_ratio = 0.0;
        for (int i = 0; i < m; ++i) {
            double a = t[i][static_cast<std::size_t>(enter)];
            if (a > kPivotTol) {
                double ratio = t[i][static_cast<std::size_t>(rhs_col)] / a;
                if (leave < 0 || ratio < best_ratio - 1e-15 ||
                    (std::abs(ratio - best_ratio) <= 1e-15 &&
                     basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
        }
        if (leave < 0) {
            result.status = LpStatus::Unbounded;
            break;
        }

        if (best_ratio <= 1e-13) {
            if (++stalled >= kDegenerateSwitch) bland = true;
        } else {
            stalled = 0;
        }

        // Pivot on (leave, enter).
        double pivot = t[static_cast<std::size_t>(leave)][static_cast<std::size_t>(enter)];
        auto& pivot_row = t[static_cast<std::size_t>(leave)];
        for (double& v : pivot_row) v /= pivot;
        for (int i = 0; i <= m; ++i) {
            if (i == leave) continue;
            double factor = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
            if (factor == 0.0) continue;
            auto& row = t[static_cast<std::size_t>(i)];
            for (int j = 0; j <= total; ++j) row[static_cast<std::size_t>(j)] -= factor * pivot_row[static_cast<std::size_t>(j)];
        }
        basis[static_cast<std::size_t>(leave)] = enter;

        if (++result.iterations > iteration_cap) {
            result.status = LpStatus::IterationLimit;
            break;
        }
    }

    result.solution.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < m; ++i)
        if (basis[static_cast<std::size_t>(i)] < n)
            result.solution[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])] =
                t[static_cast<std::size_t>(i)][static_cast<std::size_t>(rhs_col)];
    result.objective = 0.0;
    for (int j = 0; j < n; ++j)
        result.objective += objective[static_cast<std::size_t>(j)] * result.solution[static_cast<std::size_t>(j)];
    return result;
}

}  // namespace xbound
