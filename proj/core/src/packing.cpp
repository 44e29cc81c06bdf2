#include "xbound/packing.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "xbound/cliques.hpp"
#include "xbound/errors.hpp"

namespace xbound {

namespace {

constexpr double kViolationTol = 1e-10;

std::vector<double> clique_row(const std::vector<int>& clique, int n) {
    std::vector<double> row(static_cast<std::size_t>(n), 0.0);
    for (int v : clique) row[static_cast<std::size_t>(v)] = 1.0;
    return row;
}

}  // namespace

LpSolution fractional_packing_number(const Graph& g) {
    const int n = g.vertex_count();
    const CliqueSet cliques = maximal_cliques(g);

    // Initial working set: a clique cover, so the relaxation is bounded.
    std::vector<bool> active(cliques.cliques.size(), false);
    std::vector<std::size_t> working;
    {
        std::vector<bool> covered(static_cast<std::size_t>(n), false);
        for (std::size_t c = 0; c < cliques.cliques.size(); ++c) {
            bool covers_new = false;
            for (int v : cliques.cliques[c])
                if (!covered[static_cast<std::size_t>(v)]) {
                    covered[static_cast<std::size_t>(v)] = true;
                    covers_new = true;
                }
            if (covers_new) {
                active[c] = true;
                working.push_back(c);
            }
        }
    }

    const std::vector<double> ones(static_cast<std::size_t>(n), 1.0);
    LpSolution solution;

    while (true) {
        std::vector<std::vector<double>> rows;
        rows.reserve(working.size());
        std::vector<double> rhs(working.size(), 1.0);
        for (std::size_t c : working) rows.push_back(clique_row(cliques.cliques[c], n));

        SimplexResult lp = simplex_maximize(ones, rows, rhs);
        if (lp.status != LpStatus::Optimal) {
            solution.status = lp.status;
            solution.iterations += lp.iterations;
            throw ConvergenceError("fractional_packing_number: LP solve failed (status " +
                                   std::to_string(static_cast<int>(lp.status)) + ")");
        }
        solution.iterations += lp.iterations;

        // Separate: collect clique rows violated by the relaxation optimum.
        std::vector<std::pair<double, std::size_t>> violated;
        for (std::size_t c = 0; c < cliques.cliques.size(); ++c) {
            if (active[c]) continue;
            double sum = 0.0;
            for (int v : cliques.cliques[c]) sum += lp.solution[static_cast<std::size_t>(v)];
            if (sum > 1.0 + kViolationTol) violated.emplace_back(sum, c);
        }
        if (violated.empty()) {
            solution.weights = std::move(lp.solution);
            for (double& w : solution.weights)
                if (w < 0.0 && w > -1e-12) w = 0.0;
            solution.objective = 0.0;
            for (double w : solution.weights) solution.objective += w;
            solution.status = LpStatus::Optimal;
            return solution;
        }
        std::sort(violated.begin(), violated.end(), [](const auto& a, const auto& b) {
            return a.first > b.first || (a.first == b.first && a.second < b.second);
        });
        std::size_t budget = std::max<std::size_t>(64, static_cast<std::size_t>(2 * n));
        for (std::size_t k = 0; k < violated.size() && k < budget; ++k) {
            active[violated[k].second] = true;
            working.push_back(violated[k].second);
        }
    }
}

}  // namespace xbound
