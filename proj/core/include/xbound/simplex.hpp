#pragma once

#include <vector>

namespace xbound {

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct SimplexResult {
    LpStatus status = LpStatus::IterationLimit;
    double objective = 0.0;
    std::vector<double> solution;
    long iterations = 0;
};

/// Dense-tableau primal simplex for
///     maximize c.x  subject to  A x <= b,  x >= 0,  b >= 0.
/// Entering rule is Dantzig (largest reduced cost); after a long degenerate
/// stretch it switches to Bland's rule, which cannot cycle. Rows of A are
/// given densely, one vector of length n per constraint.
SimplexResult simplex_maximize(const std::vector<double>& objective,
                               const std::vector<std::vector<double>>& rows,
                               const std::vector<double>& rhs);

}  // namespace xbound
