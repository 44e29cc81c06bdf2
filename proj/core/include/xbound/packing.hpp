#pragma once

#include <vector>

#include "xbound/graph.hpp"
#include "xbound/simplex.hpp"

namespace xbound {

/// Result of the clique-constrained packing LP: the fractional packing
/// number alpha*(G) and an optimal vertex weighting.
struct LpSolution {
    double objective = 0.0;
    std::vector<double> weights;
    LpStatus status = LpStatus::IterationLimit;
    long iterations = 0;
};

/// alpha*(G): maximize sum(w) subject to w >= 0 and sum_{i in C} w_i <= 1
/// for every maximal clique C. Solved by the dense primal simplex inside a
/// lazy-constraint loop: large products have tens of thousands of maximal
/// cliques, of which only a handful are active at the optimum. The returned
/// weights satisfy every clique constraint to 1e-9.
LpSolution fractional_packing_number(const Graph& g);

}  // namespace xbound
