#pragma once

#include <vector>

#include "xbound/graph.hpp"

namespace xbound {

struct IndependenceResult {
    int number = 0;
    std::vector<int> witness;  // one maximum independent set, sorted
};

/// Maximum independent set size with a witness. Branch-and-bound on the
/// complement's cliques with a greedy-coloring upper bound; guarded at
/// n <= 64 by default.
IndependenceResult independence_number(const Graph& g);

}  // namespace xbound
