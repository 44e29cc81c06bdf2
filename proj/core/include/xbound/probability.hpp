#pragma once

#include <cstdint>
#include <vector>

#include "xbound/graph.hpp"

namespace xbound {

/// One probability per vertex of a graph: a behavior {P_i}. Entries lie in
/// [0, 1]; there is no normalization across vertices, since the events need
/// not be jointly exhaustive.
struct ProbabilityAssignment {
    std::uint64_t graph_fingerprint = 0;
    std::vector<double> probabilities;

    static ProbabilityAssignment for_graph(const Graph& g, std::vector<double> p);
    static ProbabilityAssignment uniform(const Graph& g, double value);
    static ProbabilityAssignment indicator(const Graph& g, int vertex);

    int size() const { return static_cast<int>(probabilities.size()); }
    bool matches(const Graph& g) const;
};

}  // namespace xbound
