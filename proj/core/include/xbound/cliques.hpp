#pragma once

#include <cstdint>
#include <vector>

#include "xbound/graph.hpp"
#include "xbound/probability.hpp"

namespace xbound {

/// Complete enumeration of the maximal cliques of a graph, in lexicographic
/// order of their sorted member lists.
struct CliqueSet {
    std::vector<std::vector<int>> cliques;
    std::uint64_t source_graph_fingerprint = 0;

    int size() const { return static_cast<int>(cliques.size()); }
};

/// Bron-Kerbosch with Tomita pivoting (pivot maximizes |P ∩ N(u)|, ties to
/// the smallest index). Guarded at n <= 256 by default.
CliqueSet maximal_cliques(const Graph& g);

/// Maximal cliques whose probability sum exceeds 1 + 1e-7. An empty report
/// means the assignment satisfies every pairwise-exclusivity constraint.
struct CliqueViolationReport {
    struct Entry {
        std::vector<int> clique;
        double sum = 0.0;
    };
    std::vector<Entry> violations;

    bool admissible() const { return violations.empty(); }
};

CliqueViolationReport check_clique_constraints(const Graph& g, const ProbabilityAssignment& p);

}  // namespace xbound
