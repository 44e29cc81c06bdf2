#pragma once

#include <map>
#include <optional>
#include <string>

#include "xbound/graph.hpp"

namespace xbound {

/// Named correlation scenario: its exclusivity graph and the published
/// bound values it must reproduce, each with a one-line provenance note.
struct Scenario {
    struct Expected {
        double value = 0.0;
        std::string provenance;
    };

    std::string name;
    Graph graph;
    std::map<std::string, Expected> expected;  // keyed by bound name
};

/// Pentagon scenario (five events in a cycle of exclusivity). Classical
/// bound 2, quantum bound sqrt(5), pairwise-exclusivity LP bound 2.5.
Scenario kcbs();

/// Eight-event bipartite scenario: the complement of the circulant
/// Ci8(1,2). Classical bound 3, Tsirelson bound 2+sqrt(2), nonsignaling
/// bound 4.
Scenario chsh();

/// Complete graph on n events: every bound collapses to 1.
Scenario complete_scenario(int n);

/// Odd cycle C_n: alpha = (n-1)/2, theta = n cos(pi/n)/(1+cos(pi/n)),
/// alpha* = n/2. Rejects even or small n.
Scenario odd_cycle(int n);

/// Catalog lookup for the CLI names: "kcbs", "chsh", "complete:<n>",
/// "cycle:<n>".
std::optional<Scenario> scenario_by_name(const std::string& name);

}  // namespace xbound
