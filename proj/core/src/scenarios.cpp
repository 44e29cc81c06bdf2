#include "xbound/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace xbound {

Scenario kcbs() {
    Scenario s{"kcbs", cycle_graph(5), {}};
    const double root5 = std::sqrt(5.0);
    s.expected = {
        {"alpha", {2.0, "largest pairwise non-adjacent set in a pentagon"}},
        {"theta", {root5, "sqrt(5): uniform 1/sqrt(5) saturates the self-complement constraint sum p^2 <= 1"}},
        {"alpha_star", {2.5, "uniform 1/2 meets all five edge constraints; summing them forces <= 5/2"}},
        {"ep_bound", {root5, "dual witness with every overlap 1/sqrt(5)"}},
        {"two_copy", {root5, "sqrt of the packing LP over the 25-vertex OR square"}},
    };
    return s;
}

Scenario chsh() {
    Scenario s{"chsh", complement(circulant(8, {1, 2})), {}};
    const double tsirelson = 2.0 + std::sqrt(2.0);
    s.expected = {
        {"alpha", {3.0, "largest clique of Ci8(1,2) has three vertices"}},
        {"theta", {tsirelson, "Tsirelson bound 2+sqrt(2) = 8/(8-4*sqrt(2))"}},
        {"alpha_star", {4.0, "triangle-free and 3-regular: uniform 1/2 on 8 vertices"}},
        {"ep_bound", {tsirelson, "dual witness with every overlap 1/(2+sqrt(2))"}},
        {"two_copy", {8.0 / std::sqrt(5.0), "sqrt of the packing LP over the 64-vertex OR square (64/5)"}},
    };
    return s;
}

Scenario complete_scenario(int n) {
    if (n < 1) throw std::invalid_argument("complete_scenario: n must be >= 1");
    Scenario s{"complete:" + std::to_string(n), complete_graph(n), {}};
    s.expected = {
        {"alpha", {1.0, "all events pairwise exclusive"}},
        {"theta", {1.0, "theta of a complete graph is 1"}},
        {"alpha_star", {1.0, "the single clique constraint caps the total at 1"}},
    };
    return s;
}

Scenario odd_cycle(int n) {
    if (n < 5 || n % 2 == 0)
        throw std::invalid_argument("odd_cycle: n must be odd and >= 5");
    Scenario s{"cycle:" + std::to_string(n), cycle_graph(n), {}};
    const double c = std::cos(std::numbers::pi / n);
    s.expected = {
        {"alpha", {(n - 1) / 2.0, "alternate vertices around the cycle"}},
        {"theta", {n * c / (1.0 + c), "closed form n cos(pi/n)/(1+cos(pi/n)) for odd cycles"}},
        {"alpha_star", {n / 2.0, "uniform 1/2 on the edge-constraint LP"}},
    };
    return s;
}

std::optional<Scenario> scenario_by_name(const std::string& name) {
    try {
        if (name == "kcbs") return kcbs();
        if (name == "chsh") return chsh();
        if (name.rfind("complete:", 0) == 0)
            return complete_scenario(std::stoi(name.substr(9)));
        if (name.rfind("cycle:", 0) == 0) return odd_cycle(std::stoi(name.substr(6)));
    } catch (const std::exception&) {
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace xbound
