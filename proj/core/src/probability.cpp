#include "xbound/probability.hpp"

#include <stdexcept>
#include <string>

namespace xbound {

namespace {
constexpr double kRangeSlack = 1e-12;
}

ProbabilityAssignment ProbabilityAssignment::for_graph(const Graph& g, std::vector<double> p) {
    if (static_cast<int>(p.size()) != g.vertex_count())
        throw std::invalid_argument("ProbabilityAssignment: expected " +
                                    std::to_string(g.vertex_count()) + " entries, got " +
                                    std::to_string(p.size()));
    for (double v : p)
        if (!(v >= 0.0 && v <= 1.0 + kRangeSlack))
            throw std::invalid_argument("ProbabilityAssignment: entry " + std::to_string(v) +
                                        " outside [0, 1]");
    return {g.fingerprint(), std::move(p)};
}

ProbabilityAssignment ProbabilityAssignment::uniform(const Graph& g, double value) {
    return for_graph(g, std::vector<double>(static_cast<std::size_t>(g.vertex_count()), value));
}

ProbabilityAssignment ProbabilityAssignment::indicator(const Graph& g, int vertex) {
    if (vertex < 0 || vertex >= g.vertex_count())
        throw std::invalid_argument("ProbabilityAssignment::indicator: vertex out of range");
    std::vector<double> p(static_cast<std::size_t>(g.vertex_count()), 0.0);
    p[static_cast<std::size_t>(vertex)] = 1.0;
    return {g.fingerprint(), std::move(p)};
}

bool ProbabilityAssignment::matches(const Graph& g) const {
    return graph_fingerprint == g.fingerprint() && size() == g.vertex_count();
}

}  // namespace xbound
