#include "xbound/independence.hpp"

#include <algorithm>

#include "bitset.hpp"
#include "xbound/config.hpp"

namespace xbound {

namespace {

constexpr int kIndependenceGuard = 64;

// Maximum clique by branch-and-bound. Candidates are greedily colored in
// index order; |R| + colors(P) bounds every extension of R through P, and
// vertices are expanded in descending color so the bound prunes early.
struct MaxCliqueSolver {
    const Graph& g;
    std::vector<int> best;
    std::vector<int> current;

    void expand(const detail::VertexSet& p) {
        std::vector<int> order, color;
        color_sort(p, order, color);
        for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
            if (static_cast<int>(current.size()) + color[static_cast<std::size_t>(idx)] <=
                static_cast<int>(best.size()))
                return;
            int v = order[static_cast<std::size_t>(idx)];
            current.push_back(v);
            detail::VertexSet next(static_cast<int>(p.words.size()));
            for (std::size_t k = 0; k < p.words.size(); ++k)
                next.words[k] = p.words[k] & g.row(v)[k];
            // Restrict to candidates not yet expanded at this level.
            for (int later = idx; later < static_cast<int>(order.size()); ++later)
                next.reset(order[static_cast<std::size_t>(later)]);
            if (next.empty()) {
                if (current.size() > best.size()) best = current;
            } else {
                expand(next);
            }
            current.pop_back();
        }
    }

    // Greedy sequential coloring; emits candidates ordered by color class.
    void color_sort(const detail::VertexSet& p, std::vector<int>& order,
                    std::vector<int>& color) const {
        detail::VertexSet remaining = p;
        int color_class = 0;
        while (!remaining.empty()) {
            ++color_class;
            detail::VertexSet eligible = remaining;
            while (!eligible.empty()) {
                int v = -1;
                for (std::size_t k = 0; k < eligible.words.size() && v < 0; ++k)
                    if (eligible.words[k])
                        v = static_cast<int>(k * 64) + std::countr_zero(eligible.words[k]);
                order.push_back(v);
                color.push_back(color_class);
                remaining.reset(v);
                eligible.reset(v);
                for (std::size_t k = 0; k < eligible.words.size(); ++k)
                    eligible.words[k] &= ~g.row(v)[k];
            }
        }
    }
};

}  // namespace

IndependenceResult independence_number(const Graph& g) {
    check_size_guard(g.vertex_count(), kIndependenceGuard, "independence_number");

    Graph conflict = complement(g);  // independent sets of g are cliques here
    MaxCliqueSolver solver{conflict, {}, {}};

    detail::VertexSet all(conflict.words());
    for (int v = 0; v < conflict.vertex_count(); ++v) all.set(v);
    solver.expand(all);

    std::sort(solver.best.begin(), solver.best.end());
    return {static_cast<int>(solver.best.size()), solver.best};
}

}  // namespace xbound
