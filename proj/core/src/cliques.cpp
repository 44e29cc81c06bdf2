#include "xbound/cliques.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "xbound/config.hpp"

namespace xbound {

namespace {

constexpr int kCliqueGuard = 256;
constexpr double kViolationThreshold = 1e-7;

// Dynamic bitset over n vertices, stored as 64-bit words.
struct VertexSet {
    std::vector<std::uint64_t> words;

    explicit VertexSet(int word_count) : words(static_cast<std::size_t>(word_count), 0) {}

    bool empty() const {
        for (auto w : words)
            if (w) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (auto w : words) c += std::popcount(w);
        return c;
    }
    bool test(int v) const { return (words[static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1u; }
    void set(int v) { words[static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) { words[static_cast<std::size_t>(v >> 6)] &= ~(std::uint64_t{1} << (v & 63)); }

    int intersection_count(std::span<const std::uint64_t> other) const {
        int c = 0;
        for (std::size_t k = 0; k < words.size(); ++k) c += std::popcount(words[k] & other[k]);
        return c;
    }
    VertexSet intersect(std::span<const std::uint64_t> other) const {
        VertexSet out(static_cast<int>(words.size()));
        for (std::size_t k = 0; k < words.size(); ++k) out.words[k] = words[k] & other[k];
        return out;
    }
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words.size(); ++k) {
            std::uint64_t w = words[k];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<int>(k * 64) + b);
                w &= w - 1;
            }
        }
    }
};

struct BronKerbosch {
    const Graph& g;
    std::vector<int> current;
    std::vector<std::vector<int>>& out;

    void expand(VertexSet p, VertexSet x) {
        if (p.empty() && x.empty()) {
            out.push_back(current);
            return;
        }
        // Tomita pivot: u in P ∪ X maximizing |P ∩ N(u)|, smallest index on ties.
        int pivot = -1, best = -1;
        VertexSet candidates(static_cast<int>(p.words.size()));
        for (std::size_t k = 0; k < p.words.size(); ++k)
            candidates.words[k] = p.words[k] | x.words[k];
        candidates.for_each([&](int u) {
            int score = p.intersection_count(g.row(u));
            if (score > best) {
                best = score;
                pivot = u;
            }
        });

        VertexSet ext(static_cast<int>(p.words.size()));
        for (std::size_t k = 0; k < p.words.size(); ++k)
            ext.words[k] = p.words[k] & ~g.row(pivot)[k];

        ext.for_each([&](int v) {
            current.push_back(v);
            expand(p.intersect(g.row(v)), x.intersect(g.row(v)));
            current.pop_back();
            p.reset(v);
            x.set(v);
        });
    }
};

}  // namespace

CliqueSet maximal_cliques(const Graph& g) {
    check_size_guard(g.vertex_count(), kCliqueGuard, "maximal_cliques");

    CliqueSet result;
    result.source_graph_fingerprint = g.fingerprint();

    VertexSet p(g.words()), x(g.words());
    for (int v = 0; v < g.vertex_count(); ++v) p.set(v);

    BronKerbosch bk{g, {}, result.cliques};
    bk.expand(std::move(p), std::move(x));

    for (auto& c : result.cliques) std::sort(c.begin(), c.end());
    std::sort(result.cliques.begin(), result.cliques.end());
    return result;
}

CliqueViolationReport check_clique_constraints(const Graph& g, const ProbabilityAssignment& p) {
    if (p.size() != g.vertex_count())
        throw std::invalid_argument("check_clique_constraints: assignment length " +
                                    std::to_string(p.size()) + " does not match vertex count " +
                                    std::to_string(g.vertex_count()));
    CliqueViolationReport report;
    for (const auto& clique : maximal_cliques(g).cliques) {
        double sum = 0.0;
        for (int v : clique) sum += p.probabilities[static_cast<std::size_t>(v)];
        if (sum > 1.0 + kViolationThreshold) report.violations.push_back({clique, sum});
    }
    return report;
}

}  // namespace xbound
