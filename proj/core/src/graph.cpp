#include "xbound/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "xbound/config.hpp"

namespace xbound {

namespace {

constexpr int kIsomorphismGuard = 16;
constexpr int kVertexTransitivityGuard = 12;
constexpr int kOrProductCap = 4096;

}  // namespace

Graph::Graph(int vertex_count)
    : n_(vertex_count), words_((vertex_count + 63) / 64) {
    if (vertex_count < 1) throw std::invalid_argument("Graph: vertex_count must be >= 1");
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::add_edge_unchecked(int i, int j) {
    bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
    bits_[static_cast<std::size_t>(j) * words_ + (i >> 6)] |= std::uint64_t{1} << (i & 63);
}

int Graph::degree(int i) const {
    int d = 0;
    for (auto w : row(i)) d += std::popcount(w);
    return d;
}

long Graph::edge_count() const {
    long twice = 0;
    for (int i = 0; i < n_; ++i) twice += degree(i);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (adjacent(i, j)) out.emplace_back(i, j);
    return out;
}

std::uint64_t Graph::fingerprint() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xff;
            h *= 0x100000001b3ull;
        }
    };
    mix(static_cast<std::uint64_t>(n_));
    for (auto w : bits_) mix(w);
    return h;
}

std::string Graph::fingerprint_hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fingerprint()));
    return buf;
}

bool VertexMap::is_permutation(const std::vector<int>& candidate) {
    std::vector<bool> seen(candidate.size(), false);
    for (int v : candidate) {
        if (v < 0 || v >= static_cast<int>(candidate.size()) || seen[static_cast<std::size_t>(v)])
            return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

Graph graph_from_edges(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 1) throw std::invalid_argument("graph_from_edges: n must be >= 1");
    Graph g(n);
    for (auto [i, j] : edges) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw std::invalid_argument("graph_from_edges: vertex index out of range");
        if (i == j) throw std::invalid_argument("graph_from_edges: self-loop pair");
        g.add_edge_unchecked(i, j);
    }
    return g;
}

Graph graph_from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return graph_from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    Graph out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.adjacent(i, j)) out.add_edge_unchecked(i, j);
    out.vt_hint_ = g.vertex_transitive_hint();  // Aut(G) = Aut(complement(G))
    return out;
}

Graph or_product(const Graph& g, const Graph& h) {
    long product = static_cast<long>(g.vertex_count()) * h.vertex_count();
    long cap = size_guard(kOrProductCap);
    if (product > cap)
        throw SizeGuardError("or_product: " + std::to_string(product) + " vertices exceeds cap " +
                             std::to_string(cap) + " (set XBOUND_MAX_N to raise)");
    int nh = h.vertex_count();
    Graph out(static_cast<int>(product));
    for (int a = 0; a < static_cast<int>(product); ++a) {
        int i = a / nh, j = a % nh;
        for (int b = a + 1; b < static_cast<int>(product); ++b) {
            int k = b / nh, l = b % nh;
            if (g.adjacent(i, k) || h.adjacent(j, l)) out.add_edge_unchecked(a, b);
        }
    }
    out.vt_hint_ = g.vertex_transitive_hint() && h.vertex_transitive_hint();
    return out;
}

Graph circulant(int n, const std::vector<int>& connections) {
    if (n < 1) throw std::invalid_argument("circulant: n must be >= 1");
    for (int c : connections)
        if (c < 1 || c > n / 2)
            throw std::invalid_argument("circulant: connection " + std::to_string(c) +
                                        " outside [1, " + std::to_string(n / 2) + "]");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int d = std::min(j - i, n - (j - i));
            if (std::find(connections.begin(), connections.end(), d) != connections.end())
                g.add_edge_unchecked(i, j);
        }
    g.vt_hint_ = true;  // rotation is always an automorphism
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge_unchecked(i, j);
    g.vt_hint_ = true;
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge_unchecked(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
    return circulant(n, {1});
}

namespace {

// Sorted multiset of neighbor degrees, the second-level isomorphism prune.
std::vector<int> neighbor_degree_profile(const Graph& g, int v) {
    std::vector<int> profile;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (g.adjacent(v, u)) profile.push_back(g.degree(u));
    std::sort(profile.begin(), profile.end());
    return profile;
}

// Backtracking isomorphism search with optional pinned first assignment.
// Candidate order is by increasing target index, so results are deterministic.
std::optional<VertexMap> isomorphism_search(const Graph& g, const Graph& h,
                                            int pin_source, int pin_target) {
    int n = g.vertex_count();
    if (h.vertex_count() != n || g.edge_count() != h.edge_count()) return std::nullopt;

    std::vector<std::vector<int>> candidates(static_cast<std::size_t>(n));
    {
        std::vector<std::vector<int>> profile_h(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) profile_h[static_cast<std::size_t>(j)] = neighbor_degree_profile(h, j);
        for (int i = 0; i < n; ++i) {
            auto profile_g = neighbor_degree_profile(g, i);
            for (int j = 0; j < n; ++j)
                if (g.degree(i) == h.degree(j) && profile_g == profile_h[static_cast<std::size_t>(j)])
                    candidates[static_cast<std::size_t>(i)].push_back(j);
            if (candidates[static_cast<std::size_t>(i)].empty()) return std::nullopt;
        }
    }

    std::vector<int> mapping(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);

    auto consistent = [&](int i, int j) {
        for (int k = 0; k < i; ++k)
            if (g.adjacent(i, k) != h.adjacent(j, mapping[static_cast<std::size_t>(k)])) return false;
        return true;
    };

    // Iterative backtracking over vertex index order.
    std::vector<std::size_t> cursor(static_cast<std::size_t>(n), 0);
    int depth = 0;
    while (depth >= 0) {
        if (depth == n) return VertexMap{mapping};
        bool advanced = false;
        auto& cands = candidates[static_cast<std::size_t>(depth)];
        for (std::size_t& c = cursor[static_cast<std::size_t>(depth)]; c < cands.size(); ++c) {
            int j = cands[c];
            if (used[static_cast<std::size_t>(j)]) continue;
            if (depth == pin_source && j != pin_target) continue;
            if (!consistent(depth, j)) continue;
            mapping[static_cast<std::size_t>(depth)] = j;
            used[static_cast<std::size_t>(j)] = true;
            ++c;
            ++depth;
            advanced = true;
            break;
        }
        if (!advanced) {
            cursor[static_cast<std::size_t>(depth)] = 0;
            --depth;
            if (depth >= 0) {
                int j = mapping[static_cast<std::size_t>(depth)];
                used[static_cast<std::size_t>(j)] = false;
                mapping[static_cast<std::size_t>(depth)] = -1;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<VertexMap> find_isomorphism(const Graph& g, const Graph& h) {
    check_size_guard(g.vertex_count(), kIsomorphismGuard, "find_isomorphism");
    check_size_guard(h.vertex_count(), kIsomorphismGuard, "find_isomorphism");
    return isomorphism_search(g, h, -1, -1);
}

bool is_vertex_transitive(const Graph& g) {
    if (g.vertex_transitive_hint()) return true;
    check_size_guard(g.vertex_count(), kVertexTransitivityGuard, "is_vertex_transitive");
    for (int v = 1; v < g.vertex_count(); ++v)
        if (!isomorphism_search(g, g, 0, v)) return false;
    return true;
}

}  // namespace xbound
