#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace xbound {

/// Simple undirected graph over vertices 0..n-1 with dense bitset adjacency.
/// Values are immutable after construction; no self-loops; adjacency is
/// symmetric by construction.
class Graph {
public:
    explicit Graph(int vertex_count);

    int vertex_count() const { return n_; }

    bool adjacent(int i, int j) const {
        return (bits_[static_cast<std::size_t>(i) * words_ + static_cast<std::size_t>(j >> 6)] >>
                (j & 63)) & 1u;
    }

    int degree(int i) const;
    long edge_count() const;

    /// Sorted (i < j) edge list.
    std::vector<std::pair<int, int>> edges() const;

    /// Adjacency row of vertex i as bitset words (n bits, little-endian words).
    std::span<const std::uint64_t> row(int i) const {
        return {bits_.data() + static_cast<std::size_t>(i) * words_, static_cast<std::size_t>(words_)};
    }
    int words() const { return words_; }

    /// FNV-1a over vertex count and adjacency words; stable across platforms.
    std::uint64_t fingerprint() const;
    std::string fingerprint_hex() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

    /// True when the construction guarantees vertex-transitivity (circulants,
    /// and complements / OR products of such graphs).
    bool vertex_transitive_hint() const { return vt_hint_; }

private:
    int n_;
    int words_;
    bool vt_hint_ = false;
    std::vector<std::uint64_t> bits_;

    void add_edge_unchecked(int i, int j);

    friend Graph graph_from_edges(int n, std::span<const std::pair<int, int>> edges);
    friend Graph complement(const Graph& g);
    friend Graph or_product(const Graph& g, const Graph& h);
    friend Graph circulant(int n, const std::vector<int>& connections);
    friend Graph complete_graph(int n);
    friend Graph path_graph(int n);
};

/// Bijection on vertex indices 0..n-1.
struct VertexMap {
    std::vector<int> permutation;

    int apply(int i) const { return permutation[static_cast<std::size_t>(i)]; }
    int size() const { return static_cast<int>(permutation.size()); }

    static bool is_permutation(const std::vector<int>& candidate);
};

/// Graph with exactly the given pairs adjacent (symmetrized, duplicates
/// collapsed). Throws std::invalid_argument on n = 0, out-of-range indices,
/// or self-loop pairs.
Graph graph_from_edges(int n, std::span<const std::pair<int, int>> edges);
Graph graph_from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

/// Same vertices, edges exactly where g has none.
Graph complement(const Graph& g);

/// Disjunctive (OR) product: vertex (i,j) has index i*n_h + j; (i,j)~(k,l)
/// iff i~k in g or j~l in h. Guarded by a product vertex cap (default 4096).
Graph or_product(const Graph& g, const Graph& h);

/// Circulant graph: i~j iff the cyclic distance min(|i-j|, n-|i-j|) is in
/// connections; each connection must lie in [1, n/2].
Graph circulant(int n, const std::vector<int>& connections);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

/// Permutation pi with adjacency_g(i,j) = adjacency_h(pi(i), pi(j)) for all
/// pairs, or nullopt. Backtracking with degree and neighbor-degree pruning;
/// guarded at n <= 16.
std::optional<VertexMap> find_isomorphism(const Graph& g, const Graph& h);

/// True iff every vertex is the image of vertex 0 under some automorphism.
/// Construction-tagged graphs answer without search; otherwise guarded at
/// n <= 12.
bool is_vertex_transitive(const Graph& g);

}  // namespace xbound
