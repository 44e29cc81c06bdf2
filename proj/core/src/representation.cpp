#include "xbound/representation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "xbound/errors.hpp"
#include "xbound/linalg.hpp"

namespace xbound {

namespace {

constexpr double kZeroColumnThreshold = 1e-9;
constexpr double kValueTol = 1e-5;
constexpr double kDualPsdTol = 1e-7;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

// Columns of B with X = B^T B, via eigendecomposition with negative
// eigenvalues clipped. Column i is (sqrt(l_k) V_ik)_k.
std::vector<std::vector<double>> gram_factor_columns(const SymmetricMatrix& x) {
    const int n = x.order();
    Eigendecomposition e = symmetric_eigendecomposition(x);
    std::vector<std::vector<double>> cols(static_cast<std::size_t>(n),
                                          std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int k = 0; k < n; ++k) {
        double lambda = e.values[static_cast<std::size_t>(k)];
        if (lambda <= 0.0) continue;
        double root = std::sqrt(lambda);
        for (int i = 0; i < n; ++i)
            cols[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                root * e.vector_component(k, i);
    }
    return cols;
}

void require_unweighted(const Graph& g, const SymmetricMatrix& a, const char* where) {
    const int n = g.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            if (i != j && g.adjacent(i, j)) continue;
            if (std::abs(a.at(i, j) - 1.0) > 1e-9)
                throw std::invalid_argument(std::string(where) +
                                            ": requires an unweighted solution (certificate entry " +
                                            std::to_string(a.at(i, j)) + " off a non-edge)");
        }
}

}  // namespace

std::vector<double> OrthogonalRepresentation::vertex_probabilities() const {
    std::vector<double> p;
    p.reserve(vectors.size());
    for (const auto& v : vectors) {
        double overlap = dot(handle, v);
        p.push_back(overlap * overlap);
    }
    return p;
}

void OrthogonalRepresentation::validate(const Graph& g) const {
    if (graph_fingerprint != g.fingerprint())
        throw VerificationError("representation: graph fingerprint mismatch", 0.0);
    if (static_cast<int>(vectors.size()) != g.vertex_count())
        throw VerificationError("representation: vector count mismatch", 0.0);

    auto check_unit = [](const std::vector<double>& v, const std::string& name) {
        double err = std::abs(std::sqrt(dot(v, v)) - 1.0);
        if (err > 1e-8)
            throw VerificationError("representation: " + name + " is not a unit vector", err);
    };
    check_unit(handle, "handle");
    for (std::size_t i = 0; i < vectors.size(); ++i)
        check_unit(vectors[i], "vector " + std::to_string(i));

    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j)
            if (g.adjacent(i, j)) {
                double overlap = std::abs(dot(vectors[static_cast<std::size_t>(i)],
                                              vectors[static_cast<std::size_t>(j)]));
                if (overlap > 1e-6)
                    throw VerificationError("representation: adjacent vertices " +
                                                std::to_string(i) + "," + std::to_string(j) +
                                                " not orthogonal",
                                            overlap);
            }

    double recomputed = 0.0;
    for (const auto& v : vectors) {
        double overlap = dot(handle, v);
        recomputed += overlap * overlap;
    }
    if (std::abs(recomputed - value) > 1e-9)
        throw VerificationError("representation: stored value does not recompute",
                                std::abs(recomputed - value));
}

OrthogonalRepresentation primal_representation(const Graph& g, const SdpSolution& sol) {
    if (!sol.converged)
        throw std::invalid_argument("primal_representation: solution did not converge");
    const int n = g.vertex_count();
    if (sol.primal_matrix.order() != n)
        throw std::invalid_argument("primal_representation: order mismatch");
    require_unweighted(g, sol.dual_matrix, "primal_representation");

    auto cols = gram_factor_columns(sol.primal_matrix);

    std::vector<int> appended;  // vertices with numerically zero diagonal
    for (int i = 0; i < n; ++i)
        if (sol.primal_matrix.at(i, i) <= kZeroColumnThreshold)
            appended.push_back(i);
    const int dim = n + static_cast<int>(appended.size());

    OrthogonalRepresentation rep;
    rep.graph_fingerprint = g.fingerprint();
    rep.dimension = dim;
    rep.vectors.assign(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(dim), 0.0));

    std::vector<double> column_sum(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            column_sum[static_cast<std::size_t>(k)] += cols[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];

    int next_fresh = n;
    for (int i = 0; i < n; ++i) {
        double xii = sol.primal_matrix.at(i, i);
        auto& v = rep.vectors[static_cast<std::size_t>(i)];
        if (xii > kZeroColumnThreshold) {
            double inv = 1.0 / std::sqrt(xii);
            for (int k = 0; k < n; ++k)
                v[static_cast<std::size_t>(k)] = inv * cols[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        } else {
            v[static_cast<std::size_t>(next_fresh++)] = 1.0;  // fresh orthogonal direction
        }
    }

    rep.handle.assign(static_cast<std::size_t>(dim), 0.0);
    double norm = std::sqrt(dot(column_sum, column_sum));
    if (norm <= 0.0)
        throw VerificationError("primal_representation: column sum vanished", norm);
    for (int k = 0; k < n; ++k) rep.handle[static_cast<std::size_t>(k)] = column_sum[static_cast<std::size_t>(k)] / norm;

    rep.value = 0.0;
    for (const auto& v : rep.vectors) {
        double overlap = dot(rep.handle, v);
        rep.value += overlap * overlap;
    }

    double deviation = std::abs(rep.value - sol.primal_value);
    if (deviation > kValueTol)
        throw VerificationError(
            "primal_representation: extracted value " + std::to_string(rep.value) +
                " deviates from the SDP value " + std::to_string(sol.primal_value),
            deviation);
    return rep;
}

OrthogonalRepresentation dual_representation(const Graph& g, const SdpSolution& sol) {
    if (!sol.converged)
        throw std::invalid_argument("dual_representation: solution did not converge");
    const int n = g.vertex_count();
    if (sol.dual_matrix.order() != n)
        throw std::invalid_argument("dual_representation: order mismatch");
    require_unweighted(g, sol.dual_matrix, "dual_representation");

    const double t = sol.dual_value;
    SymmetricMatrix z(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            z.set(i, j, (i == j ? t : 0.0) - sol.dual_matrix.at(i, j));

    Eigendecomposition e = symmetric_eigendecomposition(z);
    double min_eig = e.values.back();
    if (min_eig < -kDualPsdTol)
        throw ConvergenceError("dual_representation: t*I - A has eigenvalue " +
                               std::to_string(min_eig) + "; dual certificate infeasible at this precision");

    auto cols = gram_factor_columns(z);

    OrthogonalRepresentation rep;
    rep.graph_fingerprint = complement(g).fingerprint();
    rep.dimension = n + 1;
    rep.vectors.assign(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n + 1), 0.0));
    const double inv_root_t = 1.0 / std::sqrt(t);
    for (int i = 0; i < n; ++i) {
        auto& v = rep.vectors[static_cast<std::size_t>(i)];
        for (int k = 0; k < n; ++k)
            v[static_cast<std::size_t>(k)] = inv_root_t * cols[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        v[static_cast<std::size_t>(n)] = inv_root_t;
    }
    rep.handle.assign(static_cast<std::size_t>(n + 1), 0.0);
    rep.handle[static_cast<std::size_t>(n)] = 1.0;
    rep.value = n / t;
    return rep;
}

}  // namespace xbound
