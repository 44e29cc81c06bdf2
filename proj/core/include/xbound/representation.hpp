#pragma once

#include <cstdint>
#include <vector>

#include "xbound/graph.hpp"
#include "xbound/theta.hpp"

namespace xbound {

/// Unit vectors per vertex plus a handle vector, with adjacent vertices of
/// the referenced graph assigned orthogonal vectors. value is the handle
/// overlap sum  sum_i <handle, v_i>^2.
struct OrthogonalRepresentation {
    std::uint64_t graph_fingerprint = 0;
    int dimension = 0;
    std::vector<std::vector<double>> vectors;
    std::vector<double> handle;
    double value = 0.0;

    /// Per-vertex probabilities <handle, v_i>^2.
    std::vector<double> vertex_probabilities() const;

    /// Re-checks unit norms (1e-8), orthogonality on edges of g (1e-6),
    /// value recomputation (1e-9), and the fingerprint. Throws
    /// VerificationError on the first failure.
    void validate(const Graph& g) const;
};

/// Representation on g from the optimal X: factor X = B^T B, normalize the
/// columns (vertices with X_ii below 1e-9 receive a fresh basis vector in an
/// appended dimension), handle = normalized column sum. Requires an
/// unweighted converged solution; throws VerificationError if the extracted
/// value strays more than 1e-5 from the primal value.
OrthogonalRepresentation primal_representation(const Graph& g, const SdpSolution& sol);

/// Representation on complement(g) from the dual certificate: with
/// t = dual_value, factor Z = t*I - A = B^T B and take v_i = (c_i, 1)/sqrt(t),
/// handle = appended basis vector, so every <handle, v_i>^2 equals 1/t.
/// Requires an unweighted converged solution; throws ConvergenceError if Z
/// is not PSD within tolerance.
OrthogonalRepresentation dual_representation(const Graph& g, const SdpSolution& sol);

}  // namespace xbound
