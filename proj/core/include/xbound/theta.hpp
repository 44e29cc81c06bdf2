#pragma once

#include <cmath>
#include <vector>

#include "xbound/graph.hpp"
#include "xbound/linalg.hpp"

namespace xbound {

struct ThetaOptions {
    double residual_tol = 1e-9;   // Frobenius norm of primal/dual residuals
    double gap_tol = 1e-7;        // |primal_value - dual_value|
    long max_iterations = 200000;
    double rho = 1.0;             // initial ADMM penalty
};

/// Record of one Lovasz-theta SDP solve. primal_value is the objective of
/// the affine-feasible iterate (trace one, zero on edges, PSD to within the
/// residual tolerance); dual_value is lambda_max of the certificate matrix
/// A, a true upper bound on theta for any A that matches sqrt(w_i w_j) on
/// non-edges and the diagonal. The reported theta is their midpoint.
struct SdpSolution {
    SymmetricMatrix primal_matrix;  // X
    SymmetricMatrix dual_matrix;    // A
    double primal_value = 0.0;
    double dual_value = 0.0;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    double gap = 0.0;  // dual_value - primal_value
    long iterations = 0;
    bool converged = false;

    double theta() const { return 0.5 * (primal_value + dual_value); }
    double uncertainty() const { return 0.5 * std::abs(gap); }
};

/// theta(G) (or weighted theta(G, w)) as the SDP
///     maximize <W, X>  s.t.  trace(X) = 1, X_ij = 0 on edges, X PSD,
/// with W_ij = sqrt(w_i w_j) (all ones when unweighted). ADMM operator
/// splitting: the affine projection is closed-form because the trace and
/// edge constraints are mutually orthogonal; the PSD projection clips
/// eigenvalues; the penalty rescales when the residual ratio exceeds 10.
/// Non-convergence within the iteration cap returns converged = false with
/// residuals attached rather than throwing.
SdpSolution lovasz_theta(const Graph& g, const std::vector<double>& weights = {},
                         const ThetaOptions& options = {});

}  // namespace xbound
