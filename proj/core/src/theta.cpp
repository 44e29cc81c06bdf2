#include "xbound/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "xbound/config.hpp"

namespace xbound {

namespace {

constexpr int kThetaGuard = 256;
constexpr int kCertificateStride = 250;  // periodic dual-certificate refresh

double frobenius_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        double d = a[k] - b[k];
        s += d * d;
    }
    return std::sqrt(s);
}

double inner(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

}  // namespace

SdpSolution lovasz_theta(const Graph& g, const std::vector<double>& weights,
                         const ThetaOptions& options) {
    const int n = g.vertex_count();
    check_size_guard(n, kThetaGuard, "lovasz_theta");

    if (!weights.empty()) {
        if (static_cast<int>(weights.size()) != n)
            throw std::invalid_argument("lovasz_theta: weights length mismatch");
        for (double w : weights)
            if (!(w >= 0.0) || !std::isfinite(w))
                throw std::invalid_argument("lovasz_theta: weights must be non-negative finite");
    }

    const std::size_t nn = static_cast<std::size_t>(n) * n;
    std::vector<double> w_vertex(static_cast<std::size_t>(n), 1.0);
    if (!weights.empty()) w_vertex = weights;

    std::vector<double> W(nn);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            W[static_cast<std::size_t>(i) * n + j] =
                std::sqrt(w_vertex[static_cast<std::size_t>(i)] * w_vertex[static_cast<std::size_t>(j)]);

    // Projection onto {M : trace(M) = 1, M_ij = 0 on edges}; the two
    // constraint families act on disjoint entries, so one pass is exact.
    auto project_affine = [&](std::vector<double>& m) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                std::size_t ij = static_cast<std::size_t>(i) * n + j;
                std::size_t ji = static_cast<std::size_t>(j) * n + i;
                if (g.adjacent(i, j)) {
                    m[ij] = 0.0;
                    m[ji] = 0.0;
                } else {
                    double avg = 0.5 * (m[ij] + m[ji]);
                    m[ij] = avg;
                    m[ji] = avg;
                }
            }
        double tr = 0.0;
        for (int i = 0; i < n; ++i) tr += m[static_cast<std::size_t>(i) * n + i];
        double shift = (1.0 - tr) / n;
        for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] += shift;
    };

    double rho = options.rho;
    std::vector<double> X(nn, 0.0), Z(nn, 0.0), U(nn, 0.0);
    for (int i = 0; i < n; ++i) {
        X[static_cast<std::size_t>(i) * n + i] = 1.0 / n;
        Z[static_cast<std::size_t>(i) * n + i] = 1.0 / n;
    }

    std::vector<double> Zprev(nn), work(nn), evecs;
    double best_dual = std::numeric_limits<double>::infinity();
    std::vector<double> best_A(nn, 0.0);

    // Dual certificate from the current multiplier rho*U: copy W, overwrite
    // edge entries, take lambda_max with one Rayleigh-quotient polish.
    auto refresh_dual = [&]() {
        std::vector<double> A = W;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && g.adjacent(i, j))
                    A[static_cast<std::size_t>(i) * n + j] =
                        rho * 0.5 * (U[static_cast<std::size_t>(i) * n + j] +
                                     U[static_cast<std::size_t>(j) * n + i]);
        work = A;
        detail::jacobi_eigensolve(work, evecs, n);
        int top = 0;
        for (int k = 1; k < n; ++k)
            if (work[static_cast<std::size_t>(k) * n + k] > work[static_cast<std::size_t>(top) * n + top])
                top = k;
        // Rayleigh quotient of the leading eigenvector against the exact A.
        double num = 0.0, den = 0.0;
        for (int i = 0; i < n; ++i) {
            double avi = 0.0;
            for (int j = 0; j < n; ++j)
                avi += A[static_cast<std::size_t>(i) * n + j] * evecs[static_cast<std::size_t>(j) * n + top];
            num += evecs[static_cast<std::size_t>(i) * n + top] * avi;
            den += evecs[static_cast<std::size_t>(i) * n + top] * evecs[static_cast<std::size_t>(i) * n + top];
        }
        double lambda_max = num / den;
        if (lambda_max < best_dual) {
            best_dual = lambda_max;
            best_A = std::move(A);
        }
    };

    SdpSolution sol{SymmetricMatrix(n), SymmetricMatrix(n)};
    double r_res = 0.0, s_res = 0.0;

    long iter = 0;
    for (iter = 1; iter <= options.max_iterations; ++iter) {
        // X-step: affine projection of Z - U + W/rho.
        for (std::size_t k = 0; k < nn; ++k) X[k] = Z[k] - U[k] + W[k] / rho;
        project_affine(X);

        // Z-step: PSD projection of X + U.
        Zprev = Z;
        for (std::size_t k = 0; k < nn; ++k) work[k] = X[k] + U[k];
        detail::jacobi_eigensolve(work, evecs, n);
        std::fill(Z.begin(), Z.end(), 0.0);
        for (int k = 0; k < n; ++k) {
            double lambda = work[static_cast<std::size_t>(k) * n + k];
            if (lambda <= 0.0) continue;
            const double* v = evecs.data();  // eigenvector k lives in column k
            for (int i = 0; i < n; ++i) {
                double scaled = lambda * v[static_cast<std::size_t>(i) * n + k];
                for (int j = 0; j <= i; ++j) {
                    double x = scaled * v[static_cast<std::size_t>(j) * n + k];
                    Z[static_cast<std::size_t>(i) * n + j] += x;
                    if (i != j) Z[static_cast<std::size_t>(j) * n + i] += x;
                }
            }
        }

        for (std::size_t k = 0; k < nn; ++k) U[k] += X[k] - Z[k];

        r_res = frobenius_distance(X, Z);
        s_res = rho * frobenius_distance(Z, Zprev);

        bool residuals_ok = r_res <= options.residual_tol && s_res <= options.residual_tol;
        if (residuals_ok || iter % kCertificateStride == 0) {
            refresh_dual();
            if (residuals_ok && std::abs(best_dual - inner(W, X)) <= options.gap_tol) {
                sol.converged = true;
                break;
            }
        }

        if (iter % 10 == 0) {
            if (r_res > 10.0 * s_res) {
                rho *= 2.0;
                for (auto& u : U) u *= 0.5;
            } else if (s_res > 10.0 * r_res) {
                rho *= 0.5;
                for (auto& u : U) u *= 2.0;
            }
        }
        // Degenerate optimal faces can hold the residual ratio below the
        // trigger above for tens of thousands of iterations; a slow, gentle
        // rebalance closes the final decade.
        if (iter % 2000 == 0 && s_res > 0.0 && (r_res > 3.0 * s_res || s_res > 3.0 * r_res)) {
            double factor = std::clamp(std::sqrt(r_res / s_res), 0.5, 2.0);
            rho *= factor;
            for (auto& u : U) u /= factor;
        }
    }
    if (!sol.converged) refresh_dual();

    sol.iterations = std::min(iter, options.max_iterations);
    sol.primal_matrix = SymmetricMatrix::from_full(X, n);
    sol.dual_matrix = SymmetricMatrix::from_full(best_A, n);
    sol.primal_value = inner(W, X);
    sol.dual_value = best_dual;
    sol.gap = sol.dual_value - sol.primal_value;
    sol.primal_residual = r_res;
    sol.dual_residual = s_res;
    return sol;
}

}  // namespace xbound
