#pragma once

#include <vector>

namespace xbound {

/// Real symmetric matrix; the lower triangle is stored once, so symmetry is
/// exact by construction.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(int order);

    static SymmetricMatrix from_full(const std::vector<double>& full, int order);

    int order() const { return order_; }

    double at(int i, int j) const {
        return i >= j ? packed_[index(i, j)] : packed_[index(j, i)];
    }
    void set(int i, int j, double value) {
        packed_[i >= j ? index(i, j) : index(j, i)] = value;
    }

    double trace() const;

    /// Row-major dense expansion.
    std::vector<double> to_full() const;

private:
    static std::size_t index(int i, int j) {
        return static_cast<std::size_t>(i) * (i + 1) / 2 + static_cast<std::size_t>(j);
    }

    int order_;
    std::vector<double> packed_;
};

/// Eigenvalues in descending order; eigenvector k occupies
/// vectors[k*order .. k*order+order-1].
struct Eigendecomposition {
    std::vector<double> values;
    std::vector<double> vectors;
    int order = 0;

    double vector_component(int k, int i) const {
        return vectors[static_cast<std::size_t>(k) * order + static_cast<std::size_t>(i)];
    }
};

/// Cyclic Jacobi rotation method. Reconstruction V diag(v) V^T matches the
/// input to ~1e-14 relative; throws ConvergenceError after 100 sweeps.
Eigendecomposition symmetric_eigendecomposition(const SymmetricMatrix& m);

/// Nearest PSD matrix in Frobenius norm: eigenvalue clipping at zero.
SymmetricMatrix psd_project(const SymmetricMatrix& m);

namespace detail {

/// In-place Jacobi on a row-major dense symmetric buffer. On return `a`
/// holds the eigenvalues on its diagonal and `v` the rotations accumulated
/// column-wise (v[i*n+k] = component i of eigenvector k).
void jacobi_eigensolve(std::vector<double>& a, std::vector<double>& v, int n);

}  // namespace detail

}  // namespace xbound
