#include "xbound/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "xbound/errors.hpp"

namespace xbound {

SymmetricMatrix::SymmetricMatrix(int order) : order_(order) {
    if (order < 1) throw std::invalid_argument("SymmetricMatrix: order must be >= 1");
    packed_.assign(static_cast<std::size_t>(order) * (order + 1) / 2, 0.0);
}

SymmetricMatrix SymmetricMatrix::from_full(const std::vector<double>& full, int order) {
    if (static_cast<int>(full.size()) != order * order)
        throw std::invalid_argument("SymmetricMatrix::from_full: size mismatch");
    SymmetricMatrix m(order);
    for (int i = 0; i < order; ++i)
        for (int j = 0; j <= i; ++j)
            m.packed_[index(i, j)] = 0.5 * (full[static_cast<std::size_t>(i) * order + j] +
                                            full[static_cast<std::size_t>(j) * order + i]);
    return m;
}

double SymmetricMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < order_; ++i) t += packed_[index(i, i)];
    return t;
}

std::vector<double> SymmetricMatrix::to_full() const {
    std::vector<double> full(static_cast<std::size_t>(order_) * order_);
    for (int i = 0; i < order_; ++i)
        for (int j = 0; j < order_; ++j)
            full[static_cast<std::size_t>(i) * order_ + j] = at(i, j);
    return full;
}

namespace detail {

void jacobi_eigensolve(std::vector<double>& a, std::vector<double>& v, int n) {
    v.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;
    if (n == 1) return;

    auto off_norm = [&]() {
        double s = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double x = a[static_cast<std::size_t>(p) * n + q];
                s += x * x;
            }
        return std::sqrt(2.0 * s);
    };
    double scale = 0.0;
    for (double x : a) scale = std::max(scale, std::abs(x));
    const double stop = std::max(scale, 1.0) * 1e-15 * n;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = off_norm();
        if (off <= stop) return;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a[static_cast<std::size_t>(p) * n + q];
                if (std::abs(apq) <= 1e-300) continue;
                double app = a[static_cast<std::size_t>(p) * n + p];
                double aqq = a[static_cast<std::size_t>(q) * n + q];
                double theta = (aqq - app) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);

                a[static_cast<std::size_t>(p) * n + p] = app - t * apq;
                a[static_cast<std::size_t>(q) * n + q] = aqq + t * apq;
                a[static_cast<std::size_t>(p) * n + q] = 0.0;
                a[static_cast<std::size_t>(q) * n + p] = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        double arp = a[static_cast<std::size_t>(r) * n + p];
                        double arq = a[static_cast<std::size_t>(r) * n + q];
                        a[static_cast<std::size_t>(r) * n + p] = arp - s * (arq + tau * arp);
                        a[static_cast<std::size_t>(p) * n + r] = a[static_cast<std::size_t>(r) * n + p];
                        a[static_cast<std::size_t>(r) * n + q] = arq + s * (arp - tau * arq);
                        a[static_cast<std::size_t>(q) * n + r] = a[static_cast<std::size_t>(r) * n + q];
                    }
                    double vrp = v[static_cast<std::size_t>(r) * n + p];
                    double vrq = v[static_cast<std::size_t>(r) * n + q];
                    v[static_cast<std::size_t>(r) * n + p] = vrp - s * (vrq + tau * vrp);
                    v[static_cast<std::size_t>(r) * n + q] = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }
    throw ConvergenceError("jacobi_eigensolve: no convergence within 100 sweeps");
}

}  // namespace detail

Eigendecomposition symmetric_eigendecomposition(const SymmetricMatrix& m) {
    const int n = m.order();
    std::vector<double> a = m.to_full();
    std::vector<double> v;
    detail::jacobi_eigensolve(a, v, n);

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return a[static_cast<std::size_t>(x) * n + x] > a[static_cast<std::size_t>(y) * n + y];
    });

    Eigendecomposition e;
    e.order = n;
    e.values.resize(static_cast<std::size_t>(n));
    e.vectors.resize(static_cast<std::size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
        int src = order[static_cast<std::size_t>(k)];
        e.values[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(src) * n + src];
        for (int i = 0; i < n; ++i)
            e.vectors[static_cast<std::size_t>(k) * n + i] = v[static_cast<std::size_t>(i) * n + src];
    }
    return e;
}

SymmetricMatrix psd_project(const SymmetricMatrix& m) {
    const int n = m.order();
    Eigendecomposition e = symmetric_eigendecomposition(m);
    std::vector<double> full(static_cast<std::size_t>(n) * n, 0.0);
    for (int k = 0; k < n; ++k) {
        double lambda = e.values[static_cast<std::size_t>(k)];
        if (lambda <= 0.0) continue;
        const double* vk = e.vectors.data() + static_cast<std::size_t>(k) * n;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) {
                double x = lambda * vk[i] * vk[j];
                full[static_cast<std::size_t>(i) * n + j] += x;
                if (i != j) full[static_cast<std::size_t>(j) * n + i] += x;
            }
    }
    return SymmetricMatrix::from_full(full, n);
}

}  // namespace xbound
