#pragma once

#include "qcc/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qcc {

struct SvdFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A = U * diag(sigma) * V^T with sigma nonincreasing, U m x p, V n x p,
/// p = min(m, n). Factors have orthonormal columns.
struct SvdResult {
    MatD u;
    MatD v;
    std::vector<double> sigma;

    MatD reconstruct() const {
        MatD r(u.rows(), v.rows());
        for (std::size_t i = 0; i < u.rows(); ++i)
            for (std::size_t j = 0; j < v.rows(); ++j) {
                double acc = 0;
                for (std::size_t t = 0; t < sigma.size(); ++t)
                    acc += u(i, t) * sigma[t] * v(j, t);
                r(i, j) = acc;
            }
        return r;
    }
};

namespace detail {

// One-sided Jacobi on the columns of a (m >= n assumed by caller): right
// rotations orthogonalize column pairs; V accumulates them.
inline void jacobi_sweeps(MatD& a, MatD& v, double tol, std::size_t sweep_cap) {
    const std::size_t m = a.rows(), n = a.cols();
    for (std::size_t sweep = 0; sweep < sweep_cap; ++sweep) {
        double worst = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double app = 0, aqq = 0, apq = 0;
                for (std::size_t i = 0; i < m; ++i) {
                    double x = a(i, p), y = a(i, q);
                    app += x * x;
                    aqq += y * y;
                    apq += x * y;
                }
                if (app == 0.0 || aqq == 0.0) continue;
                double off = std::abs(apq) / std::sqrt(app * aqq);
                worst = std::max(worst, off);
                if (off <= tol) continue;
                double zeta = (aqq - app) / (2.0 * apq);
                double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = c * t;
                for (std::size_t i = 0; i < m; ++i) {
                    double x = a(i, p), y = a(i, q);
                    a(i, p) = c * x - s * y;
                    a(i, q) = s * x + c * y;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    double x = v(i, p), y = v(i, q);
                    v(i, p) = c * x - s * y;
                    v(i, q) = s * x + c * y;
                }
            }
        }
        if (worst <= tol) return;
    }
    throw SvdFailure("svd: one-sided Jacobi did not converge within the sweep cap");
}

// Fills columns of u with sigma below `eps` by completing to an orthonormal set.
inline void complete_orthonormal(MatD& u, const std::vector<bool>& missing) {
    const std::size_t m = u.rows(), p = u.cols();
    std::size_t candidate = 0;
    for (std::size_t j = 0; j < p; ++j) {
        if (!missing[j]) continue;
        for (; candidate <= m; ++candidate) {
            if (candidate == m) throw SvdFailure("svd: failed to complete orthonormal factor");
            // start from a coordinate vector, project out the existing columns
            std::vector<double> w(m, 0.0);
            w[candidate] = 1.0;
            for (std::size_t t = 0; t < p; ++t) {
                if (missing[t] && t >= j) continue;
                double dot = 0;
                for (std::size_t i = 0; i < m; ++i) dot += u(i, t) * w[i];
                for (std::size_t i = 0; i < m; ++i) w[i] -= dot * u(i, t);
            }
            double nrm = std::sqrt(std::inner_product(w.begin(), w.end(), w.begin(), 0.0));
            if (nrm > 1e-3) {
                for (std::size_t i = 0; i < m; ++i) u(i, j) = w[i] / nrm;
                ++candidate;
                break;
            }
        }
    }
}

}  // namespace detail

/// One-sided Jacobi SVD. Intended for desk-scale dense matrices; sizes above
/// 512 are rejected.
inline SvdResult svd(const MatD& input, double tol = 1e-12) {
    if (input.rows() == 0 || input.cols() == 0) throw std::invalid_argument("svd: empty matrix");
    if (input.rows() > 512 || input.cols() > 512)
        throw std::invalid_argument("svd: dimension exceeds 512");
    const bool transposed = input.rows() < input.cols();
    MatD a = transposed ? input.transpose() : input;
    const std::size_t m = a.rows(), n = a.cols();

    MatD v = MatD::identity(n);
    detail::jacobi_sweeps(a, v, tol, 100 * std::max(m, n));

    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0;
        for (std::size_t i = 0; i < m; ++i) s += a(i, j) * a(i, j);
        sigma[j] = std::sqrt(s);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

    MatD u(m, n), vs(n, n);
    std::vector<double> sig(n);
    std::vector<bool> missing(n, false);
    double scale = sigma.empty() ? 0.0 : sigma[order[0]];
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t src = order[j];
        sig[j] = sigma[src];
        for (std::size_t i = 0; i < n; ++i) vs(i, j) = v(i, src);
        if (sigma[src] > scale * 1e-300 && sigma[src] > 0.0) {
            for (std::size_t i = 0; i < m; ++i) u(i, j) = a(i, src) / sigma[src];
        } else {
            missing[j] = true;
        }
    }
    detail::complete_orthonormal(u, missing);

    if (transposed) return {std::move(vs), std::move(u), std::move(sig)};
    return {std::move(u), std::move(vs), std::move(sig)};
}

}  // namespace qcc
