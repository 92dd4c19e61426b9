#pragma once

#include "qcc/matrix.hpp"
#include "qcc/norms.hpp"
#include "qcc/svd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcc {

/// Certified upper estimate of the eps-approximate trace norm: `witness`
/// satisfies linf(M - witness) <= eps and `value` = trace_norm(witness).
/// The minimization is heuristic; feasibility of the witness is what makes
/// the value a valid upper bound.
struct ApproxTraceNorm {
    double value = 0;
    MatD witness;
    int iterations = 0;
};

/// Alternating minimization: soft-threshold the singular values, then project
/// back onto the entrywise eps-box around M. Stops at relative improvement
/// below 1e-8 or 500 iterations.
inline ApproxTraceNorm approx_trace_norm_upper(const MatD& m, double eps) {
    if (eps < 0 || !std::isfinite(eps)) throw std::invalid_argument("approx_trace_norm_upper: eps >= 0");
    if (eps == 0.0) return {trace_norm(m), m, 0};
    if (linf(m) <= eps) return {0.0, MatD(m.rows(), m.cols()), 0};

    auto project_box = [&](MatD& p) {
        // p = m + clamp(p - m, -eps, eps); |p - m| <= eps holds bitwise after this
        for (std::size_t i = 0; i < p.data().size(); ++i) {
            double delta = p.data()[i] - m.data()[i];
            delta = std::clamp(delta, -eps, eps);
            p.data()[i] = m.data()[i] + delta;
        }
    };

    const double tau = eps / 4.0;
    MatD p = m;
    MatD best = m;
    double best_value = trace_norm(m);
    double prev_value = best_value;
    int iter = 0;
    for (; iter < 500; ++iter) {
        SvdResult f = svd(p);
        double value = 0;
        for (double s : f.sigma) value += s;
        if (value < best_value) {
            best_value = value;
            best = p;
        }
        if (iter > 0 && std::abs(prev_value - value) < 1e-8 * std::max(1.0, std::abs(prev_value)))
            break;
        prev_value = value;
        for (double& s : f.sigma) s = std::max(s - tau, 0.0);
        p = f.reconstruct();
        project_box(p);
    }
    return {best_value, std::move(best), iter};
}

}  // namespace qcc
