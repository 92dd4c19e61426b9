#pragma once

#include "qcc/predicate.hpp"
#include "qcc/rational.hpp"
#include "qcc/simplex.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qcc {

enum class LpMode { Auto, Exact, Float };

/// Degree-d polynomial in the Chebyshev basis scaled to [0, n], with its
/// achieved sup error against D on the integer grid {0..n}.
struct PolyApprox {
    int degree = 0;
    std::vector<double> coeffs;  // c_j on T_j(2s/n - 1)
    double error = 0;
    std::optional<Rational> error_exact;  // set in exact mode
};

namespace detail {

// scaled Chebyshev values T_j(2s/n - 1), j = 0..d
template <class F>
std::vector<F> cheb_row(int n, int s, int d) {
    std::vector<F> t(d + 1);
    F x = n == 0 ? F(0) : F(2 * s) / F(n) - F(1);
    t[0] = F(1);
    if (d >= 1) t[1] = x;
    for (int j = 2; j <= d; ++j) t[j] = F(2) * x * t[j - 1] - t[j - 2];
    return t;
}

// LP: minimize eps over coefficients with |p(s) - D(s)| <= eps on the grid.
template <class F>
std::pair<std::vector<F>, F> minimax_lp(const SymmetricPredicate& dpred, int d) {
    const int n = dpred.n;
    const std::size_t nc = static_cast<std::size_t>(d) + 1;
    LpProblem<F> lp(2 * nc + 1);  // u_j, v_j, eps
    lp.objective[2 * nc] = F(1);
    for (int s = 0; s <= n; ++s) {
        std::vector<F> t = cheb_row<F>(n, s, d);
        F target = F(dpred(s) ? 1 : 0);
        std::vector<F> row(2 * nc + 1, F{});
        for (std::size_t j = 0; j < nc; ++j) {
            row[j] = t[j];
            row[nc + j] = -t[j];
        }
        row[2 * nc] = F(-1);
        lp.add_constraint(row, Rel::Le, target);  // p(s) - eps <= D(s)
        for (auto& v : row) v = -v;
        row[2 * nc] = F(-1);
        lp.add_constraint(row, Rel::Le, F(-target));  // -p(s) - eps <= -D(s)
    }
    LpResult<F> res = solve_lp(lp);
    if (res.status != LpStatus::Optimal)
        throw LpFailure("best_poly_approx: LP did not reach an optimum");
    std::vector<F> coeffs(nc);
    for (std::size_t j = 0; j < nc; ++j) coeffs[j] = res.x[j] - res.x[nc + j];
    return {std::move(coeffs), res.x[2 * nc]};
}

template <class F>
F eval_cheb(const std::vector<F>& coeffs, int n, int s) {
    std::vector<F> t = cheb_row<F>(n, s, static_cast<int>(coeffs.size()) - 1);
    F acc{};
    for (std::size_t j = 0; j < coeffs.size(); ++j) acc += coeffs[j] * t[j];
    return acc;
}

inline bool use_exact(LpMode mode, int n) {
    switch (mode) {
        case LpMode::Exact: return true;
        case LpMode::Float: return false;
        default: return n <= 24;
    }
}

}  // namespace detail

/// Best sup-norm approximation of D on {0..n} by a polynomial of degree <= d,
/// via LP over d+1 Chebyshev coefficients. The reported error is recomputed
/// from the coefficients, independently of the LP optimum.
inline PolyApprox best_poly_approx(const SymmetricPredicate& dpred, int d, LpMode mode = LpMode::Auto) {
    if (d < 0 || d > dpred.n) throw std::invalid_argument("best_poly_approx: need 0 <= d <= n");
    PolyApprox out;
    out.degree = d;
    if (detail::use_exact(mode, dpred.n)) {
        auto [coeffs, eps] = detail::minimax_lp<Rational>(dpred, d);
        Rational achieved = 0;
        for (int s = 0; s <= dpred.n; ++s) {
            Rational diff = detail::eval_cheb(coeffs, dpred.n, s) - Rational(dpred(s) ? 1 : 0);
            achieved = std::max(achieved, abs_rational(diff));
        }
        if (achieved != eps)
            throw LpFailure("best_poly_approx: exact LP optimum does not match recomputed error");
        out.coeffs.reserve(coeffs.size());
        for (const auto& c : coeffs) out.coeffs.push_back(to_double(c));
        out.error = to_double(achieved);
        out.error_exact = achieved;
    } else {
        auto [coeffs, eps] = detail::minimax_lp<double>(dpred, d);
        double achieved = 0;
        for (int s = 0; s <= dpred.n; ++s) {
            double diff = detail::eval_cheb(coeffs, dpred.n, s) - (dpred(s) ? 1.0 : 0.0);
            achieved = std::max(achieved, std::abs(diff));
        }
        if (std::abs(achieved - eps) > 1e-9)
            throw LpFailure("best_poly_approx: LP optimum drifted from recomputed error");
        out.coeffs = std::move(coeffs);
        out.error = achieved;
    }
    return out;
}

/// Least d with best error <= 1/3 (exact comparison in exact mode). The best
/// error is nonincreasing in d and reaches 0 at d = n, so the scan terminates.
inline int approx_degree(const SymmetricPredicate& dpred, LpMode mode = LpMode::Auto) {
    for (int d = 0; d <= dpred.n; ++d) {
        PolyApprox p = best_poly_approx(dpred, d, mode);
        if (p.error_exact.has_value()) {
            if (*p.error_exact <= Rational(1, 3)) return d;
        } else if (p.error <= 1.0 / 3.0 + 1e-9) {
            return d;
        }
    }
    return dpred.n;  // unreachable: degree-n interpolation is exact
}

}  // namespace qcc
