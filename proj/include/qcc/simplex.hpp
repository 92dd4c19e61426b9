#pragma once

#include "qcc/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qcc {

struct LpFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };
enum class Rel { Le, Eq, Ge };

template <class F>
struct FieldTraits;

template <>
struct FieldTraits<double> {
    static bool is_neg(double x) { return x < -1e-9; }
    static bool is_pos(double x) { return x > 1e-9; }
};

template <>
struct FieldTraits<Rational> {
    static bool is_neg(const Rational& x) { return x < 0; }
    static bool is_pos(const Rational& x) { return x > 0; }
};

/// minimize c.x subject to row_i . x (<=|=|>=) rhs_i, x >= 0.
template <class F>
struct LpProblem {
    std::size_t num_vars = 0;
    std::vector<F> objective;
    std::vector<std::vector<F>> rows;
    std::vector<F> rhs;
    std::vector<Rel> rels;

    explicit LpProblem(std::size_t nv) : num_vars(nv), objective(nv, F{}) {}

    void add_constraint(std::vector<F> row, Rel rel, F b) {
        if (row.size() != num_vars) throw std::invalid_argument("LpProblem: row size mismatch");
        rows.push_back(std::move(row));
        rels.push_back(rel);
        rhs.push_back(std::move(b));
    }
};

template <class F>
struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    F objective{};
    std::vector<F> x;
};

/// Dense two-phase tableau simplex with Bland's anti-cycling rule. Exact over
/// Rational; over double a 1e-9 feasibility/pivot tolerance applies.
template <class F>
LpResult<F> solve_lp(const LpProblem<F>& prob) {
    using T = FieldTraits<F>;
    const std::size_t nv = prob.num_vars;
    std::size_t m = prob.rows.size();

    // column layout: [structural | slack/surplus | artificial | rhs]
    std::size_t num_slack = 0;
    for (Rel r : prob.rels)
        if (r != Rel::Eq) ++num_slack;

    std::vector<std::vector<F>> tab;  // m rows, built below
    std::vector<std::size_t> basis(m);
    std::vector<bool> is_artificial;

    std::size_t slack_at = nv;
    std::size_t art_at = nv + num_slack;
    std::size_t num_art = 0;
    // first pass: count artificials (Ge and Eq rows, after sign normalization)
    std::vector<int> row_sign(m, 1);
    std::vector<Rel> rel(prob.rels);
    for (std::size_t i = 0; i < m; ++i) {
        if (T::is_neg(prob.rhs[i])) {
            row_sign[i] = -1;
            if (rel[i] == Rel::Le) rel[i] = Rel::Ge;
            else if (rel[i] == Rel::Ge) rel[i] = Rel::Le;
        }
        if (rel[i] != Rel::Le) ++num_art;
    }
    const std::size_t ncols = nv + num_slack + num_art;
    is_artificial.assign(ncols, false);
    for (std::size_t j = art_at; j < ncols; ++j) is_artificial[j] = true;

    tab.assign(m, std::vector<F>(ncols + 1, F{}));
    std::size_t next_slack = slack_at, next_art = art_at;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < nv; ++j)
            tab[i][j] = row_sign[i] < 0 ? F(-prob.rows[i][j]) : prob.rows[i][j];
        tab[i][ncols] = row_sign[i] < 0 ? F(-prob.rhs[i]) : prob.rhs[i];
        if (rel[i] == Rel::Le) {
            tab[i][next_slack] = F(1);
            basis[i] = next_slack++;
        } else {
            if (rel[i] == Rel::Ge) tab[i][next_slack++] = F(-1);
            tab[i][next_art] = F(1);
            basis[i] = next_art++;
        }
    }

    auto pivot = [&](std::size_t pr, std::size_t pc) {
        F inv = tab[pr][pc];
        for (auto& v : tab[pr]) v /= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == pr) continue;
            F f = tab[i][pc];
            if (f == F{}) continue;
            for (std::size_t j = 0; j <= ncols; ++j) tab[i][j] -= f * tab[pr][j];
        }
        basis[pr] = pc;
    };

    // reduced cost d_j = c_j - sum_i c_basis[i] * tab[i][j]
    auto run_phase = [&](const std::vector<F>& cost, std::size_t iter_cap,
                         bool allow_artificial) -> LpStatus {
        for (std::size_t iter = 0; iter < iter_cap; ++iter) {
            std::size_t enter = ncols;
            for (std::size_t j = 0; j < ncols; ++j) {  // Bland: first improving index
                if (!allow_artificial && is_artificial[j]) continue;
                F d = cost[j];
                for (std::size_t i = 0; i < m; ++i) {
                    if (cost[basis[i]] != F{}) d -= cost[basis[i]] * tab[i][j];
                }
                if (T::is_neg(d)) {
                    enter = j;
                    break;
                }
            }
            if (enter == ncols) return LpStatus::Optimal;
            std::size_t leave = m;
            for (std::size_t i = 0; i < m; ++i) {
                if (!T::is_pos(tab[i][enter])) continue;
                if (leave == m) {
                    leave = i;
                    continue;
                }
                F lhs = tab[i][ncols] * tab[leave][enter];
                F rhs_v = tab[leave][ncols] * tab[i][enter];
                if (lhs < rhs_v || (lhs == rhs_v && basis[i] < basis[leave])) leave = i;
            }
            if (leave == m) return LpStatus::Unbounded;
            pivot(leave, enter);
        }
        return LpStatus::IterationLimit;
    };

    const std::size_t iter_cap = 20000 + 200 * (m + ncols);

    if (num_art > 0) {
        std::vector<F> phase1_cost(ncols, F{});
        for (std::size_t j = art_at; j < ncols; ++j) phase1_cost[j] = F(1);
        LpStatus st = run_phase(phase1_cost, iter_cap, true);
        if (st != LpStatus::Optimal) return {st == LpStatus::Unbounded ? LpStatus::Infeasible : st, F{}, {}};
        F art_sum{};
        for (std::size_t i = 0; i < m; ++i)
            if (is_artificial[basis[i]]) art_sum += tab[i][ncols];
        if (T::is_pos(art_sum)) return {LpStatus::Infeasible, F{}, {}};
        // drive residual artificials out of the basis; drop dependent rows
        for (std::size_t i = 0; i < m;) {
            if (!is_artificial[basis[i]]) {
                ++i;
                continue;
            }
            std::size_t pc = ncols;
            for (std::size_t j = 0; j < art_at; ++j) {
                if (T::is_pos(tab[i][j]) || T::is_neg(tab[i][j])) {
                    pc = j;
                    break;
                }
            }
            if (pc != ncols) {
                pivot(i, pc);
                ++i;
            } else {
                tab.erase(tab.begin() + static_cast<std::ptrdiff_t>(i));
                basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
                --m;
            }
        }
    }

    std::vector<F> cost(ncols, F{});
    for (std::size_t j = 0; j < nv; ++j) cost[j] = prob.objective[j];
    LpStatus st = run_phase(cost, iter_cap, false);
    if (st != LpStatus::Optimal) return {st, F{}, {}};

    LpResult<F> res;
    res.status = LpStatus::Optimal;
    res.x.assign(nv, F{});
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < nv) res.x[basis[i]] = tab[i][ncols];
    res.objective = F{};
    for (std::size_t j = 0; j < nv; ++j) res.objective += prob.objective[j] * res.x[j];
    return res;
}

}  // namespace qcc
