#pragma once

#include "qcc/matrix.hpp"
#include "qcc/rational.hpp"
#include "qcc/subsets.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qcc {

/// J_{n,k,s}: 0/1 matrix on k-subsets of [n] with (J)_{xy} = [|x ∩ y| = s].
inline MatD intersection_matrix(int n, int k, int s, std::uint64_t budget = 2048) {
    if (s < 0 || s > k || k > n) throw std::invalid_argument("intersection_matrix: need 0 <= s <= k <= n");
    InstanceFamily fam(n, k);
    std::uint64_t n_inst = fam.size();
    if (n_inst > budget) throw SizeBudgetError("intersection_matrix: size budget exceeded");
    std::size_t n_sz = static_cast<std::size_t>(n_inst);
    std::vector<std::uint64_t> masks(n_sz);
    for (std::size_t i = 0; i < n_sz; ++i) masks[i] = fam.unrank(i);
    MatD m(n_sz, n_sz);
    for (std::size_t i = 0; i < n_sz; ++i)
        for (std::size_t j = 0; j < n_sz; ++j)
            m(i, j) = std::popcount(masks[i] & masks[j]) == s ? 1.0 : 0.0;
    return m;
}

/// Eigenvalue of J_{n,k,s} on the shared eigenspace E_t, by Knuth's direct
/// sum:  sum_i (-1)^(t-i) C(t,i) C(k-i, s-i) C(n-k-t+i, k-s-t+i)
/// over max(0, s+t-k) <= i <= min(s, t). Integer-valued; returned as a
/// rational for uniformity with the normalized tables. Empty range gives 0.
inline Rational hahn_eigenvalue(int n, int k, int s, int t) {
    if (2 * k > n) throw std::invalid_argument("hahn_eigenvalue: requires k <= n/2");
    if (s < 0 || s > k || t < 0 || t > k) throw std::invalid_argument("hahn_eigenvalue: s, t in [0, k]");
    BigInt acc = 0;
    int lo = std::max(0, s + t - k), hi = std::min(s, t);
    for (int i = lo; i <= hi; ++i) {
        BigInt term = binomial(t, i) * binomial(k - i, s - i) * binomial(n - k - t + i, k - s - t + i);
        if ((t - i) % 2 != 0) term = -term;
        acc += term;
    }
    return Rational(acc);
}

/// lambda[s][t] = eigenvalue of the normalized test matrix
/// mu_s = J_{n,k,s} / (N C(k,s) C(n-k,k-s)) on E_t. Exact rationals.
struct HahnTable {
    int n = 0;
    int k = 0;
    std::vector<std::vector<Rational>> lambda;  // (k+1) x (k+1)
};

inline HahnTable hahn_table(int n, int k) {
    if (2 * k > n) throw std::invalid_argument("hahn_table: requires k <= n/2");
    HahnTable tbl{n, k, {}};
    BigInt n_inst = binomial(n, k);
    tbl.lambda.assign(k + 1, std::vector<Rational>(k + 1));
    for (int s = 0; s <= k; ++s) {
        BigInt denom = n_inst * binomial(k, s) * binomial(n - k, k - s);
        for (int t = 0; t <= k; ++t)
            tbl.lambda[s][t] = Rational(numerator(hahn_eigenvalue(n, k, s, t)), denom);
    }
    return tbl;
}

/// The floor(k/2)+1 dimensional discrepancy test for the Johnson scheme:
/// matrices mu_0..mu_{floor(k/2)} represented by their trace vectors
/// lambda^t, t = 0..k, with (lambda^t)_s = lambda_{st}. Multiplicities of the
/// eigenspaces stay empty until an eigenspace oracle fills them in.
struct DiscrepancyTest {
    int n = 0;
    int k = 0;
    int r = 0;                                        // number of mu's
    std::vector<std::vector<Rational>> trace_vectors;  // (k+1) vectors of length r
    std::vector<std::int64_t> multiplicities;          // dims of E_0..E_k, oracle-filled
};

inline DiscrepancyTest build_test(int n, int k) {
    if (2 * k > n) throw std::invalid_argument("build_test: requires k <= n/2");
    HahnTable tbl = hahn_table(n, k);
    DiscrepancyTest test{n, k, k / 2 + 1, {}, {}};
    test.trace_vectors.assign(k + 1, std::vector<Rational>(test.r));
    for (int t = 0; t <= k; ++t)
        for (int s = 0; s < test.r; ++s) test.trace_vectors[t][s] = tbl.lambda[s][t];
    return test;
}

/// Dense mu_s for instance-level checks (float entries).
inline MatD mu_matrix(int n, int k, int s, std::uint64_t budget = 2048) {
    MatD j = intersection_matrix(n, k, s, budget);
    Rational scale(1, binomial(n, k) * binomial(k, s) * binomial(n - k, k - s));
    double f = to_double(scale);
    for (double& v : j.data()) v *= f;
    return j;
}

/// N^{-1} (s/k + (k-s)/(n-k))^t, the exact envelope of |lambda_st| in the
/// regime k <= n/4, s <= k/2.
inline Rational decay_bound_exact(int n, int k, int s, int t) {
    if (k < 1 || 4 * k > n) throw std::invalid_argument("decay_bound: requires 1 <= k <= n/4");
    if (2 * s > k) throw std::invalid_argument("decay_bound: requires s <= k/2");
    if (t < 0 || t > k) throw std::invalid_argument("decay_bound: t in [0, k]");
    Rational base = Rational(s, k) + Rational(k - s, n - k);
    return pow_rational(base, static_cast<unsigned>(t)) / Rational(binomial(n, k));
}

inline double decay_bound(int n, int k, int s, int t) { return to_double(decay_bound_exact(n, k, s, t)); }

}  // namespace qcc
