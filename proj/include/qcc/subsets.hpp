#pragma once

#include "qcc/matrix.hpp"
#include "qcc/predicate.hpp"
#include "qcc/rational.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace qcc {

struct SizeBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// All k-element subsets of [n] = {1..n}, enumerated colexicographically.
/// Subsets are bitmasks (bit i-1 <-> element i); colex ranks do not change
/// when n grows, which keeps indices stable across restrictions.
struct InstanceFamily {
    int n = 0;
    int k = 0;

    InstanceFamily(int n_, int k_) : n(n_), k(k_) {
        if (k < 0 || k > n || n > 62) throw std::invalid_argument("InstanceFamily: need 0 <= k <= n <= 62");
    }

    std::uint64_t size() const { return binomial_u64(n, k); }

    /// Colex rank: sum of C(s_i - 1, i) over the sorted elements s_1 < ... < s_k.
    std::uint64_t rank(std::uint64_t mask) const {
        std::uint64_t r = 0;
        int i = 1;
        while (mask) {
            int elem = std::countr_zero(mask) + 1;
            mask &= mask - 1;
            r += binomial_u64(elem - 1, i);
            ++i;
        }
        return r;
    }

    std::uint64_t unrank(std::uint64_t index) const {
        std::uint64_t mask = 0;
        std::uint64_t rem = index;
        for (int i = k; i >= 1; --i) {
            int elem = i;  // smallest element that can sit in position i
            while (binomial_u64(elem, i) <= rem) ++elem;
            rem -= binomial_u64(elem - 1, i);
            mask |= 1ULL << (elem - 1);
        }
        return mask;
    }
};

/// N x N 0/1 communication matrix of f_{n,k,D}: entry (x, y) = D(|x ∩ y|).
/// D must live on {0..k}.
inline MatD comm_matrix(const InstanceFamily& fam, const SymmetricPredicate& d,
                        std::uint64_t budget = 2048) {
    if (d.n != fam.k) throw std::invalid_argument("comm_matrix: predicate domain must be {0..k}");
    std::uint64_t n_inst = fam.size();
    if (n_inst > budget) throw SizeBudgetError("comm_matrix: instance family exceeds size budget");
    std::size_t n_sz = static_cast<std::size_t>(n_inst);
    std::vector<std::uint64_t> masks(n_sz);
    for (std::size_t i = 0; i < n_sz; ++i) masks[i] = fam.unrank(i);
    MatD m(n_sz, n_sz);
    for (std::size_t i = 0; i < n_sz; ++i)
        for (std::size_t j = 0; j < n_sz; ++j)
            m(i, j) = d(std::popcount(masks[i] & masks[j])) ? 1.0 : 0.0;
    return m;
}

}  // namespace qcc
