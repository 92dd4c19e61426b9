#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qcc {

/// Shift/restriction parameters carrying f_{n,D} down to a fixed-cardinality
/// family: k-subsets of [n-r], with k <= (n-r)/4 and l-r <= k/4.
struct ReductionParams {
    int r = 0;
    int k = 0;
    bool operator==(const ReductionParams&) const = default;
};

/// Picks (r, k) for a jump at position l: the minimal feasible r (the paper's
/// r = (16l-n)/15, rounded up and clamped at 0) and the largest k allowed at
/// that r. Minimal r maximizes k*(l-r) over all feasible integer pairs.
/// Returns nullopt when no pair with k >= 1 satisfies both conditions.
inline std::optional<ReductionParams> reduction_params(int n, int l) {
    if (l < 1 || l > n) throw std::invalid_argument("reduction_params: need 1 <= l <= n");
    int num = 16 * l - n;
    int r = num <= 0 ? 0 : (num + 14) / 15;  // ceil(num/15)
    for (; r <= l; ++r) {
        int k = (n - r) / 4;
        if (k >= 1 && 4 * (l - r) <= k) return ReductionParams{r, k};
    }
    return std::nullopt;
}

/// phi(x) = x ∪ {n-r+1, ..., n} for x ⊆ [n-r]; intersection sizes shift by
/// exactly r under this lift. Elements are 1-based and returned sorted.
inline std::vector<int> lift_instance(const std::vector<int>& x, int n, int r) {
    if (r < 0 || r > n) throw std::invalid_argument("lift_instance: r out of range");
    std::vector<int> out;
    out.reserve(x.size() + static_cast<std::size_t>(r));
    for (int e : x) {
        if (e < 1 || e > n - r) throw std::invalid_argument("lift_instance: x must lie in [n-r]");
        out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] == out[i - 1]) throw std::invalid_argument("lift_instance: duplicate element");
    for (int e = n - r + 1; e <= n; ++e) out.push_back(e);
    return out;
}

}  // namespace qcc
