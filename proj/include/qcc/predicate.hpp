#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcc {

/// Boolean predicate D on {0, 1, ..., n}. Everything the toolkit bounds is a
/// function of |x ∩ y| through one of these.
struct SymmetricPredicate {
    int n = 0;
    std::vector<std::uint8_t> values;  // values[s] = D(s), s = 0..n

    SymmetricPredicate() = default;
    SymmetricPredicate(int n_, std::vector<std::uint8_t> v) : n(n_), values(std::move(v)) {
        if (static_cast<int>(values.size()) != n + 1)
            throw std::invalid_argument("SymmetricPredicate: needs n+1 values");
        for (auto b : values)
            if (b > 1) throw std::invalid_argument("SymmetricPredicate: values must be 0/1");
    }

    bool operator()(int s) const { return values.at(static_cast<std::size_t>(s)) != 0; }

    SymmetricPredicate complement() const {
        std::vector<std::uint8_t> v(values.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = values[i] ? 0 : 1;
        return {n, std::move(v)};
    }

    bool is_constant() const {
        for (auto b : values)
            if (b != values[0]) return false;
        return true;
    }
};

inline SymmetricPredicate disj_predicate(int n) {
    std::vector<std::uint8_t> v(n + 1, 0);
    v[0] = 1;
    return {n, std::move(v)};
}

inline SymmetricPredicate parity_predicate(int n) {
    std::vector<std::uint8_t> v(n + 1);
    for (int s = 0; s <= n; ++s) v[s] = static_cast<std::uint8_t>(s % 2);
    return {n, std::move(v)};
}

inline SymmetricPredicate threshold_predicate(int n, int l) {
    std::vector<std::uint8_t> v(n + 1);
    for (int s = 0; s <= n; ++s) v[s] = s >= l ? 1 : 0;
    return {n, std::move(v)};
}

inline SymmetricPredicate equality_predicate(int n, int l) {
    std::vector<std::uint8_t> v(n + 1, 0);
    if (l >= 0 && l <= n) v[l] = 1;
    return {n, std::move(v)};
}

inline SymmetricPredicate constant_predicate(int n, bool value) {
    return {n, std::vector<std::uint8_t>(n + 1, value ? 1 : 0)};
}

/// Parses the predicate text forms accepted by every front end:
/// explicit bitstring "100...0" (length n+1, leftmost bit is D(0)),
/// or named "disj", "parity", "thr:L", "eq:L". Named forms take the
/// domain size from `n`; a bitstring overrides it.
inline SymmetricPredicate parse_predicate(std::string_view text, int n) {
    auto parse_level = [](std::string_view s) {
        int l = 0;
        if (s.empty()) throw std::invalid_argument("predicate: missing level");
        for (char c : s) {
            if (c < '0' || c > '9') throw std::invalid_argument("predicate: bad level");
            l = l * 10 + (c - '0');
        }
        return l;
    };
    if (text == "disj") return disj_predicate(n);
    if (text == "parity") return parity_predicate(n);
    if (text.substr(0, 4) == "thr:") return threshold_predicate(n, parse_level(text.substr(4)));
    if (text.substr(0, 3) == "eq:") return equality_predicate(n, parse_level(text.substr(3)));
    std::vector<std::uint8_t> v;
    v.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("predicate: not a named form or 0/1 string");
        v.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    if (v.empty()) throw std::invalid_argument("predicate: empty");
    return {static_cast<int>(v.size()) - 1, std::move(v)};
}

/// Last sign-change positions of D in the lower and upper halves of {0..n}.
/// l0 is the largest l <= floor(n/2) with D(l) != D(l-1), l1 the largest n-l
/// over l in [ceil(n/2), n) with D(l) != D(l+1); 0 when no such l exists.
struct JumpProfile {
    int l0 = 0;
    int l1 = 0;
    bool operator==(const JumpProfile&) const = default;
};

inline JumpProfile jump_profile(const SymmetricPredicate& d) {
    JumpProfile p;
    for (int l = 1; l <= d.n / 2; ++l)
        if (d(l) != d(l - 1)) p.l0 = l;
    // n - l decreases in l, so the first qualifying l from ceil(n/2) wins
    for (int l = (d.n + 1) / 2; l < d.n; ++l)
        if (d(l) != d(l + 1)) {
            p.l1 = d.n - l;
            break;
        }
    return p;
}

/// (D - r)|_k : s -> D(r + s) on {0, ..., k}.
inline SymmetricPredicate shift_restrict(const SymmetricPredicate& d, int r, int k) {
    if (r < 0 || r > d.n) throw std::invalid_argument("shift_restrict: r out of range");
    if (k < 0 || k > d.n - r) throw std::invalid_argument("shift_restrict: k out of range");
    std::vector<std::uint8_t> v(k + 1);
    for (int s = 0; s <= k; ++s) v[s] = d.values[r + s];
    return {k, std::move(v)};
}

/// Shape of the communication upper bound, (sqrt(n*l0) + l1) * log2(n),
/// with the hidden constant dropped.
inline double upper_bound_estimate(const SymmetricPredicate& d) {
    if (d.n < 2) throw std::invalid_argument("upper_bound_estimate: n >= 2 required");
    JumpProfile p = jump_profile(d);
    return (std::sqrt(static_cast<double>(d.n) * p.l0) + p.l1) * std::log2(static_cast<double>(d.n));
}

}  // namespace qcc
