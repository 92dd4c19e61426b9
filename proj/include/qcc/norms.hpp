#pragma once

#include "qcc/matrix.hpp"
#include "qcc/svd.hpp"

#include <cmath>
#include <cstdlib>

namespace qcc {

/// <A, B> = sum_ij a_ij * b_ij (real entrywise scalar product, row-major
/// summation order for determinism).
inline double inner(const MatD& a, const MatD& b) {
    a.check_same_shape(b);
    double acc = 0;
    const auto& x = a.data();
    const auto& y = b.data();
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
    return acc;
}

inline double frobenius(const MatD& a) {
    double acc = 0;
    for (double v : a.data()) acc += v * v;
    return std::sqrt(acc);
}

inline double l1(const MatD& a) {
    double acc = 0;
    for (double v : a.data()) acc += std::abs(v);
    return acc;
}

inline double linf(const MatD& a) {
    double m = 0;
    for (double v : a.data()) m = std::max(m, std::abs(v));
    return m;
}

/// Largest singular value.
inline double operator_norm(const MatD& a) { return svd(a).sigma.front(); }

/// Sum of singular values (dual form: max |<A,B>| over ||B|| <= 1).
inline double trace_norm(const MatD& a) {
    double acc = 0;
    for (double s : svd(a).sigma) acc += s;
    return acc;
}

}  // namespace qcc
