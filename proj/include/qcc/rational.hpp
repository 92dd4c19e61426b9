#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qcc {

/// Arbitrary-precision integer / rational scalars. Exact arithmetic is used
/// wherever eigenvalue tables, LP certificates or acceptance checks assert
/// equalities; everything float-valued goes through `double`.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }
inline double to_double(const BigInt& z) { return z.template convert_to<double>(); }

/// C(n, k) with the usual convention: 0 whenever k < 0 or k > n.
/// Requires n >= 0 (negative upper index never occurs in this toolkit).
inline BigInt binomial(long long n, long long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline std::uint64_t binomial_u64(long long n, long long k) {
    BigInt b = binomial(n, k);
    if (b > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("binomial_u64: value exceeds 64 bits");
    return b.template convert_to<std::uint64_t>();
}

inline Rational pow_rational(const Rational& base, unsigned e) {
    Rational r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

inline Rational abs_rational(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline std::string to_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace qcc
