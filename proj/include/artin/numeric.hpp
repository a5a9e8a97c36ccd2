#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

#include <boost/multiprecision/cpp_int.hpp>

#include "artin/errors.hpp"

namespace artin {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ipow(BigInt base, std::uint64_t e) {
    BigInt r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rational rpow(const Rational& base, std::uint64_t e) {
    return Rational(ipow(numerator(base), e), ipow(denominator(base), e));
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// n(n-1)...(n-j+1); zero when j > n, so case formulas stay total in n.
inline BigInt falling_factorial(std::uint64_t n, std::uint64_t j) {
    if (j > n) return 0;
    BigInt r = 1;
    for (std::uint64_t i = 0; i < j; ++i) r *= n - i;
    return r;
}

/// Natural log of a positive big integer, via the top 53 bits.
inline double log_big(const BigInt& x) {
    if (x <= 0) throw Error("log_big requires a positive argument");
    const auto bits = boost::multiprecision::msb(x);
    if (bits <= 52) return std::log(x.convert_to<double>());
    const BigInt top = x >> (bits - 52);
    return std::log(top.convert_to<double>()) + static_cast<double>(bits - 52) * std::numbers::ln2;
}

/// Natural log of a positive rational; -inf for zero.
inline double log_rational(const Rational& r) {
    if (r == 0) return -std::numeric_limits<double>::infinity();
    if (r < 0) throw Error("log_rational requires a non-negative argument");
    return log_big(numerator(r)) - log_big(denominator(r));
}

/// Accurate double conversion for rationals whose components may be huge.
/// The quotient is scaled to ~64 significant bits before dividing.
inline double to_double(const Rational& r) {
    if (r == 0) return 0.0;
    const bool neg = r < 0;
    const BigInt num = neg ? BigInt(-numerator(r)) : numerator(r);
    const BigInt& den = denominator(r);
    const long shift = 64 + static_cast<long>(boost::multiprecision::msb(den)) -
                       static_cast<long>(boost::multiprecision::msb(num));
    const BigInt q = shift >= 0 ? BigInt((num << shift) / den) : BigInt(num / (den << -shift));
    const double d = std::ldexp(q.convert_to<double>(), static_cast<int>(-shift));
    return neg ? -d : d;
}

/// Largest integer t with t^k <= x (x >= 0, k >= 1).
inline BigInt iroot(const BigInt& x, unsigned k) {
    if (x < 0) throw Error("iroot requires a non-negative argument");
    if (k == 0) throw Error("iroot requires k >= 1");
    if (x <= 1 || k == 1) return x;
    BigInt lo = 0;
    BigInt hi = BigInt(1) << (boost::multiprecision::msb(x) / k + 1);
    while (lo < hi) {  // invariant: lo^k <= x < (hi+1)^k
        const BigInt mid = (lo + hi + 1) / 2;
        if (ipow(mid, k) <= x)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

}  // namespace artin
