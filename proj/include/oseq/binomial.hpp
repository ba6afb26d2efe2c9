#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "oseq/error.hpp"

namespace oseq {

/// Dimension counts. All arithmetic on counts is overflow-checked.
using count_t = std::int64_t;

inline count_t checked_add(count_t a, count_t b) {
    count_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(Errc::Overflow, "addition " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline count_t checked_mul(count_t a, count_t b) {
    count_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(Errc::Overflow, "product " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

/// C(a, b) by the multiplicative formula with exact division; 0 when b < 0 or a < b.
inline count_t binomial(count_t a, count_t b) {
    if (b < 0 || a < b) return 0;
    if (b > a - b) b = a - b;
    count_t r = 1;
    for (count_t k = 1; k <= b; ++k) {
        // r * (a - b + k) is divisible by k since r = C(a - b + k - 1, k - 1)
        count_t num = a - b + k;
        count_t g = std::gcd(r, k);
        r = checked_mul(r / g, num / (k / g));
    }
    return r;
}

/// dim_k R_t for R = k[x_1..x_n].
inline count_t monomial_count(int n, int t) {
    if (t < 0) return 0;
    if (n == 0) return t == 0 ? 1 : 0;
    return binomial(t + n - 1, n - 1);
}

} // namespace oseq
