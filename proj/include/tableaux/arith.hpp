#pragma once

#include <algorithm>
#include <stdexcept>

namespace tableaux {

/// Signed 64-bit arithmetic would wrap; results would be silently wrong.
struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("64-bit addition overflow");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("64-bit multiplication overflow");
    return r;
}

/// Exact C(n, k) in 64 bits. Every intermediate product is divisible by its
/// step index, so the loop stays exact.
inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = checked_mul(r, n - k + i) / i;
    return r;
}

}  // namespace tableaux
