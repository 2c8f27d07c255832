#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace dyckstat {

/// Exact arbitrary-precision integer used for all counting results.
/// Counts are non-negative; intermediate differences may dip below zero.
using BigCount = boost::multiprecision::cpp_int;

/// binom(n, r) with the convention binom(n, r) = 0 for r < 0 or r > n.
/// The vanishing-at-negative-lower-index convention is load-bearing: the
/// interval-statistic formulas and the ballot counts rely on out-of-range
/// terms dropping out, so every binomial in this library goes through here.
inline BigCount binomial(long long n, long long r) {
    if (n < 0) throw std::domain_error("binomial: negative upper index");
    if (r < 0 || r > n) return 0;
    if (n - r < r) r = n - r;
    BigCount result = 1;
    for (long long i = 1; i <= r; ++i) {
        result *= n - r + i;
        result /= i; // exact at every step
    }
    return result;
}

} // namespace dyckstat
