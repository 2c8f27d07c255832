#pragma once

#include "dyckstat/bigcount.hpp"

namespace dyckstat {

/// N_k(m, l) as the summation closed form, valid for 0 <= l, 2l <= m <= 2k:
///
///   sum_{d=0}^{k+l-m} [binom(m,l) - binom(m,l-d-1)]
///                   * [binom(2k-m+1,k-m+l-d) - binom(2k-m+1,k-m+l-d-1)]
///
/// An empty sum (k+l-m < 0) is 0. Callers with 2l > m must first apply the
/// symmetry l -> m-l; interval_stat() does that canonicalization.
inline BigCount interval_stat_sum_form(long long k, long long m, long long l) {
    if (k < 0 || l < 0 || 2 * l > m || m > 2 * k)
        throw std::domain_error("interval_stat_sum_form: need 0 <= l, 2l <= m <= 2k");
    BigCount total = 0;
    const BigCount window_full = binomial(m, l);
    for (long long d = 0; d <= k + l - m; ++d) {
        const BigCount windows = window_full - binomial(m, l - d - 1);
        const BigCount anchors = binomial(2 * k - m + 1, k - m + l - d) -
                                 binomial(2 * k - m + 1, k - m + l - d - 1);
        total += windows * anchors;
    }
    return total;
}

/// Rearranged form of the same quantity, same domain:
///
///   binom(m,l) * binom(2k-m+1,k-m+l)
///     + sum_{d'=0}^{l-1} binom(m,d') * [binom(2k-m+1,k+1-d') - binom(2k-m+1,k-d')]
///
/// Kept as an independent evaluation route; equality with the summation
/// form is a standing cross-check.
inline BigCount interval_stat_alt_form(long long k, long long m, long long l) {
    if (k < 0 || l < 0 || 2 * l > m || m > 2 * k)
        throw std::domain_error("interval_stat_alt_form: need 0 <= l, 2l <= m <= 2k");
    BigCount total = binomial(m, l) * binomial(2 * k - m + 1, k - m + l);
    for (long long d = 0; d < l; ++d)
        total += binomial(m, d) * (binomial(2 * k - m + 1, k + 1 - d) - binomial(2 * k - m + 1, k - d));
    return total;
}

/// N_k(k, l) = binom(k, l)^2 for 0 <= l <= k.
inline BigCount interval_stat_central(long long k, long long l) {
    if (k < 0 || l < 0 || l > k)
        throw std::domain_error("interval_stat_central: need 0 <= l <= k");
    const BigCount b = binomial(k, l);
    return b * b;
}

/// N_k(k+1, l) = binom(k, l-1) * binom(k, l) for 2l <= k+1.
inline BigCount interval_stat_central_plus1(long long k, long long l) {
    if (k < 0 || l < 0 || 2 * l > k + 1)
        throw std::domain_error("interval_stat_central_plus1: need 0 <= l, 2l <= k+1");
    return binomial(k, l - 1) * binomial(k, l);
}

/// N_k(k-1, l) = binom(k+2,l+1) binom(k-1,l)
///             - binom(k,l+1) binom(k-1,l-1)
///             - binom(k,l-1) binom(k-1,l)        for k >= 1, 2l <= k-1.
inline BigCount interval_stat_central_minus1(long long k, long long l) {
    if (k < 1 || l < 0 || 2 * l > k - 1)
        throw std::domain_error("interval_stat_central_minus1: need k >= 1, 0 <= l, 2l <= k-1");
    return binomial(k + 2, l + 1) * binomial(k - 1, l) -
           binomial(k, l + 1) * binomial(k - 1, l - 1) -
           binomial(k, l - 1) * binomial(k - 1, l);
}

/// Public entry point for N_k(m, l), defined for 0 <= l <= m <= 2k. Applies
/// the reflection symmetry N_k(m, l) = N_k(m, m-l) to reach the canonical
/// half-domain, then evaluates the summation form.
inline BigCount interval_stat(long long k, long long m, long long l) {
    if (k < 0 || l < 0 || l > m || m > 2 * k)
        throw std::domain_error("interval_stat: need 0 <= l <= m <= 2k");
    if (2 * l > m) l = m - l;
    return interval_stat_sum_form(k, m, l);
}

} // namespace dyckstat
