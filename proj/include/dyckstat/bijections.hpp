#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dyckstat/ballot.hpp"
#include "dyckstat/wreath.hpp"

namespace dyckstat {

namespace detail {

/// Index of the step after which the path first visits a point strictly
/// below the diagonal, or nullopt if it never does. The origin is required
/// to be on or above the diagonal, so the index is always >= 1.
inline std::optional<std::size_t> first_subdiagonal_step(const NEPath& W) {
    LatticePoint p = W.origin;
    for (std::size_t s = 0; s < W.steps.size(); ++s) {
        (W.steps[s] == NEStep::North ? p.y : p.x) += 1;
        if (p.below_diagonal()) return s + 1;
    }
    return std::nullopt;
}

/// Swap North and East in every step strictly after step s (1-based).
inline NEPath flip_after(const NEPath& W, std::size_t s) {
    NEPath out = W;
    for (std::size_t i = s; i < out.steps.size(); ++i)
        out.steps[i] = out.steps[i] == NEStep::North ? NEStep::East : NEStep::North;
    return out;
}

} // namespace detail

/// The reflection-principle flip: exchange North and East in every step
/// after the first sub-diagonal visit. Sends a path (x1,y1) -> (x1+beta,
/// y1+alpha) that dips below the diagonal to a free path ending at
/// (x1+alpha+delta+1, y1+beta-delta-1), delta = y1-x1. Requires x1 <= y1
/// and at least one sub-diagonal visit.
inline NEPath reflect_flip(const NEPath& W) {
    if (W.origin.below_diagonal())
        throw std::domain_error("reflect_flip: origin is below the diagonal");
    const auto s = detail::first_subdiagonal_step(W);
    if (!s)
        throw std::domain_error("reflect_flip: path never goes below the diagonal");
    return detail::flip_after(W, *s);
}

/// Inverse of reflect_flip: the same flip, applied to a path whose endpoint
/// is on or below the diagonal. An endpoint strictly below forces a
/// sub-diagonal visit; an endpoint on the diagonal (the boundary case,
/// image of a path ending one column past the diagonal) must still dip.
inline NEPath reflect_flip_inverse(const NEPath& W) {
    if (W.origin.below_diagonal())
        throw std::domain_error("reflect_flip_inverse: origin is below the diagonal");
    const LatticePoint e = W.end();
    if (e.y > e.x)
        throw std::domain_error("reflect_flip_inverse: endpoint is above the diagonal");
    const auto s = detail::first_subdiagonal_step(W);
    if (!s)
        throw std::domain_error("reflect_flip_inverse: path never goes below the diagonal");
    return detail::flip_after(W, *s);
}

/// Geometry of the anchored-interval pair bijection. For parameters
/// (k, m, l, d) with 0 <= l, 2l <= m <= 2k and 0 <= d <= k+l-m, the pairs
/// (W, i) with W an NE upper path start() -> end() through (-i, -i) and
/// 0 <= i <= max_i() biject with the NE upper paths shifted_start() ->
/// end() that touch the diagonal.
struct DiagonalPairConfig {
    long long k = 0;
    long long m = 0;
    long long l = 0;
    long long d = 0;

    DiagonalPairConfig(long long k_, long long m_, long long l_, long long d_)
        : k(k_), m(m_), l(l_), d(d_) {
        if (l < 0 || 2 * l > m || m > 2 * k)
            throw std::domain_error("DiagonalPairConfig: need 0 <= l, 2l <= m <= 2k");
        if (d < 0 || d > k + l - m)
            throw std::domain_error("DiagonalPairConfig: need 0 <= d <= k+l-m");
    }

    LatticePoint start() const { return {l - k, d + m - l - k}; }
    LatticePoint shifted_start() const { return {l - k - 1, d + m - l - k}; }
    LatticePoint end() const { return {0, d}; }
    long long max_i() const { return k + l - m - d; }
};

/// Forward direction of the pair bijection: insert an East step right after
/// the step at which W reaches (-i, -i), and start one unit further left.
/// The image is an upper path whose first diagonal visit is (-i, -i).
inline NEPath insert_east_at_diagonal(const NEPath& W, long long i, const DiagonalPairConfig& cfg) {
    if (i < 0 || i > cfg.max_i())
        throw std::domain_error("insert_east_at_diagonal: index i out of range");
    if (!(W.origin == cfg.start()) || !(W.end() == cfg.end()))
        throw std::domain_error("insert_east_at_diagonal: path endpoints do not match the configuration");
    if (!W.is_upper())
        throw std::domain_error("insert_east_at_diagonal: path dips below the diagonal");
    const LatticePoint target{-i, -i};
    std::optional<std::size_t> reach; // number of steps after which W sits at (-i,-i)
    LatticePoint p = W.origin;
    if (p == target) reach = 0;
    for (std::size_t s = 0; s < W.steps.size() && !reach; ++s) {
        (W.steps[s] == NEStep::North ? p.y : p.x) += 1;
        if (p == target) reach = s + 1;
    }
    if (!reach)
        throw std::domain_error("insert_east_at_diagonal: path does not pass through (-i,-i)");
    NEPath out;
    out.origin = cfg.shifted_start();
    out.steps.reserve(W.steps.size() + 1);
    out.steps.insert(out.steps.end(), W.steps.begin(), W.steps.begin() + static_cast<std::ptrdiff_t>(*reach));
    out.steps.push_back(NEStep::East);
    out.steps.insert(out.steps.end(), W.steps.begin() + static_cast<std::ptrdiff_t>(*reach), W.steps.end());
    return out;
}

/// Backward direction: locate the first diagonal visit (-i, -i) of W',
/// remove the East step leading to it, and start one unit further right.
/// Returns the recovered pair (W, i).
inline std::pair<NEPath, long long> remove_east_at_diagonal(const NEPath& W, const DiagonalPairConfig& cfg) {
    if (!(W.origin == cfg.shifted_start()) || !(W.end() == cfg.end()))
        throw std::domain_error("remove_east_at_diagonal: path endpoints do not match the configuration");
    if (!W.is_upper())
        throw std::domain_error("remove_east_at_diagonal: path dips below the diagonal");
    std::optional<std::size_t> touch;
    LatticePoint p = W.origin;
    // The shifted origin is strictly above the diagonal (d + m - 2l + 1 >= 1),
    // so the first diagonal visit, if any, is reached by an East step.
    for (std::size_t s = 0; s < W.steps.size() && !touch; ++s) {
        (W.steps[s] == NEStep::North ? p.y : p.x) += 1;
        if (p.x == p.y) touch = s + 1;
    }
    if (!touch)
        throw std::domain_error("remove_east_at_diagonal: path never touches the diagonal");
    const long long i = -p.x;
    NEPath out;
    out.origin = cfg.start();
    out.steps.reserve(W.steps.size() - 1);
    out.steps.insert(out.steps.end(), W.steps.begin(), W.steps.begin() + static_cast<std::ptrdiff_t>(*touch - 1));
    out.steps.insert(out.steps.end(), W.steps.begin() + static_cast<std::ptrdiff_t>(*touch), W.steps.end());
    return {out, i};
}

/// Under a valid witness, the length-k interval of D starting at step s
/// (1 <= s <= k+1) maps to the k-subset {pi(s), ..., pi(s+k-1)} of
/// Z_{2k+1}, pi being the witness permutation for D. Across all (D, s)
/// this is a bijection onto the zero-free k-subsets, and an interval with
/// l falls lands on a set with exactly l elements in {k+1..2k}.
inline std::vector<int> interval_to_subset(const DyckPath& D, int s, const WreathWitness& witness) {
    const int k = D.semilength();
    if (witness.k != k)
        throw std::domain_error("interval_to_subset: witness is for a different semilength");
    if (s < 1 || s > k + 1)
        throw std::domain_error("interval_to_subset: need 1 <= s <= k+1");
    if (!witness.contains(D))
        throw std::domain_error("interval_to_subset: witness has no assignment for " + D.to_string());
    const Permutation& pi = witness.at(D);
    std::vector<int> subset;
    subset.reserve(static_cast<std::size_t>(k));
    for (int j = s; j < s + k; ++j) subset.push_back(pi.at(j));
    std::sort(subset.begin(), subset.end());
    return subset;
}

} // namespace dyckstat
