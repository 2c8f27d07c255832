#pragma once

// Test-side oracles and generators, kept independent of the library code
// paths they are used to check.

#include <random>
#include <vector>

#include "dyckstat/ballot.hpp"
#include "dyckstat/dyck.hpp"

namespace testutil {

/// Every NE step sequence from p1 to p2, diagonal constraint ignored.
inline std::vector<dyckstat::NEPath> all_ne_free_paths(dyckstat::LatticePoint p1,
                                                       dyckstat::LatticePoint p2) {
    using dyckstat::NEStep;
    std::vector<dyckstat::NEPath> out;
    if (p2.x < p1.x || p2.y < p1.y) return out;
    dyckstat::NEPath scratch;
    scratch.origin = p1;
    auto walk = [&](auto&& self, long long x, long long y) -> void {
        if (x == p2.x && y == p2.y) {
            out.push_back(scratch);
            return;
        }
        if (y < p2.y) {
            scratch.steps.push_back(NEStep::North);
            self(self, x, y + 1);
            scratch.steps.pop_back();
        }
        if (x < p2.x) {
            scratch.steps.push_back(NEStep::East);
            self(self, x + 1, y);
            scratch.steps.pop_back();
        }
    };
    walk(walk, p1.x, p1.y);
    return out;
}

/// Uniform random Dyck path via the cycle lemma: shuffle k+1 rises and k
/// falls, rotate to start just past the last prefix-sum minimum, drop the
/// leading rise. The DyckPath constructor re-validates the result.
inline dyckstat::DyckPath random_dyck(int k, std::mt19937& rng) {
    using dyckstat::DyckStep;
    const int n = 2 * k + 1;
    std::vector<int> delta(static_cast<std::size_t>(n), -1);
    for (int i = 0; i <= k; ++i) delta[static_cast<std::size_t>(i)] = 1;
    std::shuffle(delta.begin(), delta.end(), rng);
    int sum = 0, min_sum = n + 1, pivot = 0;
    for (int j = 0; j < n; ++j) {
        sum += delta[static_cast<std::size_t>(j)];
        if (sum <= min_sum) {
            min_sum = sum;
            pivot = j + 1;
        }
    }
    std::vector<DyckStep> steps;
    steps.reserve(static_cast<std::size_t>(2 * k));
    for (int t = 1; t < n; ++t)
        steps.push_back(delta[static_cast<std::size_t>((pivot + t) % n)] == 1 ? DyckStep::Rise
                                                                              : DyckStep::Fall);
    return dyckstat::DyckPath(steps);
}

} // namespace testutil
