#pragma once

#include <type_traits>
#include <vector>

namespace dyckstat {

/// Calls fn once per k-subset of {0, ..., n-1}, as a sorted index vector,
/// in lexicographic order. fn may return void, or bool (false stops early).
template <typename Fn>
void for_each_k_subset(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    auto invoke = [&]() -> bool {
        if constexpr (std::is_void_v<decltype(fn(idx))>) {
            fn(idx);
            return true;
        } else {
            return fn(idx);
        }
    };
    while (true) {
        if (!invoke()) return;
        // advance to the next combination
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace dyckstat
