#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>
#include <vector>

#include "dyckstat/dyck.hpp"
#include "dyckstat/errors.hpp"
#include "dyckstat/wreath.hpp"

namespace dyckstat {

/// Ceiling for the witness search (candidate tables grow as C_k * (k!)^2).
inline constexpr int kMaxSearchSemilength = 5;

struct SearchOptions {
    /// Return the lexicographically least witness under the canonical path
    /// and permutation orders, regardless of worker count.
    bool deterministic = true;
    /// Worker threads exploring disjoint top-level branches.
    int threads = 1;
    /// Wall-clock budget in seconds; 0 means unlimited.
    double time_limit_seconds = 0.0;
};

struct SearchStats {
    std::uint64_t candidates_tested = 0; ///< collision checks performed
    std::uint64_t placements = 0;        ///< successful placements (tree nodes)
    std::uint64_t dead_ends = 0;         ///< backtracks with no candidate left
    std::uint64_t max_depth = 0;
    double elapsed_seconds = 0.0;

    void absorb(const SearchStats& other) {
        candidates_tested += other.candidates_tested;
        placements += other.placements;
        dead_ends += other.dead_ends;
        max_depth = std::max(max_depth, other.max_depth);
    }
};

enum class SearchStatus { Found, Exhausted, Timeout };

struct SearchOutcome {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<WreathWitness> witness;
    SearchStats stats;
};

namespace detail {

/// One selectable row of the exact cover: a permutation for the slot's
/// path (plus, in the strong variant, the derived permutation for the
/// reflected partner path) and the k-subsets its wreath covers, kept both
/// as ranks and as a bitmask over the universe.
struct SearchCandidate {
    std::vector<int> images;
    std::vector<int> partner_images; // empty unless the slot carries a partner
    std::vector<std::uint16_t> ranks;
    std::vector<std::uint64_t> mask;
};

struct SearchSlot {
    std::size_t path_index = 0;                  // into the full lex path list
    std::optional<std::size_t> partner_index;    // strong variant, non-symmetric paths
    std::vector<SearchCandidate> candidates;
};

struct SearchProblem {
    int k = 0;
    int n = 0;
    int universe = 0;
    std::vector<DyckPath> paths;
    std::vector<SearchSlot> slots;
};

inline std::vector<std::uint16_t> wreath_ranks(const std::vector<int>& images, int k,
                                               const std::vector<std::uint16_t>& rank_of_mask) {
    const int n = static_cast<int>(images.size());
    std::vector<std::uint16_t> ranks;
    ranks.reserve(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) {
        std::uint32_t mask = 0;
        for (long long t = 1; t <= k; ++t) {
            const long long p = (((i - 1) * k + t) % n + n) % n;
            mask |= std::uint32_t{1} << images[static_cast<std::size_t>(p)];
        }
        ranks.push_back(rank_of_mask[mask]);
    }
    return ranks;
}

inline std::vector<int> derived_partner_images(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    std::vector<int> partner(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        partner[static_cast<std::size_t>(j)] = (n - images[static_cast<std::size_t>((n - j) % n)]) % n;
    return partner;
}

inline bool satisfies_self_reflection(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    for (int j = 0; j < n; ++j)
        if ((images[static_cast<std::size_t>(j)] + images[static_cast<std::size_t>((n - j) % n)]) % n != 0)
            return false;
    return true;
}

/// All rise/fall-compatible permutations for a path: pi(0) = 0, rises carry
/// a permutation of {1..k}, falls one of {k+1..2k}. Sorted by image
/// sequence, so candidate index order is the documented value order.
inline std::vector<std::vector<int>> compatible_permutations(const DyckPath& D) {
    const int k = D.semilength();
    const int n = 2 * k + 1;
    std::vector<int> rises, falls;
    for (int j = 1; j <= 2 * k; ++j)
        (D.is_rise(j) ? rises : falls).push_back(j);
    std::vector<int> low(static_cast<std::size_t>(k)), high(static_cast<std::size_t>(k));
    for (int v = 0; v < k; ++v) {
        low[static_cast<std::size_t>(v)] = v + 1;
        high[static_cast<std::size_t>(v)] = k + v + 1;
    }
    std::vector<std::vector<int>> result;
    std::vector<int> rho = low;
    do {
        std::vector<int> sigma = high;
        do {
            std::vector<int> images(static_cast<std::size_t>(n), 0);
            for (std::size_t t = 0; t < rises.size(); ++t)
                images[static_cast<std::size_t>(rises[t])] = rho[t];
            for (std::size_t t = 0; t < falls.size(); ++t)
                images[static_cast<std::size_t>(falls[t])] = sigma[t];
            result.push_back(std::move(images));
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    } while (std::next_permutation(rho.begin(), rho.end()));
    std::sort(result.begin(), result.end());
    return result;
}

inline SearchProblem build_problem(int k, WitnessVariant variant) {
    SearchProblem prob;
    prob.k = k;
    prob.n = 2 * k + 1;
    prob.paths = enumerate_dyck(k);

    // Rank every k-subset mask of Z_n.
    std::vector<std::uint16_t> rank_of_mask(std::size_t{1} << prob.n, 0);
    int universe = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << prob.n); ++mask)
        if (std::popcount(mask) == k) rank_of_mask[mask] = static_cast<std::uint16_t>(universe++);
    prob.universe = universe;

    for (std::size_t p = 0; p < prob.paths.size(); ++p) {
        const DyckPath& D = prob.paths[p];
        const DyckPath R = reflect(D);
        SearchSlot slot;
        slot.path_index = p;
        if (variant == WitnessVariant::Strong) {
            if (R < D) continue; // handled as the partner of its reflection
            if (!(R == D)) {
                auto it = std::lower_bound(prob.paths.begin(), prob.paths.end(), R);
                slot.partner_index = static_cast<std::size_t>(it - prob.paths.begin());
            }
        }
        const std::size_t words = (static_cast<std::size_t>(universe) + 63) / 64;
        for (std::vector<int>& images : compatible_permutations(D)) {
            SearchCandidate cand;
            if (variant == WitnessVariant::Strong && !slot.partner_index && !satisfies_self_reflection(images))
                continue;
            cand.ranks = wreath_ranks(images, k, rank_of_mask);
            if (slot.partner_index) {
                cand.partner_images = derived_partner_images(images);
                std::vector<std::uint16_t> partner_ranks = wreath_ranks(cand.partner_images, k, rank_of_mask);
                std::vector<std::uint16_t> combined = cand.ranks;
                combined.insert(combined.end(), partner_ranks.begin(), partner_ranks.end());
                std::sort(combined.begin(), combined.end());
                if (std::adjacent_find(combined.begin(), combined.end()) != combined.end())
                    continue; // the two wreaths overlap each other
                cand.ranks = std::move(combined);
            }
            cand.mask.assign(words, 0);
            for (std::uint16_t r : cand.ranks) cand.mask[r >> 6] |= std::uint64_t{1} << (r & 63);
            cand.images = std::move(images);
            slot.candidates.push_back(std::move(cand));
        }
        prob.slots.push_back(std::move(slot));
    }
    return prob;
}

class CoverBitmap {
public:
    explicit CoverBitmap(int bits) : words_((static_cast<std::size_t>(bits) + 63) / 64, 0) {}

    bool intersects(const std::vector<std::uint64_t>& mask) const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & mask[w]) return true;
        return false;
    }
    void set(const std::vector<std::uint64_t>& mask) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= mask[w];
    }
    void clear(const std::vector<std::uint64_t>& mask) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~mask[w];
    }
    bool test(int r) const { return words_[static_cast<std::size_t>(r) >> 6] & (std::uint64_t{1} << (r & 63)); }

private:
    std::vector<std::uint64_t> words_;
};

/// Sequential DFS over the slots in order, candidates in index order, with
/// forward filtering of the remaining slots' candidate lists and a column
/// check: a placement is rejected as soon as some remaining slot has no
/// compatible candidate or some uncovered subset has lost all support.
/// The abort callback is polled so parallel drivers and timeouts can cut a
/// branch short; an aborted run unwinds with no result.
class BranchSearcher {
public:
    BranchSearcher(const SearchProblem& prob, std::function<bool()> abort_check)
        : prob_(prob),
          abort_(std::move(abort_check)),
          cover_(prob.universe),
          column_support_(static_cast<std::size_t>(prob.universe), 0),
          alive_(prob.slots.size() + 1, std::vector<std::vector<std::uint32_t>>(prob.slots.size())) {}

    /// Runs the DFS from scratch, optionally fixing the top-level choice
    /// (used by the parallel driver to split the tree).
    std::optional<std::vector<std::uint32_t>> search_from_root(std::optional<std::uint32_t> first_choice) {
        if (prob_.slots.empty()) return std::vector<std::uint32_t>{};
        for (std::size_t s = 0; s < prob_.slots.size(); ++s) {
            auto& list = alive_[0][s];
            list.clear();
            if (s == 0 && first_choice) {
                list.push_back(*first_choice);
            } else {
                list.resize(prob_.slots[s].candidates.size());
                std::iota(list.begin(), list.end(), 0);
            }
        }
        chosen_.assign(prob_.slots.size(), 0);
        aborted_ = false;
        if (run(0)) return chosen_;
        return std::nullopt;
    }

    SearchStats stats;

private:
    bool run(std::size_t depth) {
        if (depth == prob_.slots.size()) return true;
        if (abort_ && abort_()) {
            aborted_ = true;
            return false;
        }
        stats.max_depth = std::max(stats.max_depth, static_cast<std::uint64_t>(depth));
        const SearchSlot& slot = prob_.slots[depth];
        for (std::uint32_t c : alive_[depth][depth]) {
            const SearchCandidate& cand = slot.candidates[c];
            ++stats.candidates_tested;
            if (cover_.intersects(cand.mask)) continue;
            cover_.set(cand.mask);
            ++stats.placements;
            if (filter_level(depth)) {
                chosen_[depth] = c;
                if (run(depth + 1)) return true;
            } else {
                ++stats.dead_ends;
            }
            cover_.clear(cand.mask);
            if (aborted_) return false;
        }
        return false;
    }

    /// Filters the alive lists of slots beyond `depth` against the current
    /// cover, tallying how many surviving candidates support each subset.
    /// False when some slot runs dry or an uncovered subset loses support.
    bool filter_level(std::size_t depth) {
        std::fill(column_support_.begin(), column_support_.end(), 0);
        for (std::size_t s = depth + 1; s < prob_.slots.size(); ++s) {
            const auto& src = alive_[depth][s];
            auto& dst = alive_[depth + 1][s];
            dst.clear();
            for (std::uint32_t idx : src) {
                ++stats.candidates_tested;
                const SearchCandidate& cand = prob_.slots[s].candidates[idx];
                if (!cover_.intersects(cand.mask)) {
                    dst.push_back(idx);
                    for (std::uint16_t r : cand.ranks) ++column_support_[r];
                }
            }
            if (dst.empty()) return false;
        }
        for (int r = 0; r < prob_.universe; ++r)
            if (column_support_[static_cast<std::size_t>(r)] == 0 && !cover_.test(r)) return false;
        return true;
    }

    const SearchProblem& prob_;
    std::function<bool()> abort_;
    CoverBitmap cover_;
    std::vector<int> column_support_;
    std::vector<std::vector<std::vector<std::uint32_t>>> alive_; // depth -> slot -> candidate indices
    std::vector<std::uint32_t> chosen_;
    bool aborted_ = false;
};

inline WreathWitness witness_from_choices(const SearchProblem& prob,
                                          const std::vector<std::uint32_t>& chosen) {
    std::vector<std::optional<Permutation>> perms(prob.paths.size());
    for (std::size_t s = 0; s < prob.slots.size(); ++s) {
        const SearchSlot& slot = prob.slots[s];
        const SearchCandidate& cand = slot.candidates[chosen[s]];
        perms[slot.path_index] = Permutation(cand.images);
        if (slot.partner_index)
            perms[*slot.partner_index] = Permutation(cand.partner_images);
    }
    WreathWitness w;
    w.k = prob.k;
    w.assignments.reserve(prob.paths.size());
    for (std::size_t p = 0; p < prob.paths.size(); ++p)
        w.assignments.emplace_back(prob.paths[p], std::move(*perms[p]));
    return w;
}

} // namespace detail

/// Backtracking exact-cover search for a wreath-decomposition witness.
///
/// Universe: all k-subsets of Z_{2k+1}. Each Dyck path contributes its
/// rise/fall-compatible permutations as candidate rows; selecting one row
/// per path must tile the universe with the catalan(k) wreaths. Variables
/// are processed in lexicographic path order and candidates in
/// lexicographic permutation order, so the deterministic mode returns the
/// lexicographically least witness. The strong variant searches one
/// representative per reflection pair and derives the partner permutation
/// from the reflection identity; self-symmetric paths keep only
/// self-consistent candidates.
///
/// The result is never self-certified: callers run verify_witness as an
/// independent pass.
inline SearchOutcome search_witness(int k, WitnessVariant variant, const SearchOptions& options = {}) {
    if (k < 1) throw std::domain_error("search_witness: need k >= 1");
    if (k > kMaxSearchSemilength)
        throw capacity_error("search_witness: semilength " + std::to_string(k) +
                             " exceeds search ceiling " + std::to_string(kMaxSearchSemilength));

    const auto t0 = std::chrono::steady_clock::now();
    const detail::SearchProblem prob = detail::build_problem(k, variant);
    auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };

    std::atomic<bool> timed_out{false};
    auto abort_check = [&]() -> bool {
        if (options.time_limit_seconds > 0 && elapsed() > options.time_limit_seconds) {
            timed_out.store(true, std::memory_order_relaxed);
            return true;
        }
        return timed_out.load(std::memory_order_relaxed);
    };

    SearchOutcome outcome;
    const int threads = std::max(1, options.threads);
    const std::size_t top_branches = prob.slots.empty() ? 0 : prob.slots[0].candidates.size();

    if (threads == 1 || top_branches <= 1) {
        detail::BranchSearcher searcher(prob, abort_check);
        auto chosen = searcher.search_from_root(std::nullopt);
        outcome.stats = searcher.stats;
        if (chosen) {
            outcome.status = SearchStatus::Found;
            outcome.witness = detail::witness_from_choices(prob, *chosen);
        } else {
            outcome.status = timed_out.load() ? SearchStatus::Timeout : SearchStatus::Exhausted;
        }
    } else {
        // Workers claim top-level branches in index order. In deterministic
        // mode a branch may only be aborted once some lower-indexed branch
        // has found a witness; the least found branch index wins.
        std::atomic<std::size_t> next_branch{0};
        std::atomic<std::size_t> best_found{top_branches};
        std::atomic<bool> stop_all{false};
        std::vector<std::optional<std::vector<std::uint32_t>>> results(top_branches);
        std::vector<SearchStats> worker_stats(static_cast<std::size_t>(threads));
        std::mutex results_mutex;

        auto worker = [&](std::size_t wid) {
            while (true) {
                const std::size_t b = next_branch.fetch_add(1);
                if (b >= top_branches) return;
                auto branch_abort = [&]() -> bool {
                    if (abort_check()) return true;
                    if (stop_all.load(std::memory_order_relaxed)) return true;
                    return options.deterministic && b > best_found.load(std::memory_order_relaxed);
                };
                detail::BranchSearcher searcher(prob, branch_abort);
                auto chosen = searcher.search_from_root(static_cast<std::uint32_t>(b));
                worker_stats[wid].absorb(searcher.stats);
                if (chosen) {
                    std::scoped_lock lock(results_mutex);
                    results[b] = std::move(chosen);
                    std::size_t cur = best_found.load();
                    while (b < cur && !best_found.compare_exchange_weak(cur, b)) {
                    }
                    if (!options.deterministic) stop_all.store(true, std::memory_order_relaxed);
                }
            }
        };

        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, static_cast<std::size_t>(t));
        for (auto& th : pool) th.join();
        for (const auto& ws : worker_stats) outcome.stats.absorb(ws);

        std::optional<std::size_t> winner;
        for (std::size_t b = 0; b < top_branches; ++b)
            if (results[b]) {
                winner = b;
                break;
            }
        // A timeout leaves lower-indexed branches unresolved, so in
        // deterministic mode a witness found after the deadline cannot be
        // certified as the least one.
        if (winner && !(options.deterministic && timed_out.load())) {
            outcome.status = SearchStatus::Found;
            outcome.witness = detail::witness_from_choices(prob, *results[*winner]);
        } else {
            outcome.status = timed_out.load() ? SearchStatus::Timeout : SearchStatus::Exhausted;
        }
    }
    outcome.stats.elapsed_seconds = elapsed();
    return outcome;
}

} // namespace dyckstat
