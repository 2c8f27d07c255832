#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dyckstat/bigcount.hpp"
#include "dyckstat/dyck.hpp"
#include "dyckstat/formulas.hpp"
#include "dyckstat/subsets.hpp"

namespace dyckstat {

/// A permutation of Z_n, stored as its image sequence: images[j] = pi(j).
class Permutation {
public:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        const int n = static_cast<int>(images_.size());
        if (n == 0) throw std::domain_error("Permutation: empty image list");
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (int v : images_) {
            if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
                throw std::domain_error("Permutation: images are not a bijection on Z_n");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> images(static_cast<std::size_t>(n));
        std::iota(images.begin(), images.end(), 0);
        return Permutation(std::move(images));
    }

    int modulus() const { return static_cast<int>(images_.size()); }

    /// pi(j), with j reduced mod n (so negative arguments are fine).
    int at(long long j) const {
        const long long n = modulus();
        const long long r = ((j % n) + n) % n;
        return images_[static_cast<std::size_t>(r)];
    }

    const std::vector<int>& images() const { return images_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// The wreath generated by a permutation: a collection of k-subsets of Z_n,
/// canonicalized (each set sorted, sets sorted lexicographically).
struct Wreath {
    int n = 0;
    int k = 0;
    std::vector<std::vector<int>> sets;

    friend bool operator==(const Wreath&, const Wreath&) = default;
};

namespace detail {

inline std::string set_to_string(const std::vector<int>& s) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out << ", ";
        out << s[i];
    }
    out << '}';
    return out.str();
}

} // namespace detail

/// Windows {pi((i-1)k+1), ..., pi(ik)}, indices mod n, for i in 0..n-1.
/// Duplicate windows collapse, leaving n / gcd(n, k) distinct sets.
inline Wreath wreath_from_permutation(const Permutation& pi, int k) {
    const int n = pi.modulus();
    if (k < 1 || k > n)
        throw std::domain_error("wreath_from_permutation: need 1 <= k <= n");
    std::set<std::vector<int>> sets;
    for (long long i = 0; i < n; ++i) {
        std::vector<int> window;
        window.reserve(static_cast<std::size_t>(k));
        for (long long t = 1; t <= k; ++t)
            window.push_back(pi.at((i - 1) * k + t));
        std::sort(window.begin(), window.end());
        sets.insert(std::move(window));
    }
    Wreath w;
    w.n = n;
    w.k = k;
    w.sets.assign(sets.begin(), sets.end());
    return w;
}

/// Verdict plus first-failure diagnostic. Converts to true on success.
struct CheckResult {
    bool ok = true;
    std::string message;

    explicit operator bool() const { return ok; }

    static CheckResult pass() { return {}; }
    static CheckResult fail(std::string msg) { return {false, std::move(msg)}; }
};

/// True iff the given wreaths are pairwise disjoint and jointly cover all
/// binom(n, k) k-subsets of Z_n. The diagnostic names the first duplicated
/// set, or the first (lexicographically) missing one.
inline CheckResult verify_decomposition(const std::vector<Wreath>& wreaths, int n, int k) {
    if (n < 1 || k < 1 || k > n)
        return CheckResult::fail("invalid parameters: need 1 <= k <= n");
    std::set<std::vector<int>> covered;
    for (std::size_t w = 0; w < wreaths.size(); ++w) {
        for (const auto& s : wreaths[w].sets) {
            if (static_cast<int>(s.size()) != k)
                return CheckResult::fail("wreath " + std::to_string(w) + " contains a set of size " +
                                         std::to_string(s.size()) + ", expected " + std::to_string(k));
            for (int v : s)
                if (v < 0 || v >= n)
                    return CheckResult::fail("wreath " + std::to_string(w) + " contains element " +
                                             std::to_string(v) + " outside Z_" + std::to_string(n));
            if (!covered.insert(s).second)
                return CheckResult::fail("duplicate set " + detail::set_to_string(s) +
                                         " (second occurrence in wreath " + std::to_string(w) + ")");
        }
    }
    const BigCount want = binomial(n, k);
    if (BigCount(covered.size()) == want) return CheckResult::pass();
    // Locate the first missing subset for the diagnostic, unless the space
    // is too large to walk.
    if (want <= 10'000'000) {
        std::string missing;
        for_each_k_subset(n, k, [&](const std::vector<int>& s) {
            if (!covered.count(s)) {
                missing = detail::set_to_string(s);
                return false;
            }
            return true;
        });
        return CheckResult::fail("incomplete cover: " + std::to_string(covered.size()) + " of " +
                                 want.str() + " sets; first missing is " + missing);
    }
    return CheckResult::fail("incomplete cover: " + std::to_string(covered.size()) + " of " +
                             want.str() + " sets");
}

enum class WitnessVariant { Weak, Strong };

inline std::string to_string(WitnessVariant v) { return v == WitnessVariant::Weak ? "weak" : "strong"; }

inline WitnessVariant parse_variant(const std::string& s) {
    if (s == "weak") return WitnessVariant::Weak;
    if (s == "strong") return WitnessVariant::Strong;
    throw std::domain_error("unknown variant '" + s + "' (expected weak or strong)");
}

/// A full candidate solution to the wreath-decomposition search for
/// n = 2k+1: one permutation of Z_{2k+1} per Dyck k-path, each fixing 0
/// and placing {1..k} exactly under the rises. Assignments are kept in the
/// canonical (lexicographic) path order.
struct WreathWitness {
    int k = 0;
    std::vector<std::pair<DyckPath, Permutation>> assignments;

    /// Permutation assigned to D; domain error if D is not present.
    const Permutation& at(const DyckPath& D) const {
        auto it = std::lower_bound(assignments.begin(), assignments.end(), D,
                                   [](const auto& a, const DyckPath& p) { return a.first < p; });
        if (it == assignments.end() || !(it->first == D))
            throw std::domain_error("WreathWitness: no assignment for path " + D.to_string());
        return it->second;
    }

    bool contains(const DyckPath& D) const {
        auto it = std::lower_bound(assignments.begin(), assignments.end(), D,
                                   [](const auto& a, const DyckPath& p) { return a.first < p; });
        return it != assignments.end() && it->first == D;
    }
};

/// Full witness verification, reporting the first violated condition:
///   1. structure: one assignment per Dyck k-path, in canonical order;
///      permutations of Z_{2k+1} fixing 0; pairwise distinct
///   2. rise/fall: step j of D is a rise iff pi_D(j) in {1..k}
///   3. coverage: the catalan(k) wreaths tile all k-subsets of Z_{2k+1}
///   4. (strong only) pi_D(j) + pi_{reflect(D)}(-j) = 0 (mod 2k+1) for all D, j
/// The verification is independent of how the witness was produced.
inline CheckResult verify_witness(const WreathWitness& w, WitnessVariant variant) {
    if (w.k < 1) return CheckResult::fail("witness must have k >= 1");
    const int k = w.k;
    const int n = 2 * k + 1;

    const std::vector<DyckPath> paths = enumerate_dyck(k);
    if (w.assignments.size() != paths.size())
        return CheckResult::fail("expected " + std::to_string(paths.size()) + " assignments (one per Dyck " +
                                 std::to_string(k) + "-path), found " + std::to_string(w.assignments.size()));
    for (std::size_t i = 0; i < paths.size(); ++i)
        if (!(w.assignments[i].first == paths[i]))
            return CheckResult::fail("assignment " + std::to_string(i) + " is for path " +
                                     w.assignments[i].first.to_string() + ", expected " + paths[i].to_string() +
                                     " in canonical order");

    for (const auto& [D, pi] : w.assignments) {
        if (pi.modulus() != n)
            return CheckResult::fail("path " + D.to_string() + ": permutation is over Z_" +
                                     std::to_string(pi.modulus()) + ", expected Z_" + std::to_string(n));
        if (pi.at(0) != 0)
            return CheckResult::fail("path " + D.to_string() + ": permutation does not fix 0");
        for (int j = 1; j <= 2 * k; ++j) {
            const bool low = pi.at(j) >= 1 && pi.at(j) <= k;
            if (D.is_rise(j) != low)
                return CheckResult::fail("path " + D.to_string() + ": rise/fall condition violated at step " +
                                         std::to_string(j) + " (image " + std::to_string(pi.at(j)) + ")");
        }
    }

    for (std::size_t a = 0; a < w.assignments.size(); ++a)
        for (std::size_t b = a + 1; b < w.assignments.size(); ++b)
            if (w.assignments[a].second == w.assignments[b].second)
                return CheckResult::fail("duplicate permutation assigned to paths " +
                                         w.assignments[a].first.to_string() + " and " +
                                         w.assignments[b].first.to_string());

    std::vector<Wreath> wreaths;
    wreaths.reserve(w.assignments.size());
    for (const auto& [D, pi] : w.assignments)
        wreaths.push_back(wreath_from_permutation(pi, k));
    if (CheckResult cover = verify_decomposition(wreaths, n, k); !cover)
        return CheckResult::fail("coverage: " + cover.message);

    if (variant == WitnessVariant::Strong) {
        for (const auto& [D, pi] : w.assignments) {
            const Permutation& partner = w.at(reflect(D));
            for (int j = 0; j < n; ++j)
                if ((pi.at(j) + partner.at(-j)) % n != 0)
                    return CheckResult::fail("path " + D.to_string() +
                                             ": reflection identity violated at j = " + std::to_string(j));
        }
    }
    return CheckResult::pass();
}

/// Counting prerequisite for witness existence: for every l, the number of
/// zero-free k-subsets of Z_{2k+1} with exactly l elements in {k+1..2k},
/// counted by direct enumeration, must equal N_k(k, l).
inline bool witness_necessary_condition(int k) {
    if (k < 0) throw std::domain_error("witness_necessary_condition: negative k");
    if (k > 12)
        throw capacity_error("witness_necessary_condition: subset enumeration ceiling is k = 12");
    std::vector<BigCount> by_split(static_cast<std::size_t>(k + 1), 0);
    // Subsets of Z_{2k+1} \ {0} = {1..2k}; index i below stands for i+1.
    for_each_k_subset(2 * k, k, [&](const std::vector<int>& s) {
        int high = 0;
        for (int v : s) high += (v + 1 > k);
        by_split[static_cast<std::size_t>(high)] += 1;
    });
    for (int l = 0; l <= k; ++l)
        if (by_split[static_cast<std::size_t>(l)] != interval_stat(k, k, l)) return false;
    return true;
}

} // namespace dyckstat
