#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "dyckstat/bigcount.hpp"
#include "dyckstat/errors.hpp"

namespace dyckstat {

enum class DyckStep : std::uint8_t { Rise, Fall };

/// A Dyck path of semilength k: 2k steps, every prefix has at least as many
/// rises as falls, and rises and falls balance out. Steps are packed one bit
/// per step (Rise = 1, Fall = 0) so interval scans reduce to popcounts.
///
/// Steps are 1-based in the public interface. Textual form uses 'U' for a
/// rise and 'D' for a fall, e.g. "UUDD".
class DyckPath {
public:
    /// Paths longer than the 64-bit step word are not representable.
    static constexpr int kMaxSemilength = 32;

    /// Empty path (k = 0).
    DyckPath() : k_(0), bits_(0) {}

    explicit DyckPath(const std::vector<DyckStep>& steps) {
        if (steps.size() % 2 != 0)
            throw std::domain_error("DyckPath: odd number of steps");
        const int k = static_cast<int>(steps.size() / 2);
        if (k > kMaxSemilength)
            throw capacity_error("DyckPath: more than 64 steps");
        std::uint64_t bits = 0;
        int height = 0;
        for (std::size_t i = 0; i < steps.size(); ++i) {
            if (steps[i] == DyckStep::Rise) {
                bits |= std::uint64_t{1} << i;
                ++height;
            } else {
                --height;
            }
            if (height < 0)
                throw std::domain_error("DyckPath: prefix with more falls than rises");
        }
        if (height != 0)
            throw std::domain_error("DyckPath: rises and falls do not balance");
        k_ = k;
        bits_ = bits;
    }

    int semilength() const { return k_; }
    int length() const { return 2 * k_; }

    /// Step j for 1 <= j <= 2k.
    DyckStep step(int j) const {
        if (j < 1 || j > 2 * k_)
            throw std::domain_error("DyckPath::step: index out of range");
        return (bits_ >> (j - 1)) & 1 ? DyckStep::Rise : DyckStep::Fall;
    }

    bool is_rise(int j) const { return step(j) == DyckStep::Rise; }

    /// Number of rises among steps s..s+m-1 (1-based, m may be 0).
    int rises_in(int s, int m) const {
        if (m <= 0) return 0;
        const std::uint64_t window = m >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
        return std::popcount(bits_ & (window << (s - 1)));
    }

    std::string to_string() const {
        std::string out(static_cast<std::size_t>(2 * k_), 'D');
        for (int j = 1; j <= 2 * k_; ++j)
            if (is_rise(j)) out[j - 1] = 'U';
        return out;
    }

    friend bool operator==(const DyckPath&, const DyckPath&) = default;

    /// Lexicographic on the step sequence with Rise < Fall (shorter paths
    /// first). This is the canonical enumeration order.
    friend std::strong_ordering operator<=>(const DyckPath& a, const DyckPath& b) {
        if (a.k_ != b.k_) return a.k_ <=> b.k_;
        for (int j = 1; j <= 2 * a.k_; ++j) {
            const bool ra = a.is_rise(j), rb = b.is_rise(j);
            if (ra != rb) return ra ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

private:
    friend DyckPath reflect(const DyckPath&);
    friend void enumerate_dyck_impl(int, std::vector<DyckPath>&);

    DyckPath(int k, std::uint64_t bits) : k_(k), bits_(bits) {}

    int k_;
    std::uint64_t bits_;
};

inline DyckPath parse_dyck(const std::string& text) {
    std::vector<DyckStep> steps;
    steps.reserve(text.size());
    for (char c : text) {
        if (c == 'U') steps.push_back(DyckStep::Rise);
        else if (c == 'D') steps.push_back(DyckStep::Fall);
        else throw std::domain_error("parse_dyck: expected 'U' or 'D', got '" + std::string(1, c) + "'");
    }
    return DyckPath(steps);
}

/// k-th Catalan number, binom(2k, k) / (k + 1). Counts Dyck k-paths.
inline BigCount catalan(long long k) {
    if (k < 0) throw std::domain_error("catalan: negative argument");
    return binomial(2 * k, k) / (k + 1);
}

/// Hard ceiling for exhaustive Dyck-path enumeration (C_14 = 2674440 paths).
/// Formula-based evaluation has no such bound.
inline constexpr int kMaxEnumerationSemilength = 14;

inline void enumerate_dyck_impl(int k, std::vector<DyckPath>& out) {
    const int n = 2 * k;
    std::uint64_t bits = 0;
    // DFS trying Rise before Fall, so paths come out in lexicographic order.
    auto emit = [&](auto&& self, int pos, int height) -> void {
        if (pos == n) {
            out.emplace_back(DyckPath(k, bits));
            return;
        }
        // A rise is feasible iff the steps left after it can return to height 0.
        if (n - pos - 1 >= height + 1) {
            bits |= std::uint64_t{1} << pos;
            self(self, pos + 1, height + 1);
            bits &= ~(std::uint64_t{1} << pos);
        }
        if (height > 0) self(self, pos + 1, height - 1);
    };
    emit(emit, 0, 0);
}

/// All Dyck k-paths in lexicographic order (Rise < Fall); |result| = catalan(k).
inline std::vector<DyckPath> enumerate_dyck(int k) {
    if (k < 0) throw std::domain_error("enumerate_dyck: negative semilength");
    if (k > kMaxEnumerationSemilength)
        throw capacity_error("enumerate_dyck: semilength " + std::to_string(k) +
                             " exceeds enumeration ceiling " + std::to_string(kMaxEnumerationSemilength));
    std::vector<DyckPath> out;
    enumerate_dyck_impl(k, out);
    return out;
}

/// Number of start positions s in 1..2k-m+1 whose length-m window of D
/// contains exactly l falls. m = 0 counts the 2k+1 empty windows, so the
/// whole-library convention N_k(0,0) = (2k+1) * C_k falls out of the scan.
inline BigCount interval_count(const DyckPath& D, long long m, long long l) {
    const long long n = D.length();
    if (l < 0 || l > m || m > n)
        throw std::domain_error("interval_count: need 0 <= l <= m <= 2k");
    long long hits = 0;
    for (long long s = 1; s + m - 1 <= n; ++s) {
        const long long falls = m - D.rises_in(static_cast<int>(s), static_cast<int>(m));
        if (falls == l) ++hits;
    }
    return hits;
}

/// N_k(m, l) by direct enumeration: the independent oracle for the closed
/// forms. Subject to the enumeration ceiling.
inline BigCount interval_stat_brute(int k, long long m, long long l) {
    if (l < 0 || l > m || m > 2LL * k)
        throw std::domain_error("interval_stat_brute: need 0 <= l <= m <= 2k");
    BigCount total = 0;
    for (const DyckPath& D : enumerate_dyck(k))
        total += interval_count(D, m, l);
    return total;
}

/// Reflection in the vertical line through the path's midpoint: step j of
/// the result is the opposite of step 2k+1-j. An involution.
inline DyckPath reflect(const DyckPath& D) {
    const int n = D.length();
    std::uint64_t bits = 0;
    for (int j = 1; j <= n; ++j)
        if (!D.is_rise(n + 1 - j)) bits |= std::uint64_t{1} << (j - 1);
    return DyckPath(D.semilength(), bits);
}

} // namespace dyckstat
