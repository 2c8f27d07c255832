#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dyckstat/bigcount.hpp"
#include "dyckstat/dyck.hpp"
#include "dyckstat/errors.hpp"

namespace dyckstat {

struct LatticePoint {
    long long x = 0;
    long long y = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend LatticePoint operator+(LatticePoint p, LatticePoint q) { return {p.x + q.x, p.y + q.y}; }

    /// Strictly below the diagonal y = x.
    bool below_diagonal() const { return y < x; }
};

enum class NEStep : std::uint8_t { North, East };

/// A lattice path of North (0,1) and East (1,0) steps with an explicit
/// origin. The type itself permits points below the diagonal; operations
/// with an upper-path precondition call is_upper() and reject violations.
struct NEPath {
    LatticePoint origin;
    std::vector<NEStep> steps;

    LatticePoint end() const {
        LatticePoint p = origin;
        for (NEStep s : steps)
            (s == NEStep::North ? p.y : p.x) += 1;
        return p;
    }

    long long north_count() const {
        long long n = 0;
        for (NEStep s : steps) n += (s == NEStep::North);
        return n;
    }
    long long east_count() const { return static_cast<long long>(steps.size()) - north_count(); }

    /// Height of the origin above the diagonal.
    long long origin_excess() const { return origin.y - origin.x; }

    /// True iff no visited point (origin included) is below the diagonal y = x.
    bool is_upper() const {
        LatticePoint p = origin;
        if (p.below_diagonal()) return false;
        for (NEStep s : steps) {
            (s == NEStep::North ? p.y : p.x) += 1;
            if (p.below_diagonal()) return false;
        }
        return true;
    }

    /// True iff some visited point is strictly below the diagonal.
    bool dips_below_diagonal() const { return !is_upper(); }

    /// All 1 + |steps| visited points, origin first.
    std::vector<LatticePoint> visited() const {
        std::vector<LatticePoint> pts;
        pts.reserve(steps.size() + 1);
        LatticePoint p = origin;
        pts.push_back(p);
        for (NEStep s : steps) {
            (s == NEStep::North ? p.y : p.x) += 1;
            pts.push_back(p);
        }
        return pts;
    }

    std::string step_string() const {
        std::string out;
        out.reserve(steps.size());
        for (NEStep s : steps) out.push_back(s == NEStep::North ? 'N' : 'E');
        return out;
    }

    friend bool operator==(const NEPath&, const NEPath&) = default;
};

/// Unconstrained NE paths from p1 to p2: binom(alpha+beta, beta), or 0 when
/// either displacement is negative.
inline BigCount count_ne_free(LatticePoint p1, LatticePoint p2) {
    const long long alpha = p2.y - p1.y;
    const long long beta = p2.x - p1.x;
    if (alpha < 0 || beta < 0) return 0;
    return binomial(alpha + beta, beta);
}

/// NE upper paths from p1 to p2 (never below y = x), counted by the
/// reflection principle:
///
///   binom(alpha+beta, beta) - binom(alpha+beta, beta - delta - 1),
///   delta = y1 - x1, alpha = y2 - y1, beta = x2 - x1.
///
/// Total: out-of-range configurations return 0 rather than erroring, since
/// the interval-statistic sums iterate over legitimately vanishing factors.
/// Invariant under diagonal translation of both endpoints.
inline BigCount count_ne_upper(LatticePoint p1, LatticePoint p2) {
    if (p1.x > p2.x || p1.y > p2.y || p1.x > p1.y || p2.x > p2.y) return 0;
    const long long delta = p1.y - p1.x;
    const long long alpha = p2.y - p1.y;
    const long long beta = p2.x - p1.x;
    return binomial(alpha + beta, beta) - binomial(alpha + beta, beta - delta - 1);
}

/// Dyck paths correspond to NE upper paths from (0,0) to (k,k):
/// rise <-> North, fall <-> East.
inline NEPath dyck_to_ne(const DyckPath& D) {
    NEPath W;
    W.origin = {0, 0};
    W.steps.reserve(static_cast<std::size_t>(D.length()));
    for (int j = 1; j <= D.length(); ++j)
        W.steps.push_back(D.is_rise(j) ? NEStep::North : NEStep::East);
    return W;
}

/// Inverse of dyck_to_ne. Requires an NE upper path from (0,0) to (k,k).
inline DyckPath ne_to_dyck(const NEPath& W) {
    if (W.origin != LatticePoint{0, 0})
        throw std::domain_error("ne_to_dyck: path must start at (0,0)");
    const LatticePoint e = W.end();
    if (e.x != e.y)
        throw std::domain_error("ne_to_dyck: path must end on the diagonal");
    if (!W.is_upper())
        throw std::domain_error("ne_to_dyck: path dips below the diagonal");
    std::vector<DyckStep> steps;
    steps.reserve(W.steps.size());
    for (NEStep s : W.steps)
        steps.push_back(s == NEStep::North ? DyckStep::Rise : DyckStep::Fall);
    return DyckPath(steps);
}

/// Ceiling on alpha+beta for exhaustive NE-path enumeration.
inline constexpr long long kMaxBoxSteps = 20;

/// All NE upper paths from p1 to p2, in lexicographic step order with
/// North < East. Empty for out-of-range configurations, mirroring
/// count_ne_upper; capacity error when the box exceeds kMaxBoxSteps steps.
inline std::vector<NEPath> enumerate_ne_upper(LatticePoint p1, LatticePoint p2) {
    std::vector<NEPath> out;
    if (p1.x > p2.x || p1.y > p2.y || p1.x > p1.y || p2.x > p2.y) return out;
    const long long total = (p2.x - p1.x) + (p2.y - p1.y);
    if (total > kMaxBoxSteps)
        throw capacity_error("enumerate_ne_upper: box of " + std::to_string(total) +
                             " steps exceeds ceiling " + std::to_string(kMaxBoxSteps));
    NEPath path;
    path.origin = p1;
    auto walk = [&](auto&& self, LatticePoint p) -> void {
        if (p == p2) {
            out.push_back(path);
            return;
        }
        if (p.y < p2.y) {
            path.steps.push_back(NEStep::North);
            self(self, {p.x, p.y + 1});
            path.steps.pop_back();
        }
        if (p.x < p2.x && p.x + 1 <= p.y) {
            path.steps.push_back(NEStep::East);
            self(self, {p.x + 1, p.y});
            path.steps.pop_back();
        }
    };
    walk(walk, p1);
    return out;
}

} // namespace dyckstat
