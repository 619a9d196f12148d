#pragma once

#include "cantorgauge/bracket.hpp"

namespace cantorgauge {

/// Closed interval [lo, hi] in set coordinates.
struct Region {
    double lo = 0.0;
    double hi = 1.0;

    double midpoint() const { return 0.5 * (lo + hi); }
    double diameter() const { return hi - lo; }

    /// Midpoint-preserving dilation: a·I(w, δ) = I(w, a·δ).
    Region dilated(double factor) const {
        const double w = midpoint();
        const double half = 0.5 * factor * diameter();
        return {w - half, w + half};
    }
};

/// Certain containment of the enclosure [left, right] in `region`.
inline bool certainly_inside(const Bracket& left, const Bracket& right, const Region& region) {
    return left.lo >= region.lo && right.hi <= region.hi;
}

/// Certain disjointness of the enclosure [left, right] from `region`.
inline bool certainly_disjoint(const Bracket& left, const Bracket& right, const Region& region) {
    return right.hi < region.lo || left.lo > region.hi;
}

}  // namespace cantorgauge
