#pragma once

#include <cstdint>
#include <vector>

#include "cantorgauge/bracket.hpp"
#include "cantorgauge/gap_spec.hpp"
#include "cantorgauge/region.hpp"

namespace cantorgauge {

/// Bracketed length and endpoint coordinates of a basic or near-basic
/// interval. `address` anchors the left endpoint's basic interval.
struct IntervalGeometry {
    Address address;
    Bracket length;
    Bracket left;

    Bracket right() const { return add(left, length); }
    Bracket midpoint() const { return scale(add(add(left, left), length), 0.5); }
    bool certainly_in(const Region& r) const { return certainly_inside(left, right(), r); }
};

/// Raw truncated-sum bracket of |I_j|: lower = exact sum of the subtree's gap
/// lengths down to `depth` levels below j, upper = lower + tail bound.
/// Enumerates 2^depth (n-ary: n^depth) gaps; depth is capped accordingly.
Bracket gap_sum_bracket(const GapSpec& spec, const Address& j, int depth);

/// Geometry of I_j. The length bracket is the intersection of the raw
/// truncated-sum bracket with the spec's analytic length bracket, so it is
/// valid at every depth and never wider than the family's closed bounds.
IntervalGeometry interval_geometry(const GapSpec& spec, const Address& j, int depth);

/// Geometry of the near-basic interval spanning from the left endpoint of
/// I_left_at to the right endpoint of I_right_at.
/// Throws DomainError when the span is certainly inverted.
IntervalGeometry near_basic_interval(const GapSpec& spec, const Address& left_at,
                                     const Address& right_at, int depth);

/// Bulk geometry of one construction level: lengths, endpoints and the exact
/// separating gap after each interval, indexed by the level position l.
struct LevelGeometry {
    int level = 0;
    std::vector<Bracket> length;
    std::vector<Bracket> left;
    std::vector<Bracket> right;
    std::vector<double> gap_after;  // between l and l+1; size count()-1

    std::size_t count() const { return length.size(); }

    static LevelGeometry build(const GapSpec& spec, int level);
};

/// Contiguous run [first, last] of level intervals selected by a region.
struct LevelSelection {
    std::uint64_t first = 0;
    std::uint64_t last = 0;  // inclusive
    bool empty = true;
    /// ν-mass of outer minus inner selection: how much was snapped outward
    /// because the region cuts through basic intervals.
    double snapped_mass = 0.0;

    std::uint64_t size() const { return empty ? 0 : last - first + 1; }
};

/// Outer selection: every interval not certainly disjoint from `region`.
LevelSelection select_level(const LevelGeometry& g, const Region& region);

}  // namespace cantorgauge
