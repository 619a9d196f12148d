#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cantorgauge/gap_spec.hpp"
#include "cantorgauge/gauge.hpp"
#include "cantorgauge/geometry.hpp"
#include "cantorgauge/hypotheses.hpp"

namespace cantorgauge {

/// A measure value with method tag, resolution and rigor bracket. Cover
/// methods bound μ_h(J ∩ C) from above (value.hi is the certificate); the
/// mass-principle method bounds it from below (value.lo); the assembled
/// bound methods enclose it two-sidedly.
struct MeasureEstimate {
    Bracket value;
    std::string method;  // uniform-cover | dp-cover | mass-lower | ratio-bounds |
                         // doubling-bounds | closed-form
    int level = -1;
    Region region;
    double max_cover_diameter = 0.0;  // largest interval used by a cover method
    double snapped_mass = 0.0;        // ν-mass added by snapping J outward
    std::vector<std::string> notes;
};

/// Contiguous near-basic span covering level intervals [first, last].
struct CoverSpan {
    std::uint64_t first = 0;
    std::uint64_t last = 0;
};

struct CoverSolution {
    std::vector<CoverSpan> spans;
    Bracket cost;
    int level = 0;
};

/// Σ h(I_j) over the level-k basic intervals meeting J.
MeasureEstimate uniform_cover_sum(const GapSpec& spec, const Gauge& h, const Region& region,
                                  int level);

/// Minimum-cost cover of the level-d basic intervals inside J by disjoint
/// near-basic spans, via the prefix recurrence
///   best(r) = min over l ≤ r of best(l−1) + h(span(l, r)).
/// The value is the exact infimum over this cover class at resolution d; it
/// upper-bounds μ_h(J ∩ C) and is nonincreasing in d. O(N²) gauge
/// evaluations for N selected intervals; N is capped at 2^15.
std::pair<MeasureEstimate, CoverSolution> dp_optimal_cover(const GapSpec& spec, const Gauge& h,
                                                           const Region& region, int level);

/// Mass-distribution lower bound q·ν(J) with ν taken on the inner level-k
/// tiling in exact arithmetic. The caller certifies q (typically the lower
/// constant of the assembled bounds). q ≤ 0 degenerates to 0 with a warning
/// note rather than an error.
MeasureEstimate mass_principle_lower_bound(const GapSpec& spec, const Region& region, double q,
                                           int level);

/// Two-sided bounds [max(0, 2q−r)·ν(J), r·ν(J)] from mass-ratio constants,
/// applicable once the curvature condition and the tail-ratio condition (or
/// their mirrored pair) hold. Throws HypothesisNotMetError naming the first
/// non-passing report.
MeasureEstimate measure_bounds_from_ratios(const GapSpec& spec, const Region& region,
                                           const MassRatioBounds& qr,
                                           std::span<const ConditionReport> hypotheses,
                                           int level);

/// Two-sided bounds [q/(2D²)·ν(J), r·ν(J)] from the doubling constant D and
/// the contraction condition 2·max{|I_{j0}|,|I_{j1}|} ≤ |I_j|.
MeasureEstimate measure_bounds_from_doubling(const GapSpec& spec, const Region& region, double q,
                                             double r, double doubling,
                                             const ConditionReport& contraction, int level);

/// uniform_cover_sum per level over [level_lo, level_hi], for convergence
/// tables and plots.
std::vector<MeasureEstimate> convergence_series(const GapSpec& spec, const Gauge& h,
                                                const Region& region, int level_lo, int level_hi);

}  // namespace cantorgauge
