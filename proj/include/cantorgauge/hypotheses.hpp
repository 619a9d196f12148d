#pragma once

#include <optional>
#include <vector>

#include "cantorgauge/cantor_measure.hpp"
#include "cantorgauge/gap_spec.hpp"
#include "cantorgauge/gauge.hpp"
#include "cantorgauge/geometry.hpp"

namespace cantorgauge {

/// Verifies |G_l^k| ≤ |G_l'^k'| whenever 2^k'+l' < 2^k+l, over all gaps down
/// to `max_level`. The construction index 2^k+l orders gaps globally, so the
/// pairwise condition reduces to adjacent comparisons along that order; a
/// failure witness carries the violating pair. Binary specs only.
ConditionReport check_decreasing_gaps(const GapSpec& spec, int max_level);

struct TailRatioOptions {
    int max_word_len = 10;
    int max_m = 8;
    Region region;
    double eps = 0.01;
};

/// Checks 2^{−m} ≤ |G_j ∪ I_{j10^m}| / |G_j ∪ I_{j1}| (Side::right; the
/// mirror swaps children and uses the 01^m tail) for every word j with
/// |j| ≤ max_word_len, I_j ⊆ (1+ε)·region, and every m ≤ max_m. Verdicts are
/// certified on brackets: too-wide brackets produce an indeterminate verdict
/// listing the undecided (j, m) pairs rather than a guess.
ConditionReport check_tail_ratio(const GapSpec& spec, const TailRatioOptions& opts,
                                 Side side = Side::right);

/// One breakpoint of the proportional-mass staircase of G_j ∪ I_{j1}:
/// lhs = ν(ρ ·_L (G_j ∪ I_{j1})) exactly, rhs = ρ·ν(I_{j1}) on brackets.
struct StaircasePoint {
    Address at;       // the basic interval whose right endpoint defines ρ
    Bracket rho;
    CantorMass lhs;
    Bracket rhs;
};

/// Breakpoints of the staircase at all canonical right-endpoint proportions
/// ρ_{j1i} down to `depth` levels below j. Binary specs only.
std::vector<StaircasePoint> staircase_profile(const GapSpec& spec, const Address& j, int depth);

struct EquivalenceResult {
    Verdict staircase = Verdict::indeterminate;   // lhs ≤ rhs at every breakpoint
    Verdict tail_ratio = Verdict::indeterminate;  // the 2^{−m} ratio condition
    bool equivalent = false;                      // staircase == tail_ratio
    ConditionReport staircase_report;
    ConditionReport tail_ratio_report;
};

/// Exhaustively checks the staircase condition and the tail-ratio condition
/// over the whole subtree of `j` (both quantified over every word in the
/// subtree, with matched depth ranges) and reports whether the two verdicts
/// agree. The two checks are computed independently: the staircase side in
/// exact Cantor-measure arithmetic against bracketed lengths, the ratio side
/// from bracketed lengths alone.
EquivalenceResult check_staircase_equivalence(const GapSpec& spec, const Address& j, int depth,
                                              int max_m);

/// Two-sided bounds on h(I_j)/ν(I_j) over a word range: `lower` uses lower
/// h-brackets, `upper` upper brackets, so lower·ν ≤ h(I_j) ≤ upper·ν holds
/// for every enumerated word.
struct MassRatioBounds {
    double lower = 0;
    double upper = 0;
    int k_min = 0;
    int k_max = 0;
    Region region;
    double eps = 0;
};

/// Scans all words with |j| ∈ [k_min, k_max] and I_j ⊆ (1+ε)·region.
/// Throws DomainError if no word qualifies. Binary specs only.
MassRatioBounds estimate_mass_ratio_bounds(const GapSpec& spec, const Gauge& h,
                                           const Region& region, double eps, int k_min,
                                           int k_max);

/// Verifies the contraction condition 2·max{|I_{j0}|, |I_{j1}|} ≤ |I_j| over
/// all words down to `max_level`, certified on brackets.
ConditionReport check_contraction(const GapSpec& spec, int max_level);

}  // namespace cantorgauge
