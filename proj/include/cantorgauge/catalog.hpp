#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cantorgauge/gap_spec.hpp"
#include "cantorgauge/gauge.hpp"

namespace cantorgauge {

/// A built-in Cantor set family paired with its natural gauge and, when
/// known, the closed-form value of the associated Hausdorff measure.
struct Family {
    std::string tag;  // cp | cpx | cpn | mt3 | table
    GapSpecPtr spec;
    Gauge gauge;
    std::optional<double> closed_form;
    std::string description;
    /// Theorem verifiers are specified for binary constructions only; n-ary
    /// families are covered by their closed form and cover-sum convergence.
    bool verifiers_supported = true;
};

/// Gaps |G_l^k| = 1/(2^k+l)^p, gauge δ^{1/p}, measure 2·log2/(2^p−2)^{1/p}.
/// Requires p > 1.
Family make_cp(double p);

/// Gaps |G_l^k| = 1/(⌊x^k⌋+l)^p, gauge δ^{log2/(p·log x)}, measure
/// (1/(1−2/x^p))^{log2/(p·log x)}. Requires p > 1, x > 2.
Family make_cpx(double p, double x);

/// n-ary variant: n−1 gaps are removed from every interval; interval l at
/// level k loses total gap mass 1/(n^k+(n−1)l)^p split evenly across its n−1
/// gaps, which reduces to the binary rule at n = 2. Gauge δ^{1/p}, measure
/// n·log n/((n^p−n)^{1/p}·(n−1)).
///
/// The n-ary ordering is an assumption validated by cover-sum convergence to
/// the closed form rather than taken from a stated rule; see the convergence
/// regression tests. Requires p > 1, n ≥ 2.
Family make_cpn(double p, int n);

/// Classical middle-thirds set: gaps 3^{−(|j|+1)}, gauge δ^{log2/log3},
/// measure exactly 1 (the q = r collapse case).
Family make_middle_thirds();

/// Wraps an explicit table (no paired closed form); `gauge_text` as in
/// parse_gauge, defaulting to δ^{1/2}.
Family make_table_family(const std::string& path, std::string_view gauge_text = "power:1/2");

/// Family grammar: `cp:p=2`, `cpx:p=2,x=3`, `cpn:p=2,n=3`, `mt3`,
/// `table:/path/to/file`.
Family parse_family(std::string_view text);

/// Gauge grammar: `power:alpha` (alpha accepts `a/b` fractions),
/// `logpower:p,x`, `wpower:alpha`.
Gauge parse_gauge(std::string_view text);

}  // namespace cantorgauge
