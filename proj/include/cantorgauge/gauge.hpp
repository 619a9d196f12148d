#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cantorgauge/bracket.hpp"
#include "cantorgauge/errors.hpp"
#include "cantorgauge/geometry.hpp"
#include "cantorgauge/region.hpp"

namespace cantorgauge {

/// Partial derivatives of h(w, δ): dw = ∂h/∂w, dd = ∂h/∂δ, and the three
/// second-order partials.
struct GaugePartials {
    double dw = 0, dd = 0, dww = 0, dwd = 0, ddd = 0;
};

/// Gauge function h(w, δ) > 0 on midpoint w and diameter δ, vanishing as
/// δ → 0 and increasing as an interval function. Analytic partials are
/// optional; central finite differences with steps ε_w = 1e−5·max(1,|w|),
/// ε_δ = 1e−5·δ fill in otherwise.
class Gauge {
public:
    static Gauge power(double alpha);                       // δ^α
    static Gauge log_power(double p, double x);             // δ^{log2/(p·log x)}
    static Gauge weighted_power(double alpha);              // (1+w)·δ^α
    static Gauge custom(std::string name, std::function<double(double, double)> eval,
                        std::function<GaugePartials(double, double)> analytic = {});

    /// Evaluates h; throws GaugeError on non-positive or non-finite results.
    double operator()(double w, double delta) const;

    bool has_analytic_partials() const;
    GaugePartials partials(double w, double delta) const;
    GaugePartials finite_difference_partials(double w, double delta) const;

    const std::string& name() const;

private:
    struct Impl;
    explicit Gauge(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// [min, max] of h over the midpoint/diameter brackets, using monotonicity
/// in δ, corner sampling in w, and a local Lipschitz pad from ∂h/∂w when
/// analytic partials are available.
Bracket evaluate(const Gauge& h, const Bracket& midpoint, const Bracket& diameter);
Bracket evaluate(const Gauge& h, const IntervalGeometry& interval);

enum class Verdict { holds, fails, holds_below_threshold, indeterminate };

const char* to_string(Verdict v);

struct Witness {
    double w = 0;
    double delta = 0;
    double value = 0;     // the violating quantity
    std::string detail;   // e.g. which inequality, or the violating words
};

/// Outcome of one hypothesis check. A fails verdict always carries a witness
/// that re-evaluates to a violation.
struct ConditionReport {
    std::string condition;
    Verdict verdict = Verdict::indeterminate;
    std::optional<Witness> witness;
    std::optional<double> delta_threshold;  // for holds_below_threshold
    std::string grid;
    std::vector<std::string> notes;

    bool passing() const {
        return verdict == Verdict::holds || verdict == Verdict::holds_below_threshold;
    }
};

/// Which way the interval is grown in the curvature conditions (and which
/// child's tail the ratio conditions look at). `right` is the standard form;
/// `left` is its mirror image.
enum class Side { right, left };

struct GridSpec {
    int delta_per_decade = 20;
    int decades = 6;
    int w_points = 65;

    std::string describe() const;
};

/// Checks the second-order gauge conditions on a (1+ε)-dilation of `region`:
///   −h_ww + 4·h_dd ≤ tol   and   h_ww ± 4·h_wd + 4·h_dd ≤ tol
/// (+ for Side::right, − for Side::left), over a geometric δ-grid × uniform
/// w-grid restricted to sample intervals inside the dilated region. Reports
/// holds / fails / holds-below-threshold with the largest δ below which both
/// inequalities hold everywhere sampled (threshold refined by bisection).
ConditionReport check_extension_concavity(const Gauge& h, const Region& region, double eps,
                                          const GridSpec& grid = {}, Side side = Side::right);

struct DoublingEstimate {
    double factor = 0;  // max over samples of h(w,2δ)/h(w,δ)
    ConditionReport report;
};

/// Estimates the doubling constant D with D·h(w,δ) > h(w,2δ).
DoublingEstimate check_doubling(const Gauge& h,
                                std::span<const std::pair<double, double>> samples);

struct MonotoneVanishSamples {
    /// {w_inner, δ_inner, w_outer, δ_outer} with I_inner ⊆ I_outer.
    std::vector<std::array<double, 4>> nested;
    double vanish_w = 0.0;
    std::vector<double> vanish_deltas;  // a δ → 0 sequence
    double vanish_tol = 1e-9;

    /// Default probe set over a region: dyadically nested pairs and a
    /// geometric δ → 0 sequence at the region midpoint.
    static MonotoneVanishSamples standard(const Region& region);
};

/// Spot-checks that h is increasing as an interval function on the sampled
/// nested pairs and that h(w, δ) falls below tolerance along the δ sequence.
ConditionReport check_increasing_and_vanishing(const Gauge& h, const MonotoneVanishSamples& s);

}  // namespace cantorgauge
