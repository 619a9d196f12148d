#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "cantorgauge/errors.hpp"

namespace cantorgauge {

inline double next_down(double x) {
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

inline double next_up(double x) {
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}

// Closed enclosure [lo, hi] of a real value. Arithmetic pads each rounded
// operation by one ulp per side, which stands in for directed rounding.
struct Bracket {
    double lo = 0.0;
    double hi = 0.0;

    static Bracket exact(double v) { return {v, v}; }
    static Bracket outward(double v) { return {next_down(v), next_up(v)}; }

    double mid() const { return 0.5 * (lo + hi); }
    double width() const { return hi - lo; }
    bool contains(double v) const { return lo <= v && v <= hi; }
    bool contains(const Bracket& b) const { return lo <= b.lo && b.hi <= hi; }
    bool valid() const { return lo <= hi && std::isfinite(lo) && std::isfinite(hi); }
};

inline Bracket add(const Bracket& a, const Bracket& b) {
    return {next_down(a.lo + b.lo), next_up(a.hi + b.hi)};
}

inline Bracket sub(const Bracket& a, const Bracket& b) {
    return {next_down(a.lo - b.hi), next_up(a.hi - b.lo)};
}

// Exact translation/sum with a point value (no rounding pad); used where the
// addend is data defining the construction rather than a rounded intermediate.
inline Bracket add_exact(const Bracket& a, double v) {
    return {a.lo + v, a.hi + v};
}

inline Bracket scale(const Bracket& a, double s) {
    if (s >= 0.0) return {next_down(a.lo * s), next_up(a.hi * s)};
    return {next_down(a.hi * s), next_up(a.lo * s)};
}

// Product of nonnegative brackets.
inline Bracket mul_nonneg(const Bracket& a, const Bracket& b) {
    return {next_down(a.lo * b.lo), next_up(a.hi * b.hi)};
}

inline Bracket hull(const Bracket& a, const Bracket& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

// Intersection of two enclosures of the same value. An empty intersection
// means one of the enclosures was wrong, which is a library bug.
inline Bracket intersect(const Bracket& a, const Bracket& b) {
    Bracket r{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
    if (r.lo > r.hi) {
        // Tolerate sub-ulp mismatch from independent rounding paths.
        if (r.lo <= next_up(next_up(r.hi))) return Bracket{r.hi, r.lo};
        throw Error("bracket intersection is empty: enclosures disagree");
    }
    return r;
}

// Deterministic pairwise tree reduction; independent of chunking/threading.
inline Bracket pairwise_sum(std::span<const Bracket> items) {
    if (items.empty()) return Bracket::exact(0.0);
    if (items.size() == 1) return items[0];
    if (items.size() <= 8) {
        Bracket acc = items[0];
        for (std::size_t i = 1; i < items.size(); ++i) acc = add(acc, items[i]);
        return acc;
    }
    const std::size_t half = items.size() / 2;
    return add(pairwise_sum(items.first(half)), pairwise_sum(items.subspan(half)));
}

}  // namespace cantorgauge
