#pragma once

#include <stdexcept>
#include <string>

namespace cantorgauge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad addresses, indices, parameters or regions.
struct DomainError : Error {
    using Error::Error;
};

// Gauge evaluator returned a non-positive or non-finite value.
struct GaugeError : Error {
    using Error::Error;
};

// A rigorous bracket was requested from a spec that cannot provide one
// (custom rule without a tail bound or length functional).
struct UnsupportedRigorError : Error {
    using Error::Error;
};

// Bound assembly refused because a required hypothesis report is not passing.
struct HypothesisNotMetError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace cantorgauge
