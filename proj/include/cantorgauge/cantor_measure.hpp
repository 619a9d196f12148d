#pragma once

#include <cstdint>
#include <vector>

#include "cantorgauge/address.hpp"
#include "cantorgauge/bracket.hpp"

namespace cantorgauge {

/// Exact n-adic rational mass num / base^exp with no floating error.
/// ν(I_j) = base^{−|j|}; sums of sibling masses reproduce the parent exactly.
class CantorMass {
public:
    static CantorMass zero(int base);
    static CantorMass node(int base, int depth);  // base^{-depth}

    CantorMass& operator+=(const CantorMass& other);
    CantorMass operator+(const CantorMass& other) const;

    bool operator==(const CantorMass& other) const;

    std::uint64_t numerator() const { return num_; }
    int exponent() const { return exp_; }
    int base() const { return base_; }

    bool is_one() const { return num_ == 1 && exp_ == 0; }
    double value() const;     // nearest double
    Bracket bracket() const;  // outward enclosure of the exact rational

private:
    CantorMass(int base, std::uint64_t num, int exp) : base_(base), num_(num), exp_(exp) {}
    void normalize();

    int base_ = 2;
    std::uint64_t num_ = 0;
    int exp_ = 0;
};

/// Exact Cantor measure of a union of basic intervals. Nested addresses are
/// normalized away by discarding descendants.
CantorMass cantor_measure(int branching, std::vector<Address> addresses);

}  // namespace cantorgauge
