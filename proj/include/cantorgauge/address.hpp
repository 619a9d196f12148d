#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cantorgauge {

/// Word over the child alphabet {0, …, n−1} locating a basic interval or gap
/// in the construction tree. The empty word addresses the root interval.
///
/// For a binary set the pair (level, index) notation I_l^k corresponds to
/// k = length() and l = level_index(2) (the word read as a base-2 numeral).
class Address {
public:
    Address() = default;
    Address(std::initializer_list<int> digits);

    /// Parses "-" (the root) or a digit string like "0110". Digits must be
    /// below `branching`; only branching factors up to 10 have a text form.
    static Address parse(std::string_view text, int branching);

    /// The l-th interval of construction step `level` (base-`branching` word).
    static Address from_level_index(int level, std::uint64_t index, int branching);

    int length() const { return static_cast<int>(digits_.size()); }
    bool is_root() const { return digits_.empty(); }
    int digit(int i) const { return digits_[static_cast<std::size_t>(i)]; }

    std::uint64_t level_index(int branching) const;

    Address child(int c) const;
    Address parent() const;

    /// Appends `count` copies of digit `c` (e.g. the 10^m / 01^m tails).
    Address extended(int c, int count) const;

    bool is_prefix_of(const Address& other) const;

    std::string str() const;  // "-" for the root

    bool operator==(const Address& other) const { return digits_ == other.digits_; }
    /// Length-lexicographic order (shorter words first); used for
    /// deterministic witness selection.
    bool operator<(const Address& other) const;

private:
    std::vector<std::uint8_t> digits_;
};

}  // namespace cantorgauge
