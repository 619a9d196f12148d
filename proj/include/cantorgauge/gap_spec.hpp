#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>

#include "cantorgauge/address.hpp"
#include "cantorgauge/bracket.hpp"
#include "cantorgauge/errors.hpp"
#include "cantorgauge/region.hpp"

namespace cantorgauge {

inline constexpr int kDefaultDepthCap = 24;

/// Defining datum of a Cantor set: a rule assigning every gap its length,
/// plus the branching factor and root placement. The root interval's length
/// is the total gap mass, so endpoints are determined by the rule alone.
///
/// Interval lengths are reported as brackets [lo, hi] guaranteed to contain
/// the true value. Built-in families keep brackets tight via per-level
/// integral enclosures of their gap sums; finite tables are exact by
/// definition (the table's lengths are what binary64 evaluation of its data
/// yields; there is no symbolic arithmetic behind them).
class GapSpec {
public:
    virtual ~GapSpec() = default;

    int branching() const { return branching_; }
    bool is_binary() const { return branching_ == 2; }
    double root_left() const { return root_left_; }
    int depth_cap() const { return depth_cap_; }

    /// Exact rule value for gap `gap_index` of interval `j`.
    /// Throws DomainError for invalid indices or addresses.
    double gap(const Address& j, int gap_index) const;

    /// Bracket of |I_j|.
    Bracket interval_length(const Address& j) const;

    /// Upper bound on the gap mass of the subtree of `j` strictly below
    /// `below_levels` levels (plus any mass carried by leaves, for finite
    /// tables). Throws UnsupportedRigorError if the spec cannot bound it.
    double subtree_tail_bound(const Address& j, int below_levels) const;

    /// Whether `j` addresses an interval of this construction.
    bool valid_address(const Address& j) const;

    /// False once `j` has no specified children (finite tables only).
    virtual bool is_interior(const Address& j) const;

    virtual std::string describe() const = 0;

    /// Hull of the root interval (left endpoint + total-length upper bound).
    Region root_region() const;

protected:
    GapSpec(int branching, double root_left, int depth_cap);

    virtual double gap_impl(const Address& j, int gap_index) const = 0;
    virtual Bracket interval_length_impl(const Address& j) const = 0;
    virtual double subtree_tail_bound_impl(const Address& j, int below_levels) const = 0;
    virtual bool valid_address_impl(const Address& j) const;

    void check_address(const Address& j) const;

private:
    int branching_;
    double root_left_;
    int depth_cap_;
};

using GapSpecPtr = std::shared_ptr<const GapSpec>;

/// Finite explicit gap table. Interval lengths are exact finite sums of the
/// table's gap and leaf records. Addresses below the specified tree are
/// invalid; unspecified leaf lengths default to zero.
class TableGapSpec final : public GapSpec {
public:
    class Builder {
    public:
        Builder(int branching, double root_left = 0.0);
        Builder& gap(const Address& j, int gap_index, double length);
        /// Explicit leaf interval length (a word with no gap records).
        Builder& leaf(const Address& j, double length);
        std::shared_ptr<const TableGapSpec> build() &&;

    private:
        friend class TableGapSpec;
        int branching_;
        double root_left_;
        struct Node {
            std::vector<double> gaps;
            double leaf_length = -1.0;  // <0: unset
        };
        std::unordered_map<std::string, Node> nodes_;
    };

    std::string describe() const override;
    bool is_interior(const Address& j) const override;
    int table_depth() const { return table_depth_; }

protected:
    double gap_impl(const Address& j, int gap_index) const override;
    Bracket interval_length_impl(const Address& j) const override;
    double subtree_tail_bound_impl(const Address& j, int below_levels) const override;
    bool valid_address_impl(const Address& j) const override;

private:
    explicit TableGapSpec(Builder&& b);
    const Builder::Node* find(const Address& j) const;
    double length_of(const Address& j) const;
    double gap_sum_to(const Address& j, int below_levels) const;

    std::unordered_map<std::string, Builder::Node> nodes_;
    std::unordered_map<std::string, double> length_memo_;
    int table_depth_ = 0;
};

/// Loads a gap table from a text stream / file.
///
/// Format: `#` comments; first data line is the header `<branching> <root_left>`;
/// then one record per line, `word gap_index length`, with words over
/// {0..n−1} and `-` for the root. A record whose gap_index field is `-` gives
/// the explicit leaf length of `word` instead of a gap.
std::shared_ptr<const TableGapSpec> load_gap_table(std::istream& in);
std::shared_ptr<const TableGapSpec> load_gap_table_file(const std::string& path);
void save_gap_table(const TableGapSpec& spec, std::ostream& out);

/// Library-embedding escape hatch: a gap rule given as a callback, with
/// optional length/tail functionals. Without either functional only the raw
/// truncated gap sums are available and rigorous brackets are refused.
class CallbackGapSpec final : public GapSpec {
public:
    using GapFn = std::function<double(const Address&, int)>;
    using LengthFn = std::function<Bracket(const Address&)>;
    using TailFn = std::function<double(const Address&, int)>;

    CallbackGapSpec(int branching, double root_left, GapFn gap, std::string name,
                    LengthFn length = {}, TailFn tail = {}, int depth_cap = kDefaultDepthCap);

    std::string describe() const override;

protected:
    double gap_impl(const Address& j, int gap_index) const override;
    Bracket interval_length_impl(const Address& j) const override;
    double subtree_tail_bound_impl(const Address& j, int below_levels) const override;

private:
    GapFn gap_;
    LengthFn length_;
    TailFn tail_;
    std::string name_;
};

}  // namespace cantorgauge
