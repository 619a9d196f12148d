#include "cantorgauge/address.hpp"

#include "cantorgauge/errors.hpp"

namespace cantorgauge {

Address::Address(std::initializer_list<int> digits) {
    digits_.reserve(digits.size());
    for (int d : digits) {
        if (d < 0 || d > 255) throw DomainError("address digit out of range");
        digits_.push_back(static_cast<std::uint8_t>(d));
    }
}

Address Address::parse(std::string_view text, int branching) {
    Address a;
    if (text == "-" || text.empty()) return a;
    if (branching > 10) throw DomainError("text addresses require branching <= 10");
    a.digits_.reserve(text.size());
    for (char c : text) {
        if (c < '0' || c > '9') throw ParseError("invalid address character in '" + std::string(text) + "'");
        const int d = c - '0';
        if (d >= branching)
            throw ParseError("address digit " + std::string(1, c) + " exceeds branching factor");
        a.digits_.push_back(static_cast<std::uint8_t>(d));
    }
    return a;
}

Address Address::from_level_index(int level, std::uint64_t index, int branching) {
    if (level < 0 || level > 62) throw DomainError("address level out of range");
    Address a;
    a.digits_.assign(static_cast<std::size_t>(level), 0);
    for (int i = level - 1; i >= 0; --i) {
        a.digits_[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>(index % static_cast<std::uint64_t>(branching));
        index /= static_cast<std::uint64_t>(branching);
    }
    if (index != 0) throw DomainError("level index too large for level");
    return a;
}

std::uint64_t Address::level_index(int branching) const {
    std::uint64_t v = 0;
    for (std::uint8_t d : digits_) v = v * static_cast<std::uint64_t>(branching) + d;
    return v;
}

Address Address::child(int c) const {
    Address a = *this;
    a.digits_.push_back(static_cast<std::uint8_t>(c));
    return a;
}

Address Address::parent() const {
    if (is_root()) throw DomainError("root address has no parent");
    Address a = *this;
    a.digits_.pop_back();
    return a;
}

Address Address::extended(int c, int count) const {
    Address a = *this;
    a.digits_.insert(a.digits_.end(), static_cast<std::size_t>(count),
                     static_cast<std::uint8_t>(c));
    return a;
}

bool Address::is_prefix_of(const Address& other) const {
    if (digits_.size() > other.digits_.size()) return false;
    return std::equal(digits_.begin(), digits_.end(), other.digits_.begin());
}

std::string Address::str() const {
    if (is_root()) return "-";
    std::string s;
    s.reserve(digits_.size());
    for (std::uint8_t d : digits_) s.push_back(static_cast<char>('0' + d));
    return s;
}

bool Address::operator<(const Address& other) const {
    if (digits_.size() != other.digits_.size()) return digits_.size() < other.digits_.size();
    return digits_ < other.digits_;
}

}  // namespace cantorgauge
