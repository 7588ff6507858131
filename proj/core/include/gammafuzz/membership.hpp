#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace gammafuzz {

/// Exact grade in [0, 1], kept in lowest terms.
class Membership {
public:
    using Rational = boost::rational<std::int64_t>;

    constexpr Membership() = default;

    /// Throws std::invalid_argument unless 0 <= num/den <= 1 and den != 0.
    Membership(std::int64_t num, std::int64_t den);

    static Membership zero() { return Membership{}; }
    static Membership one() { return Membership{1, 1}; }

    /// Accepts "p/q", "0", "1" (and any integer text that lands in [0,1]).
    /// Decimal notation is rejected so that exactness stays explicit.
    static Membership parse(std::string_view text);

    std::int64_t numerator() const noexcept { return value_.numerator(); }
    std::int64_t denominator() const noexcept { return value_.denominator(); }
    const Rational& rational() const noexcept { return value_; }

    bool is_zero() const noexcept { return value_.numerator() == 0; }
    bool is_one() const noexcept { return value_.numerator() == value_.denominator(); }

    /// "0", "1", or "p/q".
    std::string to_string() const;

    friend bool operator==(const Membership& a, const Membership& b) noexcept {
        return a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const Membership& a, const Membership& b) noexcept {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (b.value_ < a.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    Rational value_{0};
};

/// Finite value set containing 0 and 1, strictly increasing.
class Chain {
public:
    /// Sorts and deduplicates. Throws std::invalid_argument when 0 or 1 is
    /// missing.
    explicit Chain(std::vector<Membership> values);

    /// Comma separated list, e.g. "0,1/2,1".
    static Chain parse(std::string_view text);
    static Chain boolean() { return Chain({Membership::zero(), Membership::one()}); }

    const std::vector<Membership>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool contains(const Membership& m) const;
    std::string to_string() const;

    friend bool operator==(const Chain&, const Chain&) = default;

private:
    std::vector<Membership> values_;
};

} // namespace gammafuzz
