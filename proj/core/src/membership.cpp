#include "gammafuzz/membership.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace gammafuzz {

namespace {

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
    std::int64_t value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last) {
        throw std::invalid_argument("not an exact membership value: \"" + std::string(whole) + "\"");
    }
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

} // namespace

Membership::Membership(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("membership with zero denominator");
    Rational r(num, den);
    if (r < Rational(0) || r > Rational(1)) {
        throw std::invalid_argument("membership outside [0,1]: " + std::to_string(num) + "/" +
                                    std::to_string(den));
    }
    value_ = r;
}

Membership Membership::parse(std::string_view text) {
    text = trim(text);
    if (text.find_first_of(".eE") != std::string_view::npos) {
        throw std::invalid_argument("decimal memberships are not accepted: \"" + std::string(text) +
                                    "\" (write p/q)");
    }
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Membership(parse_integer(text, text), 1);
    return Membership(parse_integer(text.substr(0, slash), text),
                      parse_integer(text.substr(slash + 1), text));
}

std::string Membership::to_string() const {
    if (value_.denominator() == 1) return std::to_string(value_.numerator());
    return std::to_string(value_.numerator()) + "/" + std::to_string(value_.denominator());
}

Chain::Chain(std::vector<Membership> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    if (values_.empty() || !values_.front().is_zero() || !values_.back().is_one()) {
        throw std::invalid_argument("a chain must contain both 0 and 1");
    }
}

Chain Chain::parse(std::string_view text) {
    std::vector<Membership> values;
    while (true) {
        const auto comma = text.find(',');
        values.push_back(Membership::parse(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return Chain(std::move(values));
}

bool Chain::contains(const Membership& m) const {
    return std::binary_search(values_.begin(), values_.end(), m);
}

std::string Chain::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ",";
        out += values_[i].to_string();
    }
    return out + "}";
}

} // namespace gammafuzz
