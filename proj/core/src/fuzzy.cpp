#include "gammafuzz/fuzzy.hpp"

#include <algorithm>
#include <stdexcept>

#include "gammafuzz/error.hpp"

namespace gammafuzz {

FuzzySubset::FuzzySubset(const GammaSemiring& g, std::vector<Membership> grades)
    : ambient_(&g), grades_(std::move(grades)) {
    if (grades_.size() != g.s_size()) {
        throw ShapeError("fuzzy subset has " + std::to_string(grades_.size()) + " grades, structure has " +
                         std::to_string(g.s_size()) + " elements");
    }
}

std::string FuzzySubset::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < grades_.size(); ++i) {
        if (i) out += ",";
        out += grades_[i].to_string();
    }
    return out + "]";
}

std::string to_string(IdealKind kind) {
    switch (kind) {
    case IdealKind::left: return "left";
    case IdealKind::right: return "right";
    case IdealKind::two_sided: return "two-sided";
    }
    return "unknown";
}

IdealKind parse_ideal_kind(std::string_view text) {
    if (text == "left") return IdealKind::left;
    if (text == "right") return IdealKind::right;
    if (text == "two-sided") return IdealKind::two_sided;
    throw std::invalid_argument("unknown ideal kind \"" + std::string(text) + "\" (left, right, two-sided)");
}

bool IdealClass::is(IdealKind kind) const noexcept {
    switch (kind) {
    case IdealKind::left: return left;
    case IdealKind::right: return right;
    case IdealKind::two_sided: return two_sided;
    }
    return false;
}

bool IdealClass::is_k(IdealKind kind) const noexcept {
    switch (kind) {
    case IdealKind::left: return left_k;
    case IdealKind::right: return right_k;
    case IdealKind::two_sided: return left_k && right_k;
    }
    return false;
}

std::string IdealClass::to_string() const {
    std::string out;
    auto flag = [&out](bool on, const char* name) {
        if (!on) return;
        if (!out.empty()) out += ",";
        out += name;
    };
    flag(nonempty, "nonempty");
    flag(zero_is_one, "zero-is-one");
    flag(left, "left");
    flag(right, "right");
    flag(two_sided, "two-sided");
    flag(left_k, "left-k");
    flag(right_k, "right-k");
    return "{" + out + "}";
}

FuzzySubset theta(const GammaSemiring& g) {
    std::vector<Membership> grades(g.s_size(), Membership::zero());
    grades[g.s_zero()] = Membership::one();
    return FuzzySubset(g, std::move(grades));
}

FuzzySubset one(const GammaSemiring& g) {
    return FuzzySubset(g, std::vector<Membership>(g.s_size(), Membership::one()));
}

FuzzySubset characteristic_of(const GammaSemiring& g, const CrispSubset& members) {
    std::vector<Membership> grades(g.s_size(), Membership::zero());
    for (auto x : members.elements()) {
        if (x >= g.s_size()) throw ShapeError("crisp subset element out of range");
        grades[x] = Membership::one();
    }
    return FuzzySubset(g, std::move(grades));
}

IdealClass classify(const FuzzySubset& mu) {
    const auto& g = mu.ambient();
    const std::size_t n = g.s_size();
    IdealClass c;
    c.nonempty = std::any_of(mu.grades().begin(), mu.grades().end(), [](const Membership& m) { return !m.is_zero(); });
    c.zero_is_one = mu[g.s_zero()].is_one();

    bool additive = true;
    bool k_clause = true;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (mu[g.add(x, y)] < std::min(mu[x], mu[y])) additive = false;
            // u = x, v = y: mu(v) >= min(mu(u+v), mu(u))
            if (mu[y] < std::min(mu[g.add(x, y)], mu[x])) k_clause = false;
        }

    bool left_absorbs = true;
    bool right_absorbs = true;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t al = 0; al < g.g_size(); ++al)
            for (std::size_t y = 0; y < n; ++y) {
                const auto& p = mu[g.mul(x, al, y)];
                if (p < mu[y]) left_absorbs = false;
                if (p < mu[x]) right_absorbs = false;
            }

    c.left = c.nonempty && additive && left_absorbs;
    c.right = c.nonempty && additive && right_absorbs;
    c.two_sided = c.left && c.right;
    c.left_k = c.left && k_clause;
    c.right_k = c.right && k_clause;
    return c;
}

CrispSubset level_cut(const FuzzySubset& mu, const Membership& t) {
    CrispSubset out;
    for (std::size_t x = 0; x < mu.size(); ++x)
        if (mu[x] >= t) out.insert(x);
    return out;
}

namespace {

void require_same_ambient(const FuzzySubset& a, const FuzzySubset& b) {
    if (&a.ambient() != &b.ambient()) throw AmbientMismatch();
}

} // namespace

bool leq(const FuzzySubset& a, const FuzzySubset& b) {
    require_same_ambient(a, b);
    for (std::size_t x = 0; x < a.size(); ++x)
        if (a[x] > b[x]) return false;
    return true;
}

FuzzySubset meet(const FuzzySubset& a, const FuzzySubset& b) {
    require_same_ambient(a, b);
    std::vector<Membership> grades(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) grades[x] = std::min(a[x], b[x]);
    return FuzzySubset(a.ambient(), std::move(grades));
}

FuzzySubset meet_family(std::span<const FuzzySubset> family) {
    if (family.empty()) throw EmptyFamily();
    FuzzySubset acc = family.front();
    for (const auto& mu : family.subspan(1)) acc = meet(acc, mu);
    return acc;
}

bool grades_in(const FuzzySubset& mu, const Chain& chain) {
    return std::all_of(mu.grades().begin(), mu.grades().end(), [&](const Membership& m) { return chain.contains(m); });
}

} // namespace gammafuzz
