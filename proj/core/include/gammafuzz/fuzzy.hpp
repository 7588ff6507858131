#pragma once

#include <span>
#include <string>
#include <vector>

#include "gammafuzz/algebra.hpp"
#include "gammafuzz/membership.hpp"

namespace gammafuzz {

/// Total map S -> [0,1] over a fixed structure. Holds a non-owning pointer to
/// the ambient structure, which must outlive the subset.
class FuzzySubset {
public:
    /// Throws ShapeError if grades.size() != g.s_size().
    FuzzySubset(const GammaSemiring& g, std::vector<Membership> grades);

    const GammaSemiring& ambient() const noexcept { return *ambient_; }
    std::size_t size() const noexcept { return grades_.size(); }
    const Membership& operator[](std::size_t x) const noexcept { return grades_[x]; }
    const std::vector<Membership>& grades() const noexcept { return grades_; }

    /// "[1,1/2]"
    std::string to_string() const;

    friend bool operator==(const FuzzySubset& a, const FuzzySubset& b) noexcept {
        return a.ambient_ == b.ambient_ && a.grades_ == b.grades_;
    }
    /// Lexicographic on grades; only meaningful over the same structure.
    friend bool operator<(const FuzzySubset& a, const FuzzySubset& b) noexcept {
        return a.grades_ < b.grades_;
    }

private:
    const GammaSemiring* ambient_;
    std::vector<Membership> grades_;
};

enum class IdealKind { left, right, two_sided };

std::string to_string(IdealKind kind);
/// "left", "right", "two-sided"; throws std::invalid_argument otherwise.
IdealKind parse_ideal_kind(std::string_view text);

struct IdealClass {
    bool nonempty = false;
    bool zero_is_one = false;
    bool left = false;
    bool right = false;
    bool two_sided = false;
    bool left_k = false;
    bool right_k = false;

    /// Ideal of the given kind (nonempty included).
    bool is(IdealKind kind) const noexcept;
    /// k-ideal of the given kind.
    bool is_k(IdealKind kind) const noexcept;
    std::string to_string() const;

    friend bool operator==(const IdealClass&, const IdealClass&) = default;
};

FuzzySubset theta(const GammaSemiring& g);
FuzzySubset one(const GammaSemiring& g);
FuzzySubset characteristic_of(const GammaSemiring& g, const CrispSubset& members);

/// Exhaustive evaluation of the ideal predicates.
///
/// left:  mu(x+y) >= min(mu(x), mu(y)) and mu(x γ y) >= mu(y)
/// right: same additive clause and mu(x γ y) >= mu(x)
/// k:     mu(v) >= min(mu(u+v), mu(u)), combined with left / right
IdealClass classify(const FuzzySubset& mu);

/// {x : mu(x) >= t}
CrispSubset level_cut(const FuzzySubset& mu, const Membership& t);

bool leq(const FuzzySubset& a, const FuzzySubset& b);
FuzzySubset meet(const FuzzySubset& a, const FuzzySubset& b);
/// Pointwise minimum; throws EmptyFamily on an empty list.
FuzzySubset meet_family(std::span<const FuzzySubset> family);

/// Every grade of mu belongs to the chain.
bool grades_in(const FuzzySubset& mu, const Chain& chain);

} // namespace gammafuzz
