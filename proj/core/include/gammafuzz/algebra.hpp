#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gammafuzz {

struct ElemS {
    std::size_t index = 0;
    friend auto operator<=>(const ElemS&, const ElemS&) = default;
};

struct ElemG {
    std::size_t index = 0;
    friend auto operator<=>(const ElemG&, const ElemG&) = default;
};

enum class Side { left, right };

std::string to_string(Side side);

/// Declared unity: sum over pairs of e_i d_i x equals x for every x (left),
/// or x d_i e_i summed equals x (right).
struct UnityDecl {
    Side side = Side::left;
    std::vector<std::pair<ElemS, ElemG>> pairs;

    /// A single pair e d with e d a = a. Recorded only; nothing depends on it.
    bool is_strong() const noexcept { return pairs.size() == 1; }

    friend bool operator==(const UnityDecl&, const UnityDecl&) = default;
};

/// Raw operation tables as read from a document. Nothing is checked here.
struct SemiringTables {
    std::string name;
    std::size_t s_size = 0;
    std::size_t g_size = 0;
    std::vector<std::vector<std::size_t>> s_add;               // [s][s]
    std::vector<std::vector<std::size_t>> g_add;               // [g][g]
    std::vector<std::vector<std::vector<std::size_t>>> product; // [s][g][s]
    std::size_t s_zero = 0;
    std::size_t g_zero = 0;
    std::vector<UnityDecl> unities;

    friend bool operator==(const SemiringTables&, const SemiringTables&) = default;
};

/// Finite Gamma-semiring with zero, stored as dense operation tables.
///
/// Construction only checks shape; call validate() for the axioms. Instances
/// are immutable, so every const member is safe to call concurrently.
class GammaSemiring {
public:
    static constexpr std::size_t max_carrier = 64;

    /// Throws ShapeError on a wrong dimension, an out-of-range entry, an
    /// empty carrier, or |S| > max_carrier.
    explicit GammaSemiring(SemiringTables tables);

    const std::string& name() const noexcept { return name_; }
    std::size_t s_size() const noexcept { return s_size_; }
    std::size_t g_size() const noexcept { return g_size_; }
    std::size_t s_zero() const noexcept { return s_zero_; }
    std::size_t g_zero() const noexcept { return g_zero_; }
    const std::vector<UnityDecl>& unities() const noexcept { return unities_; }

    std::size_t add(std::size_t a, std::size_t b) const noexcept { return s_add_[a * s_size_ + b]; }
    std::size_t gamma_add(std::size_t alpha, std::size_t beta) const noexcept {
        return g_add_[alpha * g_size_ + beta];
    }
    /// a alpha b
    std::size_t mul(std::size_t a, std::size_t alpha, std::size_t b) const noexcept {
        return prod_[(a * g_size_ + alpha) * s_size_ + b];
    }

    bool has_unity(Side side) const noexcept;
    /// True when no unity was declared at all; such structures are accepted
    /// but unity-dependent checks are skipped.
    bool lacks_unities() const noexcept { return unities_.empty(); }

    SemiringTables tables() const;

    friend bool operator==(const GammaSemiring&, const GammaSemiring&) = default;

private:
    std::string name_;
    std::size_t s_size_;
    std::size_t g_size_;
    std::vector<std::size_t> s_add_;
    std::vector<std::size_t> g_add_;
    std::vector<std::size_t> prod_;
    std::size_t s_zero_;
    std::size_t g_zero_;
    std::vector<UnityDecl> unities_;
};

enum class Axiom {
    s_add_commutative,
    s_add_associative,
    s_add_identity,
    gamma_add_commutative,
    gamma_add_associative,
    gamma_add_identity,
    left_distributive,  // (a+b)αc = aαc + bαc
    right_distributive, // aα(b+c) = aαb + aαc
    gamma_distributive, // a(α+β)b = aαb + aβb
    associative,        // aα(bβc) = (aαb)βc
    zero_s_absorbs,     // 0αx = 0 = xα0
    zero_gamma_absorbs, // x0y = 0
    unity,              // declared unity fails
};

std::string to_string(Axiom axiom);

/// One failing instance of an axiom. `witness` lists the quantified variables
/// in the order the axiom names them; lhs/rhs are element indices of S, or of
/// Gamma for the Gamma-side monoid axioms.
struct AxiomViolation {
    Axiom axiom;
    std::vector<std::size_t> witness;
    std::size_t lhs;
    std::size_t rhs;

    std::string describe() const;
};

/// Reports the first failing instance of each axiom, in canonical loop order.
/// Empty iff the structure is a Gamma-semiring with zero whose declared
/// unities all hold.
std::vector<AxiomViolation> validate(const GammaSemiring& g);

bool verify_unity(const GammaSemiring& g, const UnityDecl& u);

bool is_commutative(const GammaSemiring& g);

/// Subset of S as a bitmask.
class CrispSubset {
public:
    CrispSubset() = default;
    explicit CrispSubset(std::uint64_t bits) : bits_(bits) {}

    static CrispSubset of(std::initializer_list<std::size_t> elems);
    static CrispSubset full(std::size_t s_size) {
        return CrispSubset(s_size >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s_size) - 1);
    }

    bool contains(std::size_t x) const noexcept { return (bits_ >> x) & 1U; }
    void insert(std::size_t x) noexcept { bits_ |= std::uint64_t{1} << x; }
    bool empty() const noexcept { return bits_ == 0; }
    std::size_t count() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
    std::uint64_t bits() const noexcept { return bits_; }
    bool subset_of(const CrispSubset& other) const noexcept { return (bits_ & ~other.bits_) == 0; }

    CrispSubset operator|(const CrispSubset& o) const noexcept { return CrispSubset(bits_ | o.bits_); }
    CrispSubset operator&(const CrispSubset& o) const noexcept { return CrispSubset(bits_ & o.bits_); }

    std::vector<std::size_t> elements() const;
    std::string to_string() const;

    friend bool operator==(const CrispSubset&, const CrispSubset&) = default;
    friend auto operator<=>(const CrispSubset&, const CrispSubset&) = default;

private:
    std::uint64_t bits_ = 0;
};

bool is_crisp_left_ideal(const GammaSemiring& g, const CrispSubset& ideal);
bool is_crisp_right_ideal(const GammaSemiring& g, const CrispSubset& ideal);
bool is_crisp_ideal(const GammaSemiring& g, const CrispSubset& ideal);

/// {r γ l : r in R, l in L, γ in Gamma}, before additive closure.
CrispSubset crisp_product(const GammaSemiring& g, const CrispSubset& r, const CrispSubset& l);

/// Smallest superset of `a` closed under addition.
CrispSubset additive_closure(const GammaSemiring& g, const CrispSubset& a);

struct RegularityWitness {
    ElemS c;
    ElemS x;
    ElemG gamma1;
    ElemG gamma2;
};

struct RegularityResult {
    bool regular = false;
    /// One witness per element when regular (indexed by c).
    std::vector<RegularityWitness> witnesses;
    /// First element without a witness when not regular.
    std::optional<ElemS> failing;
};

/// Searches every c for (x, γ1, γ2) with c = (c γ1 x) γ2 c.
RegularityResult is_multiplicatively_regular(const GammaSemiring& g);

} // namespace gammafuzz
