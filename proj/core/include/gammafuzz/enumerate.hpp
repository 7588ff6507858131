#pragma once

#include <cstdint>
#include <vector>

#include "gammafuzz/fuzzy.hpp"

namespace gammafuzz {

inline constexpr std::uint64_t default_candidate_budget = 1'000'000;

struct EnumerateOptions {
    std::uint64_t budget = default_candidate_budget;
    /// Pin mu(0) = 1. Lifting it explores ideals that are merely nonempty.
    bool zero_convention = true;
    unsigned threads = 1;
};

/// All fuzzy ideals of one kind whose grades lie in a chain.
struct IdealFamily {
    const GammaSemiring* ambient = nullptr;
    Chain chain = Chain::boolean();
    IdealKind kind = IdealKind::left;
    /// Sorted lexicographically by grades, no duplicates.
    std::vector<FuzzySubset> members;
};

/// Number of grade assignments enumerate_ideals would test, saturating at
/// UINT64_MAX.
std::uint64_t candidate_count(const GammaSemiring& g, const Chain& chain, bool zero_convention);

/// Generate-and-filter over every grade assignment. Throws BudgetExceeded
/// before generating anything when the candidate count exceeds the budget.
/// Output order does not depend on the thread count.
IdealFamily enumerate_ideals(const GammaSemiring& g, const Chain& chain, IdealKind kind,
                             const EnumerateOptions& options = {});

/// Nonempty crisp ideals of the given kind, ordered by bitmask. The 2^|S|
/// subsets tested count against the budget.
std::vector<CrispSubset> enumerate_crisp_ideals(const GammaSemiring& g, IdealKind kind,
                                                std::uint64_t budget = default_candidate_budget);

} // namespace gammafuzz
