#pragma once

#include <cstddef>

#include "gammafuzz/fuzzy.hpp"

namespace gammafuzz {

// Sup-min compositions of fuzzy subsets. All of them throw AmbientMismatch
// when the operands live over different structures.

/// (a ⊕ b)(x) = max over u+v = x of min(a(u), b(v)).
FuzzySubset sum_oplus(const FuzzySubset& a, const FuzzySubset& b);

/// (a Γ b)(x) = max over u γ v = x of min(a(u), b(v)); 0 where no triple
/// represents x.
FuzzySubset gamma_product(const FuzzySubset& a, const FuzzySubset& b);

/// (a ∘ b)(x) = sup over finite sums x = Σ u_i γ_i v_i of the smallest
/// min(a(u_i), b(v_i)); 0 where x is not such a sum.
///
/// Computed per threshold t: the products reachable with grade >= t are
/// closed under addition, and x gets the largest t whose closure holds it.
FuzzySubset compose(const FuzzySubset& a, const FuzzySubset& b);

struct OracleRun {
    FuzzySubset result;
    /// Last term count at which the running result changed (0 if it never
    /// became nonzero).
    std::size_t last_change = 0;
};

/// Brute force over all sums of 1..max_terms products, tracking the set of
/// reachable (element, grade) states. Independent of compose().
OracleRun compose_oracle_run(const FuzzySubset& a, const FuzzySubset& b, std::size_t max_terms);

inline FuzzySubset compose_oracle(const FuzzySubset& a, const FuzzySubset& b, std::size_t max_terms) {
    return compose_oracle_run(a, b, max_terms).result;
}

} // namespace gammafuzz
