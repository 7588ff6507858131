#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gammafuzz/enumerate.hpp"
#include "gammafuzz/fuzzy.hpp"

namespace gammafuzz {

enum class Outcome { pass, fail, not_applicable };

std::string to_string(Outcome outcome);

/// A concrete instance of a law. For a failing report it is a
/// counterexample; a passing report may carry one for information (the
/// regularity law attaches the pair that separates product from meet).
struct Witness {
    std::string clause;
    std::vector<FuzzySubset> operands;
    std::optional<std::size_t> element;
    std::string lhs;
    std::string rhs;
    std::string detail;
};

struct Universe {
    std::string structure;
    std::string chain;
    std::string family;
    std::size_t family_size = 0;
};

struct VerifyReport {
    std::string law_id;
    std::string title;
    Universe universe;
    Outcome outcome = Outcome::pass;
    std::optional<Witness> witness;
    /// Quantifier instances evaluated. Every instance is evaluated even after
    /// a failure, so the count does not depend on scheduling.
    std::uint64_t checked_count = 0;
    std::vector<std::pair<std::string, std::string>> notes;
};

struct VerifyOptions {
    unsigned threads = 1;
    /// Largest proper subfamily size tried by the intersection and
    /// completeness laws; the full family is always tried as well.
    std::size_t subset_cap = 3;
    std::uint64_t budget = default_candidate_budget;
};

/// Structure, chain and the three ideal families the laws quantify over.
class LawContext {
public:
    /// Enumerates the left, right and two-sided families (mu(0) = 1).
    /// Throws BudgetExceeded.
    LawContext(const GammaSemiring& g, Chain chain, VerifyOptions options = {});

    /// Uses the given families verbatim (each is sorted). Intended for
    /// exercising laws on families that are not ideal families.
    static LawContext with_families(const GammaSemiring& g, Chain chain, std::vector<FuzzySubset> left,
                                    std::vector<FuzzySubset> right, std::vector<FuzzySubset> two_sided,
                                    VerifyOptions options = {});

    const GammaSemiring& structure() const noexcept { return *g_; }
    const Chain& chain() const noexcept { return chain_; }
    const VerifyOptions& options() const noexcept { return options_; }
    const std::vector<FuzzySubset>& family(IdealKind kind) const noexcept;
    bool contains(IdealKind kind, const FuzzySubset& mu) const;

private:
    LawContext(const GammaSemiring& g, Chain chain, VerifyOptions options, int);

    const GammaSemiring* g_;
    Chain chain_;
    VerifyOptions options_;
    std::vector<FuzzySubset> left_;
    std::vector<FuzzySubset> right_;
    std::vector<FuzzySubset> two_sided_;
};

struct LawInfo {
    std::string id;
    std::string title;
};

/// Every law id in suite order.
std::vector<LawInfo> law_table();

/// Resolves requested ids to table ids, preserving table order inside each
/// request. "all" selects everything; "prop-3.3" selects every id that
/// extends it at a '.' or '-' boundary. Throws UnknownLaw.
std::vector<std::string> expand_law_ids(std::span<const std::string> requested);

/// Runs one law (exact table id). Throws UnknownLaw.
VerifyReport check_law(std::string_view id, const LawContext& ctx);
VerifyReport check_law(std::string_view id, const GammaSemiring& g, const Chain& chain,
                       const VerifyOptions& options = {});

/// Expands the ids and runs each law in order.
std::vector<VerifyReport> run_suite(const LawContext& ctx, std::span<const std::string> law_ids);
std::vector<VerifyReport> run_suite(const GammaSemiring& g, const Chain& chain, std::span<const std::string> law_ids,
                                    const VerifyOptions& options = {});

/// No report failed.
bool suite_passed(std::span<const VerifyReport> reports);

/// Re-evaluates the witness clause on the witness operands. True when the
/// instance still violates the clause.
bool replay_witness(const VerifyReport& report, const LawContext& ctx);

} // namespace gammafuzz
