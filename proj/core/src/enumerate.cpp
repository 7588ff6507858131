#include "gammafuzz/enumerate.hpp"

#include <limits>

#include "gammafuzz/error.hpp"
#include "gammafuzz/parallel.hpp"

namespace gammafuzz {

std::uint64_t candidate_count(const GammaSemiring& g, const Chain& chain, bool zero_convention) {
    const std::size_t free_slots = zero_convention ? g.s_size() - 1 : g.s_size();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < free_slots; ++i) {
        if (count > std::numeric_limits<std::uint64_t>::max() / chain.size()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        count *= chain.size();
    }
    return count;
}

namespace {

bool accepts(const IdealClass& c, IdealKind kind, bool zero_convention) {
    if (!c.is(kind)) return false;
    return !zero_convention || c.zero_is_one;
}

} // namespace

IdealFamily enumerate_ideals(const GammaSemiring& g, const Chain& chain, IdealKind kind,
                             const EnumerateOptions& options) {
    const std::uint64_t total = candidate_count(g, chain, options.zero_convention);
    if (total > options.budget) throw BudgetExceeded(total, options.budget);

    const std::size_t n = g.s_size();
    const auto& values = chain.values();
    // Free positions in significance order: element 0 first, so increasing
    // candidate index is increasing lexicographic grade order.
    std::vector<std::size_t> positions;
    for (std::size_t x = 0; x < n; ++x)
        if (!(options.zero_convention && x == g.s_zero())) positions.push_back(x);

    std::vector<std::vector<FuzzySubset>> per_chunk(std::max(1U, options.threads));
    const std::size_t used = parallel_chunks(static_cast<std::size_t>(total), options.threads,
                                             [&](std::size_t begin, std::size_t end, std::size_t chunk) {
        std::vector<std::size_t> digits(positions.size());
        std::size_t rest = begin;
        for (std::size_t i = positions.size(); i-- > 0;) {
            digits[i] = rest % values.size();
            rest /= values.size();
        }
        std::vector<Membership> grades(n, Membership::one());
        auto& accepted = per_chunk[chunk];
        for (std::size_t idx = begin; idx < end; ++idx) {
            for (std::size_t i = 0; i < positions.size(); ++i) grades[positions[i]] = values[digits[i]];
            FuzzySubset candidate(g, grades);
            if (accepts(classify(candidate), kind, options.zero_convention)) accepted.push_back(std::move(candidate));
            for (std::size_t i = positions.size(); i-- > 0;) {
                if (++digits[i] < values.size()) break;
                digits[i] = 0;
            }
        }
    });

    IdealFamily family{&g, chain, kind, {}};
    for (std::size_t c = 0; c < used; ++c) {
        for (auto& mu : per_chunk[c]) family.members.push_back(std::move(mu));
    }
    return family;
}

std::vector<CrispSubset> enumerate_crisp_ideals(const GammaSemiring& g, IdealKind kind, std::uint64_t budget) {
    if (g.s_size() >= 63 || (std::uint64_t{1} << g.s_size()) > budget) {
        throw BudgetExceeded(g.s_size() >= 63 ? std::numeric_limits<std::uint64_t>::max()
                                              : std::uint64_t{1} << g.s_size(),
                             budget);
    }
    std::vector<CrispSubset> out;
    const std::uint64_t limit = std::uint64_t{1} << g.s_size();
    for (std::uint64_t bits = 1; bits != 0 && bits < limit; ++bits) {
        const CrispSubset candidate(bits);
        bool ok = false;
        switch (kind) {
        case IdealKind::left: ok = is_crisp_left_ideal(g, candidate); break;
        case IdealKind::right: ok = is_crisp_right_ideal(g, candidate); break;
        case IdealKind::two_sided: ok = is_crisp_ideal(g, candidate); break;
        }
        if (ok) out.push_back(candidate);
    }
    return out;
}

} // namespace gammafuzz
