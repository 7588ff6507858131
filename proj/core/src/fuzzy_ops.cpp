#include "gammafuzz/fuzzy_ops.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "gammafuzz/error.hpp"

namespace gammafuzz {

namespace {

void require_same_ambient(const FuzzySubset& a, const FuzzySubset& b) {
    if (&a.ambient() != &b.ambient()) throw AmbientMismatch();
}

} // namespace

FuzzySubset sum_oplus(const FuzzySubset& a, const FuzzySubset& b) {
    require_same_ambient(a, b);
    const auto& g = a.ambient();
    std::vector<Membership> out(g.s_size(), Membership::zero());
    for (std::size_t u = 0; u < g.s_size(); ++u)
        for (std::size_t v = 0; v < g.s_size(); ++v) {
            auto& slot = out[g.add(u, v)];
            slot = std::max(slot, std::min(a[u], b[v]));
        }
    return FuzzySubset(g, std::move(out));
}

FuzzySubset gamma_product(const FuzzySubset& a, const FuzzySubset& b) {
    require_same_ambient(a, b);
    const auto& g = a.ambient();
    // Unrepresented elements keep grade 0.
    std::vector<Membership> out(g.s_size(), Membership::zero());
    for (std::size_t u = 0; u < g.s_size(); ++u)
        for (std::size_t al = 0; al < g.g_size(); ++al)
            for (std::size_t v = 0; v < g.s_size(); ++v) {
                auto& slot = out[g.mul(u, al, v)];
                slot = std::max(slot, std::min(a[u], b[v]));
            }
    return FuzzySubset(g, std::move(out));
}

FuzzySubset compose(const FuzzySubset& a, const FuzzySubset& b) {
    require_same_ambient(a, b);
    const auto& g = a.ambient();
    const std::size_t n = g.s_size();

    std::vector<Membership> thresholds{Membership::zero()};
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) thresholds.push_back(std::min(a[u], b[v]));
    std::sort(thresholds.begin(), thresholds.end(), std::greater<>{});
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

    std::vector<Membership> out(n, Membership::zero());
    CrispSubset assigned;
    // Highest threshold first: the first closure containing x fixes its grade.
    for (const auto& t : thresholds) {
        if (t.is_zero()) break;
        CrispSubset products;
        for (std::size_t u = 0; u < n; ++u) {
            if (a[u] < t) continue;
            for (std::size_t v = 0; v < n; ++v) {
                if (b[v] < t) continue;
                for (std::size_t al = 0; al < g.g_size(); ++al) products.insert(g.mul(u, al, v));
            }
        }
        const CrispSubset reached = additive_closure(g, products);
        for (auto x : reached.elements()) {
            if (!assigned.contains(x)) {
                out[x] = t;
                assigned.insert(x);
            }
        }
    }
    return FuzzySubset(g, std::move(out));
}

OracleRun compose_oracle_run(const FuzzySubset& a, const FuzzySubset& b, std::size_t max_terms) {
    require_same_ambient(a, b);
    const auto& g = a.ambient();
    const std::size_t n = g.s_size();
    using State = std::pair<std::size_t, Membership>;

    if (max_terms == 0) throw std::invalid_argument("compose_oracle needs at least one term");

    std::set<State> single;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t al = 0; al < g.g_size(); ++al)
            for (std::size_t v = 0; v < n; ++v) single.emplace(g.mul(u, al, v), std::min(a[u], b[v]));

    auto best_of = [n](const std::set<State>& states) {
        std::vector<Membership> best(n, Membership::zero());
        for (const auto& [x, grade] : states) best[x] = std::max(best[x], grade);
        return best;
    };

    std::set<State> reached = single;
    std::vector<Membership> best = best_of(reached);
    std::size_t last_change = 0;
    if (best != std::vector<Membership>(n, Membership::zero())) last_change = 1;

    for (std::size_t terms = 2; terms <= max_terms; ++terms) {
        std::set<State> next = reached;
        for (const auto& [y, gy] : reached)
            for (const auto& [p, gp] : single) next.emplace(g.add(y, p), std::min(gy, gp));
        if (next.size() == reached.size()) break; // no new state can ever appear again
        reached = std::move(next);
        auto updated = best_of(reached);
        if (updated != best) {
            best = std::move(updated);
            last_change = terms;
        }
    }
    return OracleRun{FuzzySubset(g, std::move(best)), last_change};
}

} // namespace gammafuzz
