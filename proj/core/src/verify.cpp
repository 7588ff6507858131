#include "gammafuzz/verify.hpp"

#include <algorithm>
#include <functional>

#include "gammafuzz/error.hpp"
#include "gammafuzz/fuzzy_ops.hpp"
#include "gammafuzz/parallel.hpp"

namespace gammafuzz {

std::string to_string(Outcome outcome) {
    switch (outcome) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::not_applicable: return "not-applicable";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// LawContext

LawContext::LawContext(const GammaSemiring& g, Chain chain, VerifyOptions options, int)
    : g_(&g), chain_(std::move(chain)), options_(options) {}

LawContext::LawContext(const GammaSemiring& g, Chain chain, VerifyOptions options)
    : LawContext(g, std::move(chain), options, 0) {
    EnumerateOptions eo{options_.budget, true, options_.threads};
    left_ = enumerate_ideals(g, chain_, IdealKind::left, eo).members;
    right_ = enumerate_ideals(g, chain_, IdealKind::right, eo).members;
    two_sided_ = enumerate_ideals(g, chain_, IdealKind::two_sided, eo).members;
}

LawContext LawContext::with_families(const GammaSemiring& g, Chain chain, std::vector<FuzzySubset> left,
                                     std::vector<FuzzySubset> right, std::vector<FuzzySubset> two_sided,
                                     VerifyOptions options) {
    LawContext ctx(g, std::move(chain), options, 0);
    for (auto* fam : {&left, &right, &two_sided}) {
        std::sort(fam->begin(), fam->end());
        fam->erase(std::unique(fam->begin(), fam->end()), fam->end());
    }
    ctx.left_ = std::move(left);
    ctx.right_ = std::move(right);
    ctx.two_sided_ = std::move(two_sided);
    return ctx;
}

const std::vector<FuzzySubset>& LawContext::family(IdealKind kind) const noexcept {
    switch (kind) {
    case IdealKind::left: return left_;
    case IdealKind::right: return right_;
    case IdealKind::two_sided: break;
    }
    return two_sided_;
}

bool LawContext::contains(IdealKind kind, const FuzzySubset& mu) const {
    const auto& fam = family(kind);
    return std::binary_search(fam.begin(), fam.end(), mu);
}

namespace {

// ---------------------------------------------------------------------------
// Clause machinery

struct Violation {
    std::optional<std::size_t> element;
    std::string lhs;
    std::string rhs;
    std::string detail;
};
using Found = std::optional<Violation>;
using Operands = std::span<const FuzzySubset* const>;

struct Env {
    const LawContext& ctx;
    IdealKind kind;

    const GammaSemiring& g() const { return ctx.structure(); }
    const std::vector<FuzzySubset>& family() const { return ctx.family(kind); }
    bool in_family(const FuzzySubset& mu) const { return ctx.contains(kind, mu); }
};

enum class Shape { nullary, unary, binary, ternary, subfamily, right_left };

struct Clause {
    std::string name;
    Shape shape;
    std::function<Found(const Env&, Operands)> check;
};

struct Law;
using Gate = std::function<std::optional<std::string>(const Env&)>;
using Runner = std::function<VerifyReport(const Law&, const LawContext&)>;

struct Law {
    std::string id;
    std::string title;
    IdealKind kind = IdealKind::left;
    std::string family_label;
    Gate gate;
    std::vector<Clause> clauses;
    Runner custom;
};

Found expect_equal(const FuzzySubset& lhs, const FuzzySubset& rhs, std::string detail) {
    for (std::size_t x = 0; x < lhs.size(); ++x) {
        if (lhs[x] != rhs[x]) return Violation{x, lhs[x].to_string(), rhs[x].to_string(), std::move(detail)};
    }
    return std::nullopt;
}

Found expect_leq(const FuzzySubset& lhs, const FuzzySubset& rhs, std::string detail) {
    for (std::size_t x = 0; x < lhs.size(); ++x) {
        if (lhs[x] > rhs[x]) return Violation{x, lhs[x].to_string(), rhs[x].to_string(), std::move(detail)};
    }
    return std::nullopt;
}

Found expect_member(const Env& env, const FuzzySubset& mu, std::string detail) {
    if (env.in_family(mu)) return std::nullopt;
    return Violation{std::nullopt, mu.to_string(), "not a member of the " + to_string(env.kind) + " family",
                     std::move(detail)};
}

template <class... Checks>
Found first_of(Checks&&... checks) {
    Found found;
    ((found ? void() : void(found = checks())), ...);
    return found;
}

std::vector<std::vector<std::size_t>> subfamilies(std::size_t n, std::size_t cap) {
    std::vector<std::vector<std::size_t>> out;
    const std::size_t top = std::min(cap, n);
    for (std::size_t k = 1; k <= top; ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            out.push_back(idx);
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    if (n > cap) {
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = i;
        out.push_back(std::move(all));
    }
    return out;
}

// Enumerates the operand tuples a clause quantifies over, in canonical order.
class Instances {
public:
    Instances(const Env& env, Shape shape) : env_(env), shape_(shape) {
        const std::size_t n = env.family().size();
        switch (shape) {
        case Shape::nullary: count_ = 1; break;
        case Shape::unary: count_ = n; break;
        case Shape::binary: count_ = n * n; break;
        case Shape::ternary: count_ = n * n * n; break;
        case Shape::subfamily:
            subsets_ = subfamilies(n, env.ctx.options().subset_cap);
            count_ = subsets_.size();
            break;
        case Shape::right_left:
            count_ = env.ctx.family(IdealKind::right).size() * env.ctx.family(IdealKind::left).size();
            break;
        }
    }

    std::size_t count() const noexcept { return count_; }

    std::vector<const FuzzySubset*> operands(std::size_t i) const {
        const auto& fam = env_.family();
        const std::size_t n = fam.size();
        switch (shape_) {
        case Shape::nullary: return {};
        case Shape::unary: return {&fam[i]};
        case Shape::binary: return {&fam[i / n], &fam[i % n]};
        case Shape::ternary: return {&fam[i / (n * n)], &fam[(i / n) % n], &fam[i % n]};
        case Shape::subfamily: {
            std::vector<const FuzzySubset*> out;
            for (auto k : subsets_[i]) out.push_back(&fam[k]);
            return out;
        }
        case Shape::right_left: {
            const auto& right = env_.ctx.family(IdealKind::right);
            const auto& left = env_.ctx.family(IdealKind::left);
            return {&right[i / left.size()], &left[i % left.size()]};
        }
        }
        return {};
    }

private:
    const Env& env_;
    Shape shape_;
    std::size_t count_ = 0;
    std::vector<std::vector<std::size_t>> subsets_;
};

struct ClauseOutcome {
    std::uint64_t checked = 0;
    std::optional<Witness> witness;
};

Witness make_witness(const std::string& clause, const std::vector<const FuzzySubset*>& ops, Violation v) {
    Witness w;
    w.clause = clause;
    for (const auto* op : ops) w.operands.push_back(*op);
    w.element = v.element;
    w.lhs = std::move(v.lhs);
    w.rhs = std::move(v.rhs);
    w.detail = std::move(v.detail);
    return w;
}

// Every instance is evaluated; the reported witness is the failing instance
// with the smallest index, whatever the thread count.
ClauseOutcome run_clause(const Clause& clause, const Env& env) {
    const Instances inst(env, clause.shape);
    std::vector<std::optional<std::pair<std::size_t, Violation>>> firsts(
        std::max<std::size_t>(1, env.ctx.options().threads));
    const std::size_t used =
        parallel_chunks(inst.count(), env.ctx.options().threads, [&](std::size_t begin, std::size_t end, std::size_t c) {
            for (std::size_t i = begin; i < end; ++i) {
                const auto ops = inst.operands(i);
                auto found = clause.check(env, ops);
                if (found && !firsts[c]) firsts[c].emplace(i, std::move(*found));
            }
        });
    ClauseOutcome out;
    out.checked = inst.count();
    for (std::size_t c = 0; c < used; ++c) {
        if (firsts[c]) {
            out.witness = make_witness(clause.name, inst.operands(firsts[c]->first), std::move(firsts[c]->second));
            break;
        }
    }
    return out;
}

Universe universe_of(const Law& law, const LawContext& ctx) {
    Universe u;
    u.structure = ctx.structure().name();
    u.chain = ctx.chain().to_string();
    u.family = law.family_label;
    if (law.family_label == "right x left") {
        u.family_size = ctx.family(IdealKind::right).size() * ctx.family(IdealKind::left).size();
    } else {
        u.family_size = ctx.family(law.kind).size();
    }
    return u;
}

VerifyReport run_generic(const Law& law, const LawContext& ctx) {
    VerifyReport report;
    report.law_id = law.id;
    report.title = law.title;
    report.universe = universe_of(law, ctx);
    const Env env{ctx, law.kind};
    if (law.gate) {
        if (auto reason = law.gate(env)) {
            report.outcome = Outcome::not_applicable;
            report.notes.emplace_back("reason", *reason);
            return report;
        }
    }
    for (const auto& clause : law.clauses) {
        auto result = run_clause(clause, env);
        report.checked_count += result.checked;
        if (result.witness && !report.witness) report.witness = std::move(result.witness);
    }
    report.outcome = report.witness ? Outcome::fail : Outcome::pass;
    return report;
}

// ---------------------------------------------------------------------------
// Law definitions

bool has_verified_unity(const GammaSemiring& g, Side side) {
    return std::any_of(g.unities().begin(), g.unities().end(),
                       [&](const UnityDecl& u) { return u.side == side && verify_unity(g, u); });
}

std::optional<std::string> unity_gate(const GammaSemiring& g, IdealKind kind) {
    const bool need_left = kind != IdealKind::right;
    const bool need_right = kind != IdealKind::left;
    if (need_left && !has_verified_unity(g, Side::left)) return "no verified left unity";
    if (need_right && !has_verified_unity(g, Side::right)) return "no verified right unity";
    return std::nullopt;
}

Clause nullary(std::string name, std::function<Found(const Env&)> f) {
    return {std::move(name), Shape::nullary, [f = std::move(f)](const Env& e, Operands) { return f(e); }};
}
Clause unary(std::string name, std::function<Found(const Env&, const FuzzySubset&)> f) {
    return {std::move(name), Shape::unary, [f = std::move(f)](const Env& e, Operands o) { return f(e, *o[0]); }};
}
Clause binary(std::string name, std::function<Found(const Env&, const FuzzySubset&, const FuzzySubset&)> f,
              Shape shape = Shape::binary) {
    return {std::move(name), shape, [f = std::move(f)](const Env& e, Operands o) { return f(e, *o[0], *o[1]); }};
}
Clause ternary(std::string name,
               std::function<Found(const Env&, const FuzzySubset&, const FuzzySubset&, const FuzzySubset&)> f) {
    return {std::move(name), Shape::ternary,
            [f = std::move(f)](const Env& e, Operands o) { return f(e, *o[0], *o[1], *o[2]); }};
}
Clause subfamily(std::string name, std::function<Found(const Env&, const std::vector<FuzzySubset>&)> f) {
    return {std::move(name), Shape::subfamily, [f = std::move(f)](const Env& e, Operands o) {
                std::vector<FuzzySubset> members;
                for (const auto* p : o) members.push_back(*p);
                return f(e, members);
            }};
}

Clause theta_in_family() {
    return nullary("theta-in-family", [](const Env& e) { return expect_member(e, theta(e.g()), "θ"); });
}
Clause one_in_family() {
    return nullary("one-in-family", [](const Env& e) { return expect_member(e, one(e.g()), "1"); });
}

// Clause set shared by the hemiring theorem and its corollary.
std::vector<Clause> hemiring_clauses() {
    std::vector<Clause> c;
    c.push_back(theta_in_family());
    c.push_back(one_in_family());
    c.push_back(binary("sum-closed",
                       [](const Env& e, const auto& a, const auto& b) { return expect_member(e, sum_oplus(a, b), "a⊕b"); }));
    c.push_back(binary("compose-closed",
                       [](const Env& e, const auto& a, const auto& b) { return expect_member(e, compose(a, b), "a∘b"); }));
    c.push_back(binary("sum-commutative", [](const Env&, const auto& a, const auto& b) {
        return expect_equal(sum_oplus(a, b), sum_oplus(b, a), "a⊕b = b⊕a");
    }));
    c.push_back(unary("theta-identity", [](const Env& e, const auto& a) {
        return expect_equal(sum_oplus(theta(e.g()), a), a, "θ⊕a = a");
    }));
    c.push_back(ternary("sum-associative", [](const Env&, const auto& a, const auto& b, const auto& d) {
        return expect_equal(sum_oplus(sum_oplus(a, b), d), sum_oplus(a, sum_oplus(b, d)), "(a⊕b)⊕c = a⊕(b⊕c)");
    }));
    c.push_back(ternary("compose-associative", [](const Env&, const auto& a, const auto& b, const auto& d) {
        return expect_equal(compose(compose(a, b), d), compose(a, compose(b, d)), "(a∘b)∘c = a∘(b∘c)");
    }));
    c.push_back(ternary("left-distributive", [](const Env&, const auto& a, const auto& b, const auto& d) {
        return expect_equal(compose(a, sum_oplus(b, d)), sum_oplus(compose(a, b), compose(a, d)),
                            "a∘(b⊕c) = (a∘b)⊕(a∘c)");
    }));
    c.push_back(ternary("right-distributive", [](const Env&, const auto& a, const auto& b, const auto& d) {
        return expect_equal(compose(sum_oplus(b, d), a), sum_oplus(compose(b, a), compose(d, a)),
                            "(b⊕c)∘a = (b∘a)⊕(c∘a)");
    }));
    c.push_back(unary("theta-absorbs", [](const Env& e, const auto& a) {
        const auto z = theta(e.g());
        return first_of([&] { return expect_equal(compose(z, a), z, "θ∘a = θ"); },
                        [&] { return expect_equal(compose(a, z), z, "a∘θ = θ"); });
    }));
    c.push_back(binary("zero-sum-free", [](const Env& e, const auto& a, const auto& b) -> Found {
        const auto z = theta(e.g());
        if (sum_oplus(a, b) != z) return std::nullopt;
        return first_of([&] { return expect_equal(a, z, "a⊕b = θ forces a = θ"); },
                        [&] { return expect_equal(b, z, "a⊕b = θ forces b = θ"); });
    }));
    c.push_back(unary("one-infinite", [](const Env& e, const auto& a) {
        return expect_equal(sum_oplus(one(e.g()), a), one(e.g()), "1⊕a = 1");
    }));
    return c;
}

// Least element among `candidates` that lie above (or below) every member.
std::optional<FuzzySubset> extremal_bound(const std::vector<FuzzySubset>& candidates,
                                          const std::vector<FuzzySubset>& members, bool upper) {
    std::vector<const FuzzySubset*> bounds;
    for (const auto& c : candidates) {
        const bool ok = std::all_of(members.begin(), members.end(),
                                    [&](const FuzzySubset& m) { return upper ? leq(m, c) : leq(c, m); });
        if (ok) bounds.push_back(&c);
    }
    for (const auto* b : bounds) {
        const bool extremal = std::all_of(bounds.begin(), bounds.end(),
                                          [&](const FuzzySubset* o) { return upper ? leq(*b, *o) : leq(*o, *b); });
        if (extremal) return *b;
    }
    return std::nullopt;
}

void add_kinded(std::vector<Law>& laws, const std::string& base, const std::string& title,
                std::vector<Clause> clauses, Gate gate = {}) {
    for (auto kind : {IdealKind::left, IdealKind::right, IdealKind::two_sided}) {
        Law law;
        law.id = base + "-" + to_string(kind);
        law.title = title;
        law.kind = kind;
        law.family_label = to_string(kind);
        law.gate = gate;
        law.clauses = clauses;
        laws.push_back(std::move(law));
    }
}

VerifyReport run_regularity(const Law& law, const LawContext& ctx);

std::vector<Law> build_laws() {
    std::vector<Law> laws;

    add_kinded(laws, "prop-3.2", "sum of ideals is an ideal",
               {binary("sum-closed", [](const Env& e, const auto& a, const auto& b) {
                   return expect_member(e, sum_oplus(a, b), "a⊕b");
               })});
    add_kinded(laws, "prop-3.3.i", "sum is commutative",
               {binary("sum-commutative", [](const Env&, const auto& a, const auto& b) {
                   return expect_equal(sum_oplus(a, b), sum_oplus(b, a), "a⊕b = b⊕a");
               })});
    add_kinded(laws, "prop-3.3.ii", "sum is associative",
               {ternary("sum-associative", [](const Env&, const auto& a, const auto& b, const auto& c) {
                   return expect_equal(sum_oplus(sum_oplus(a, b), c), sum_oplus(a, sum_oplus(b, c)),
                                       "(a⊕b)⊕c = a⊕(b⊕c)");
               })});
    add_kinded(laws, "prop-3.3.iii", "theta is the identity of the sum",
               {theta_in_family(), unary("theta-identity", [](const Env& e, const auto& a) {
                    const auto z = theta(e.g());
                    return first_of([&] { return expect_equal(sum_oplus(z, a), a, "θ⊕a = a"); },
                                    [&] { return expect_equal(sum_oplus(a, z), a, "a⊕θ = a"); });
                })});
    add_kinded(laws, "prop-3.3.iv", "sum is idempotent",
               {unary("sum-idempotent",
                      [](const Env&, const auto& a) { return expect_equal(sum_oplus(a, a), a, "a⊕a = a"); })});
    add_kinded(laws, "prop-3.3.v", "sum contains its left operand",
               {binary("sum-extensive", [](const Env&, const auto& a, const auto& b) {
                   return expect_leq(a, sum_oplus(a, b), "a ≤ a⊕b");
               })});
    add_kinded(laws, "prop-3.3.vi", "sum is monotone",
               {ternary("sum-monotone", [](const Env&, const auto& a, const auto& b, const auto& c) -> Found {
                   if (!leq(a, b)) return std::nullopt;
                   return expect_leq(sum_oplus(a, c), sum_oplus(b, c), "a ≤ b implies a⊕c ≤ b⊕c");
               })});
    add_kinded(laws, "prop-3.4", "composition of ideals is an ideal",
               {binary("compose-closed", [](const Env& e, const auto& a, const auto& b) {
                   return expect_member(e, compose(a, b), "a∘b");
               })});
    add_kinded(laws, "prop-3.5", "product is contained in composition",
               {binary("product-below-compose", [](const Env&, const auto& a, const auto& b) {
                   return expect_leq(gamma_product(a, b), compose(a, b), "aΓb ≤ a∘b");
               })});

    {
        Law law;
        law.id = "prop-3.6";
        law.title = "product of a right and a left ideal is contained in their intersection";
        law.family_label = "right x left";
        law.clauses = {binary(
            "product-below-meet",
            [](const Env&, const auto& r, const auto& l) {
                return expect_leq(gamma_product(r, l), meet(r, l), "rΓl ≤ r∩l");
            },
            Shape::right_left)};
        laws.push_back(std::move(law));
    }
    {
        Law law;
        law.id = "thm-3.7";
        law.title = "multiplicatively regular iff product equals intersection for right x left ideals";
        law.family_label = "right x left";
        law.clauses = {binary(
                           "product-equals-meet",
                           [](const Env&, const auto& r, const auto& l) {
                               return expect_equal(gamma_product(r, l), meet(r, l), "rΓl = r∩l");
                           },
                           Shape::right_left),
                       nullary("regular", [](const Env& e) -> Found {
                           const auto reg = is_multiplicatively_regular(e.g());
                           if (reg.regular) return std::nullopt;
                           return Violation{reg.failing->index, "no (x,γ1,γ2)", "c = cγ1xγ2c",
                                            "element without a regularity witness"};
                       })};
        law.custom = run_regularity;
        laws.push_back(std::move(law));
    }
    {
        Law law;
        law.id = "prop-3.8";
        law.title = "product ≤ composition ≤ intersection ≤ operands for ideals";
        law.kind = IdealKind::two_sided;
        law.family_label = to_string(IdealKind::two_sided);
        law.clauses = {binary("containment-chain", [](const Env&, const auto& a, const auto& b) {
            const auto product = gamma_product(a, b);
            const auto composed = compose(a, b);
            const auto both = meet(a, b);
            return first_of([&] { return expect_leq(product, composed, "aΓb ≤ a∘b"); },
                            [&] { return expect_leq(composed, both, "a∘b ≤ a∩b"); },
                            [&] { return expect_leq(both, a, "a∩b ≤ a"); },
                            [&] { return expect_leq(both, b, "a∩b ≤ b"); });
        })};
        laws.push_back(std::move(law));
    }
    add_kinded(laws, "prop-3.9", "product below an ideal iff composition below it",
               {ternary("absorption-equivalence", [](const Env&, const auto& a, const auto& b, const auto& c) -> Found {
                   const bool by_product = leq(gamma_product(a, b), c);
                   const bool by_compose = leq(compose(a, b), c);
                   if (by_product == by_compose) return std::nullopt;
                   return Violation{std::nullopt, by_product ? "aΓb ≤ c" : "aΓb ≰ c", by_compose ? "a∘b ≤ c" : "a∘b ≰ c",
                                    "aΓb ≤ c iff a∘b ≤ c"};
               })});
    add_kinded(laws, "prop-3.10.i", "composition is associative",
               {ternary("compose-associative", [](const Env&, const auto& a, const auto& b, const auto& c) {
                   return expect_equal(compose(compose(a, b), c), compose(a, compose(b, c)), "(a∘b)∘c = a∘(b∘c)");
               })});
    add_kinded(laws, "prop-3.10.ii", "composition is monotone",
               {ternary("compose-monotone", [](const Env&, const auto& a, const auto& b, const auto& c) -> Found {
                   if (!leq(a, b)) return std::nullopt;
                   return expect_leq(compose(a, c), compose(b, c), "a ≤ b implies a∘c ≤ b∘c");
               })});
    add_kinded(
        laws, "prop-3.10.iii", "composition is commutative over a commutative structure",
        {binary("compose-commutative",
                [](const Env&, const auto& a, const auto& b) {
                    return expect_equal(compose(a, b), compose(b, a), "a∘b = b∘a");
                })},
        [](const Env& e) -> std::optional<std::string> {
            if (is_commutative(e.g())) return std::nullopt;
            return "structure is not commutative";
        });
    for (auto kind : {IdealKind::left, IdealKind::right, IdealKind::two_sided}) {
        Law law;
        law.id = "prop-3.10.iv-" + to_string(kind);
        law.title = "1 is an identity for composition";
        law.kind = kind;
        law.family_label = to_string(kind);
        law.gate = [](const Env& e) { return unity_gate(e.g(), e.kind); };
        law.clauses = {one_in_family(), unary("one-identity", [](const Env& e, const auto& a) {
                           const auto u = one(e.g());
                           return first_of(
                               [&]() -> Found {
                                   if (e.kind == IdealKind::right) return std::nullopt;
                                   return expect_equal(compose(u, a), a, "1∘a = a");
                               },
                               [&]() -> Found {
                                   if (e.kind == IdealKind::left) return std::nullopt;
                                   return expect_equal(compose(a, u), a, "a∘1 = a");
                               });
                       })};
        laws.push_back(std::move(law));
    }
    add_kinded(laws, "prop-3.11", "composition distributes over sum",
               {ternary("left-distributive",
                        [](const Env&, const auto& a, const auto& b, const auto& c) {
                            return expect_equal(compose(a, sum_oplus(b, c)), sum_oplus(compose(a, b), compose(a, c)),
                                                "a∘(b⊕c) = (a∘b)⊕(a∘c)");
                        }),
                ternary("right-distributive", [](const Env&, const auto& a, const auto& b, const auto& c) {
                    return expect_equal(compose(sum_oplus(b, c), a), sum_oplus(compose(b, a), compose(c, a)),
                                        "(b⊕c)∘a = (b∘a)⊕(c∘a)");
                })});
    for (auto kind : {IdealKind::left, IdealKind::right}) {
        Law law;
        law.id = "thm-3.12-" + to_string(kind);
        law.title = "zero-sum free hemiring under sum and composition with infinite element 1";
        law.kind = kind;
        law.family_label = to_string(kind);
        law.clauses = hemiring_clauses();
        laws.push_back(std::move(law));
    }
    {
        Law law;
        law.id = "cor-3.13";
        law.title = "ideals form a zero-sum free simple semiring";
        law.kind = IdealKind::two_sided;
        law.family_label = to_string(IdealKind::two_sided);
        law.gate = [](const Env& e) { return unity_gate(e.g(), IdealKind::two_sided); };
        law.clauses = hemiring_clauses();
        law.clauses.push_back(unary("one-identity", [](const Env& e, const auto& a) {
            const auto u = one(e.g());
            return first_of([&] { return expect_equal(compose(u, a), a, "1∘a = a"); },
                            [&] { return expect_equal(compose(a, u), a, "a∘1 = a"); });
        }));
        laws.push_back(std::move(law));
    }
    add_kinded(laws, "lemma-3.14", "intersection of a nonempty family of ideals is an ideal",
               {subfamily("meet-closed", [](const Env& e, const std::vector<FuzzySubset>& members) {
                   return expect_member(e, meet_family(members), "∩ of " + std::to_string(members.size()) + " members");
               })});
    add_kinded(
        laws, "thm-3.15", "sum is the least upper bound and intersection the greatest lower bound",
        {binary("sum-is-least-upper-bound",
                [](const Env& e, const auto& a, const auto& b) -> Found {
                    const auto s = sum_oplus(a, b);
                    if (auto v = expect_member(e, s, "a⊕b")) return v;
                    if (auto v = first_of([&] { return expect_leq(a, s, "a ≤ a⊕b"); },
                                          [&] { return expect_leq(b, s, "b ≤ a⊕b"); }))
                        return v;
                    for (const auto& psi : e.family()) {
                        if (leq(a, psi) && leq(b, psi)) {
                            if (auto v = expect_leq(s, psi, "a⊕b ≤ every member above a and b (" + psi.to_string() + ")"))
                                return v;
                        }
                    }
                    return std::nullopt;
                }),
         binary("meet-is-greatest-lower-bound", [](const Env& e, const auto& a, const auto& b) -> Found {
             const auto m = meet(a, b);
             if (auto v = expect_member(e, m, "a∩b")) return v;
             for (const auto& phi : e.family()) {
                 if (leq(phi, a) && leq(phi, b)) {
                     if (auto v = expect_leq(phi, m, "every member below a and b (" + phi.to_string() + ") ≤ a∩b"))
                         return v;
                 }
             }
             return std::nullopt;
         })});
    add_kinded(
        laws, "thm-3.16", "ideals form a complete lattice",
        {nullary("one-is-greatest",
                 [](const Env& e) -> Found {
                     const auto u = one(e.g());
                     if (auto v = expect_member(e, u, "1")) return v;
                     for (const auto& mu : e.family()) {
                         if (auto v = expect_leq(mu, u, "every member ≤ 1")) return v;
                     }
                     return std::nullopt;
                 }),
         subfamily("lub-is-iterated-sum",
                   [](const Env& e, const std::vector<FuzzySubset>& members) -> Found {
                       FuzzySubset joined = members.front();
                       for (std::size_t i = 1; i < members.size(); ++i) joined = sum_oplus(joined, members[i]);
                       const auto lub = extremal_bound(e.family(), members, true);
                       if (!lub) return Violation{std::nullopt, "no least upper bound", joined.to_string(), "lub exists"};
                       return expect_equal(*lub, joined, "lub = iterated ⊕");
                   }),
         subfamily("glb-is-iterated-meet", [](const Env& e, const std::vector<FuzzySubset>& members) -> Found {
             const auto met = meet_family(members);
             const auto glb = extremal_bound(e.family(), members, false);
             if (!glb) return Violation{std::nullopt, "no greatest lower bound", met.to_string(), "glb exists"};
             return expect_equal(*glb, met, "glb = iterated ∩");
         })});
    add_kinded(
        laws, "prop-3.17", "lattice of ideals is modular when every member is a k-ideal",
        {ternary("modular-law",
                 [](const Env&, const auto& a, const auto& b, const auto& c) -> Found {
                     if (!leq(a, c)) return std::nullopt;
                     return expect_equal(sum_oplus(a, meet(b, c)), meet(sum_oplus(a, b), c),
                                         "a ≤ c implies a⊕(b∩c) = (a⊕b)∩c");
                 }),
         ternary("cancellation", [](const Env&, const auto& a, const auto& b, const auto& c) -> Found {
             if (!leq(a, c) || meet(b, a) != meet(b, c) || sum_oplus(b, a) != sum_oplus(b, c)) return std::nullopt;
             return expect_equal(a, c, "b∩a = b∩c, b⊕a = b⊕c, a ≤ c imply a = c");
         })},
        [](const Env& e) -> std::optional<std::string> {
            for (const auto& mu : e.family()) {
                if (!classify(mu).is_k(e.kind)) return "member " + mu.to_string() + " is not a k-ideal";
            }
            return std::nullopt;
        });
    return laws;
}

const std::vector<Law>& laws() {
    static const std::vector<Law> table = build_laws();
    return table;
}

const Law& find_law(std::string_view id) {
    for (const auto& law : laws()) {
        if (law.id == id) return law;
    }
    throw UnknownLaw(std::string(id));
}

const Clause& find_clause(const Law& law, const std::string& name) {
    for (const auto& c : law.clauses) {
        if (c.name == name) return c;
    }
    throw UnknownLaw(law.id + "/" + name);
}

// Both directions of the regularity characterization, plus the crisp argument
// behind the converse.
VerifyReport run_regularity(const Law& law, const LawContext& ctx) {
    const auto& g = ctx.structure();
    VerifyReport report;
    report.law_id = law.id;
    report.title = law.title;
    report.universe = universe_of(law, ctx);

    const auto& equality = find_clause(law, "product-equals-meet");
    const auto regularity = is_multiplicatively_regular(g);

    const Env env{ctx, IdealKind::left};
    const auto on_chain = run_clause(equality, env);
    report.checked_count += on_chain.checked + 1;

    std::optional<LawContext> boolean_ctx;
    ClauseOutcome on_boolean = on_chain;
    if (ctx.chain() != Chain::boolean()) {
        boolean_ctx.emplace(g, Chain::boolean(), ctx.options());
        on_boolean = run_clause(equality, Env{*boolean_ctx, IdealKind::left});
        report.checked_count += on_boolean.checked;
    }

    bool crisp = true;
    const auto rights = enumerate_crisp_ideals(g, IdealKind::right, ctx.options().budget);
    const auto lefts = enumerate_crisp_ideals(g, IdealKind::left, ctx.options().budget);
    for (const auto& r : rights)
        for (const auto& l : lefts)
            if (!(r & l).subset_of(crisp_product(g, r, l))) crisp = false;
    report.checked_count += rights.size() * lefts.size();

    const bool equal_on_chain = !on_chain.witness;
    const bool equal_on_boolean = !on_boolean.witness;
    report.notes = {{"regular", regularity.regular ? "true" : "false"},
                    {"product-equals-meet-on-chain", equal_on_chain ? "true" : "false"},
                    {"product-equals-meet-on-{0,1}", equal_on_boolean ? "true" : "false"},
                    {"crisp-intersection-in-product", crisp ? "true" : "false"}};

    const bool forward = !regularity.regular || equal_on_chain;
    const bool converse = regularity.regular == equal_on_boolean;
    const bool crisp_agrees = crisp == equal_on_boolean;
    report.outcome = forward && converse && crisp_agrees ? Outcome::pass : Outcome::fail;

    if (!forward) {
        report.witness = on_chain.witness;
    } else if (on_boolean.witness) {
        report.witness = on_boolean.witness;
    } else if (!regularity.regular) {
        report.witness = Witness{"regular", {}, regularity.failing->index, "no (x,γ1,γ2)", "c = cγ1xγ2c",
                                 "element without a regularity witness"};
    }
    return report;
}

bool id_matches(const std::string& id, const std::string& request) {
    if (request == "all" || id == request) return true;
    if (id.size() <= request.size() || id.compare(0, request.size(), request) != 0) return false;
    const char next = id[request.size()];
    return next == '.' || next == '-';
}

} // namespace

std::vector<LawInfo> law_table() {
    std::vector<LawInfo> out;
    for (const auto& law : laws()) out.push_back({law.id, law.title});
    return out;
}

std::vector<std::string> expand_law_ids(std::span<const std::string> requested) {
    std::vector<std::string> out;
    for (const auto& req : requested) {
        bool any = false;
        for (const auto& law : laws()) {
            if (id_matches(law.id, req)) {
                out.push_back(law.id);
                any = true;
            }
        }
        if (!any) throw UnknownLaw(req);
    }
    return out;
}

VerifyReport check_law(std::string_view id, const LawContext& ctx) {
    const auto& law = find_law(id);
    return law.custom ? law.custom(law, ctx) : run_generic(law, ctx);
}

VerifyReport check_law(std::string_view id, const GammaSemiring& g, const Chain& chain, const VerifyOptions& options) {
    find_law(id); // fail fast before enumerating
    return check_law(id, LawContext(g, chain, options));
}

std::vector<VerifyReport> run_suite(const LawContext& ctx, std::span<const std::string> law_ids) {
    std::vector<VerifyReport> out;
    for (const auto& id : expand_law_ids(law_ids)) out.push_back(check_law(id, ctx));
    return out;
}

std::vector<VerifyReport> run_suite(const GammaSemiring& g, const Chain& chain, std::span<const std::string> law_ids,
                                    const VerifyOptions& options) {
    const auto ids = expand_law_ids(law_ids);
    if (ids.empty()) return {};
    const LawContext ctx(g, chain, options);
    std::vector<VerifyReport> out;
    for (const auto& id : ids) out.push_back(check_law(id, ctx));
    return out;
}

bool suite_passed(std::span<const VerifyReport> reports) {
    return std::none_of(reports.begin(), reports.end(), [](const VerifyReport& r) { return r.outcome == Outcome::fail; });
}

bool replay_witness(const VerifyReport& report, const LawContext& ctx) {
    if (!report.witness) return false;
    const auto& law = find_law(report.law_id);
    const auto& clause = find_clause(law, report.witness->clause);
    std::vector<const FuzzySubset*> ops;
    for (const auto& op : report.witness->operands) ops.push_back(&op);
    return clause.check(Env{ctx, law.kind}, ops).has_value();
}

} // namespace gammafuzz
